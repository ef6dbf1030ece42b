// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FSWGNN_GRAPH_H_
#define FSWGNN_GRAPH_H_

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fswgnn/common.h"

namespace fswgnn {

// Undirected edge, stored with first < second.
struct Edge {
  int first = 0;
  int second = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph with one feature vector per vertex.
//
// Immutable after construction. The constructor normalizes every edge to
// (min, max), sorts the edge list and rejects self-loops, duplicates,
// out-of-range endpoints and empty vertex sets.
class Graph {
 public:
  // `features` holds one row per vertex and must have num_vertices rows and at
  // least one column.
  Graph(int num_vertices, std::vector<std::pair<int, int>> edges,
        Matrix features);

  int num_vertices() const { return num_vertices_; }
  int feature_dim() const { return static_cast<int>(features_.cols()); }
  std::span<const Edge> edges() const { return edges_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Matrix& features() const { return features_; }

  // Neighbors of v in ascending order.
  std::span<const int> neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  // Dense 0/1 adjacency matrix.
  Matrix adjacency() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int num_vertices_;
  std::vector<Edge> edges_;
  Matrix features_;
  // CSR neighbor lists.
  std::vector<int> offsets_;
  std::vector<int> adjacent_;
};

// Ordered list of graphs sharing one feature dimension.
struct GraphCorpus {
  std::vector<Graph> graphs;
  // Empty, or one entry per graph.
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(graphs.size()); }
  // Throws ValidationError if the graphs disagree on feature dimension or the
  // label count does not match.
  void Validate() const;
};

// Graph with vertex v of `g` renamed to perm[v]. `perm` must be a
// permutation of 0..n-1.
Graph Permute(const Graph& g, std::span<const int> perm);

// Vertices of g1 keep their indices, vertices of g2 are shifted by
// g1.num_vertices().
Graph DisjointUnion(const Graph& g1, const Graph& g2);

// JSON graph format:
//   {"num_vertices": n, "edges": [[i, j], ...], "features": [[...], ...]}
Graph GraphFromJson(const nlohmann::json& doc);
nlohmann::ordered_json GraphToJson(const Graph& g);
Graph ParseGraph(std::string_view text);

// A corpus is a JSON array of graph objects. An object may carry an optional
// "label" string.
GraphCorpus CorpusFromJson(const nlohmann::json& doc);
nlohmann::ordered_json CorpusToJson(const GraphCorpus& corpus);

Graph LoadGraphFile(const std::string& path);
GraphCorpus LoadCorpusFile(const std::string& path);

}  // namespace fswgnn

#endif  // FSWGNN_GRAPH_H_
