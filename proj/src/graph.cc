// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#include "fswgnn/graph.h"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fswgnn {

Graph::Graph(int num_vertices, std::vector<std::pair<int, int>> edges,
             Matrix features)
    : num_vertices_(num_vertices), features_(std::move(features)) {
  if (num_vertices_ < 1) {
    throw ValidationError("graph must have at least one vertex");
  }
  if (features_.rows() != num_vertices_) {
    throw ValidationError("feature matrix has " +
                          std::to_string(features_.rows()) + " rows, expected " +
                          std::to_string(num_vertices_));
  }
  if (features_.cols() < 1) {
    throw ValidationError("feature dimension must be at least 1");
  }
  if (!features_.allFinite()) {
    throw ValidationError("features must be finite");
  }
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= num_vertices_ || b >= num_vertices_) {
      throw ValidationError("edge [" + std::to_string(a) + "," +
                            std::to_string(b) + "]: index out of range");
    }
    if (a == b) {
      throw ValidationError("self-loop at vertex " + std::to_string(a));
    }
    edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw ValidationError("duplicate edge [" + std::to_string(dup->first) +
                          "," + std::to_string(dup->second) + "]");
  }

  std::vector<int> degree(num_vertices_, 0);
  for (const Edge& e : edges_) {
    ++degree[e.first];
    ++degree[e.second];
  }
  offsets_.assign(num_vertices_ + 1, 0);
  for (int v = 0; v < num_vertices_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacent_.resize(offsets_.back());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacent_[fill[e.first]++] = e.second;
    adjacent_[fill[e.second]++] = e.first;
  }
  for (int v = 0; v < num_vertices_; ++v) {
    std::sort(adjacent_.begin() + offsets_[v], adjacent_.begin() + offsets_[v + 1]);
  }
}

std::span<const int> Graph::neighbors(int v) const {
  return std::span<const int>(adjacent_).subspan(offsets_[v],
                                                 offsets_[v + 1] - offsets_[v]);
}

Matrix Graph::adjacency() const {
  Matrix a = Matrix::Zero(num_vertices_, num_vertices_);
  for (const Edge& e : edges_) {
    a(e.first, e.second) = 1.0;
    a(e.second, e.first) = 1.0;
  }
  return a;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_ &&
         a.features_.cols() == b.features_.cols() && a.features_ == b.features_;
}

void GraphCorpus::Validate() const {
  if (!labels.empty() && labels.size() != graphs.size()) {
    throw ValidationError("corpus has " + std::to_string(labels.size()) +
                          " labels for " + std::to_string(graphs.size()) +
                          " graphs");
  }
  for (const Graph& g : graphs) {
    if (g.feature_dim() != graphs.front().feature_dim()) {
      throw ValidationError("corpus graphs disagree on feature dimension");
    }
  }
}

Graph Permute(const Graph& g, std::span<const int> perm) {
  const int n = g.num_vertices();
  if (static_cast<int>(perm.size()) != n) {
    throw ValidationError("permutation size does not match vertex count");
  }
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) {
      throw ValidationError("not a permutation");
    }
    seen[p] = true;
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.first], perm[e.second]);
  Matrix features(n, g.feature_dim());
  for (int v = 0; v < n; ++v) features.row(perm[v]) = g.features().row(v);
  return Graph(n, std::move(edges), std::move(features));
}

Graph DisjointUnion(const Graph& g1, const Graph& g2) {
  if (g1.feature_dim() != g2.feature_dim()) {
    throw ValidationError("feature-dimension mismatch: " +
                          std::to_string(g1.feature_dim()) + " vs " +
                          std::to_string(g2.feature_dim()));
  }
  const int n1 = g1.num_vertices();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g1.num_edges() + g2.num_edges());
  for (const Edge& e : g1.edges()) edges.emplace_back(e.first, e.second);
  for (const Edge& e : g2.edges()) edges.emplace_back(e.first + n1, e.second + n1);
  Matrix features(n1 + g2.num_vertices(), g1.feature_dim());
  features << g1.features(), g2.features();
  return Graph(n1 + g2.num_vertices(), std::move(edges), std::move(features));
}

namespace {

int ReadInt(const nlohmann::json& value, const char* what) {
  if (!value.is_number_integer()) {
    throw ValidationError(std::string("malformed document: ") + what +
                          " must be an integer");
  }
  return value.get<int>();
}

}  // namespace

Graph GraphFromJson(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw ValidationError("malformed document: graph must be a JSON object");
  }
  for (const char* key : {"num_vertices", "edges", "features"}) {
    if (!doc.contains(key)) {
      throw ValidationError(std::string("malformed document: missing key \"") +
                            key + "\"");
    }
  }
  const int n = ReadInt(doc["num_vertices"], "num_vertices");
  if (n < 1) {
    throw ValidationError("graph needs at least one vertex, got num_vertices = " +
                          std::to_string(n));
  }
  const auto& edge_doc = doc["edges"];
  if (!edge_doc.is_array()) {
    throw ValidationError("malformed document: edges must be an array");
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : edge_doc) {
    if (!e.is_array() || e.size() != 2) {
      throw ValidationError("malformed document: edge must be an [i, j] pair");
    }
    edges.emplace_back(ReadInt(e[0], "edge endpoint"),
                       ReadInt(e[1], "edge endpoint"));
  }
  const auto& feat_doc = doc["features"];
  if (!feat_doc.is_array() || feat_doc.empty() || !feat_doc[0].is_array()) {
    throw ValidationError("malformed document: features must be an array of rows");
  }
  if (static_cast<int>(feat_doc.size()) != n) {
    throw ValidationError("features has " + std::to_string(feat_doc.size()) +
                          " rows for " + std::to_string(n) + " vertices");
  }
  const int d = static_cast<int>(feat_doc[0].size());
  Matrix features(n, d);
  for (int i = 0; i < n; ++i) {
    const auto& row = feat_doc[i];
    if (!row.is_array() || static_cast<int>(row.size()) != d) {
      throw ValidationError("ragged feature rows: row " + std::to_string(i) +
                            " has a different dimension");
    }
    for (int k = 0; k < d; ++k) {
      if (!row[k].is_number()) {
        throw ValidationError("malformed document: feature entries must be numbers");
      }
      features(i, k) = row[k].get<double>();
    }
  }
  return Graph(n, std::move(edges), std::move(features));
}

nlohmann::ordered_json GraphToJson(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["num_vertices"] = g.num_vertices();
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
  doc["edges"] = std::move(edges);
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < g.num_vertices(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int k = 0; k < g.feature_dim(); ++k) row.push_back(g.features()(i, k));
    rows.push_back(std::move(row));
  }
  doc["features"] = std::move(rows);
  return doc;
}

Graph ParseGraph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed document: ") + e.what());
  }
  return GraphFromJson(doc);
}

GraphCorpus CorpusFromJson(const nlohmann::json& doc) {
  if (!doc.is_array()) {
    throw ValidationError("malformed document: corpus must be a JSON array");
  }
  GraphCorpus corpus;
  bool any_label = false;
  for (const auto& item : doc) {
    corpus.graphs.push_back(GraphFromJson(item));
    if (item.contains("label")) {
      if (!item["label"].is_string()) {
        throw ValidationError("malformed document: label must be a string");
      }
      any_label = true;
      corpus.labels.push_back(item["label"].get<std::string>());
    } else {
      corpus.labels.emplace_back();
    }
  }
  if (!any_label) corpus.labels.clear();
  corpus.Validate();
  return corpus;
}

nlohmann::ordered_json CorpusToJson(const GraphCorpus& corpus) {
  auto doc = nlohmann::ordered_json::array();
  for (int i = 0; i < corpus.size(); ++i) {
    auto item = GraphToJson(corpus.graphs[i]);
    if (!corpus.labels.empty()) item["label"] = corpus.labels[i];
    doc.push_back(std::move(item));
  }
  return doc;
}

namespace {

nlohmann::json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path + ": malformed document: " + e.what());
  }
}

}  // namespace

Graph LoadGraphFile(const std::string& path) {
  return GraphFromJson(ReadJsonFile(path));
}

GraphCorpus LoadCorpusFile(const std::string& path) {
  return CorpusFromJson(ReadJsonFile(path));
}

}  // namespace fswgnn
