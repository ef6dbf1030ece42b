// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FSWGNN_GENERATORS_H_
#define FSWGNN_GENERATORS_H_

#include <optional>
#include <string_view>

#include "fswgnn/graph.h"

namespace fswgnn {

enum class Topology { kRing, kCrossRing, kCliquePath };

std::optional<Topology> ParseTopology(std::string_view name);
std::string_view TopologyName(Topology topology);

struct TransferGraph {
  Graph graph;
  int source;
  int target;
};

// Long-range graph-transfer instance with source and target at shortest-path
// distance exactly `radius`. Features are 2-dimensional: the source carries
// (1, 0), the target (0, 1) and every other vertex the blank (1, 1).
//
//   ring        cycle on 2r vertices, source 0, target r.
//   crossring   the same cycle plus a rung {i, 2r - i} for 0 < i < r, joining
//               the two vertices at distance i on either side of the source.
//               Rungs connect vertices of equal distance, so distances from the
//               source are those of the plain ring.
//   cliquepath  clique on vertices 0..r (source 0), plus a path
//               r -> r+1 -> ... -> 2r-1 (target 2r-1) of length r-1.
//
// Throws ValidationError if radius < 2.
TransferGraph MakeTransferGraph(Topology topology, int radius);

// Complete binary tree of depth `radius` (2^(r+1) - 1 vertices, heap order:
// children of i are 2i+1 and 2i+2). Features have dimension 2^r + 1: leaf k
// carries the one-hot e_k, the root carries the query e_0 + e_{2^r}, internal
// vertices the all-ones blank. Throws ValidationError unless 2 <= radius <= 12.
Graph MakeNeighborsMatch(int radius);

// Every edge subset of the complete graph on n vertices, all vertices carrying
// `feature`. Subsets are enumerated by bitmask over the pairs (i, j), i < j,
// in lexicographic order. Throws ValidationError unless 1 <= n <= 6.
GraphCorpus EnumerateSmallGraphs(int n, const Vector& feature);

// Cycle C_n and path P_n with a constant feature; handy fixtures.
Graph MakeCycle(int n, const Vector& feature);
Graph MakePath(int n, const Vector& feature);

}  // namespace fswgnn

#endif  // FSWGNN_GENERATORS_H_
