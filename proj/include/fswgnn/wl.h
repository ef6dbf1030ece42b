// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FSWGNN_WL_H_
#define FSWGNN_WL_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "fswgnn/graph.h"

namespace fswgnn {

// Per-iteration vertex colors of 1-WL refinement. colors[t][v] is the color of
// v after t rounds. Within one iteration colors are numbered 0, 1, ... by first
// occurrence in vertex order; ids are not comparable across iterations.
struct ColorAssignment {
  std::vector<std::vector<int>> colors;

  int iterations() const { return static_cast<int>(colors.size()) - 1; }
  int num_colors(int t) const;
};

// Runs `iterations` rounds of color refinement. Round 0 groups vertices by
// bitwise-equal feature vectors; round t recolors v by
// (color_{t-1}(v), sorted multiset of neighbor colors).
ColorAssignment WlColors(const Graph& g, int iterations);

// True iff the two graphs receive the same color histogram at every round
// 0..max(n1, n2), with refinement run on their disjoint union.
bool WlEquivalent(const Graph& g1, const Graph& g2);

struct StablePartition {
  // Classes ordered by color id; each class lists vertices ascending.
  std::vector<std::vector<int>> classes;
  // Refinement rounds until the color count stopped growing.
  int rounds = 0;
};

// The coarsest stable partition, i.e. the refinement fixpoint.
StablePartition ComputeStablePartition(const Graph& g);

// Checks the stability conditions directly: inside every class all vertices
// share a feature vector and, for every class l, the same number of neighbors
// in l. `classes` must partition 0..n-1.
bool IsStablePartition(const Graph& g, const std::vector<std::vector<int>>& classes);

// Rooted unrolling of a vertex neighborhood. Subtrees are shared: every node
// for (vertex u, depth k) inside one forest is a single object, so a depth-K
// tree costs O(n K) memory even though its expansion is exponential.
struct TreeNode {
  Vector feature;
  std::vector<std::shared_ptr<const TreeNode>> children;
  int depth = 1;
};
using ComputationTree = std::shared_ptr<const TreeNode>;

// Depth-K computation tree T_v^K. T_v^1 is the lone vertex; T_v^K hangs T_u^{K-1}
// below the root for every neighbor u of v (the parent included).
// Throws ValidationError if depth < 1 or v is out of range.
ComputationTree MakeComputationTree(const Graph& g, int v, int depth);

// T_v^K for every vertex, sharing subtrees across roots.
std::vector<ComputationTree> MakeComputationTrees(const Graph& g, int depth);

// Node count of the expanded tree (saturates at UINT64_MAX).
std::uint64_t ExpandedSize(const ComputationTree& tree);

}  // namespace fswgnn

#endif  // FSWGNN_WL_H_
