// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FSWGNN_TMD_H_
#define FSWGNN_TMD_H_

#include <span>
#include <vector>

#include "fswgnn/graph.h"
#include "fswgnn/wl.h"

namespace fswgnn {

// Computation trees grow exponentially in depth; deeper requests are refused.
inline constexpr int kMaxTmdDepth = 14;

// Single node with the zero feature of dimension `feature_dim`.
ComputationTree BlankTree(int feature_dim);

// `trees` followed by target - |trees| blank trees. Throws ValidationError if
// |trees| > target.
std::vector<ComputationTree> AugmentPad(std::span<const ComputationTree> trees,
                                        int target, int feature_dim);

// Recursive tree distance with unit depth weight:
//   TD(a, b) = |x_a - x_b|_1 + W(children(a), children(b)),
// where W is the optimal assignment cost between the two child multisets,
// each padded with blank trees to the larger size. When both roots are
// leaves the W term is absent; a subtree missing on one side is matched
// against a blank. Subtree pairs are memoized by node identity.
double TreeDistance(const ComputationTree& a, const ComputationTree& b);

// W over the depth-K computation trees of all vertices, the smaller graph
// padded with blank trees. Throws ValidationError on dimension mismatch or
// depth outside [1, kMaxTmdDepth].
double Tmd(const Graph& g1, const Graph& g2, int depth);

}  // namespace fswgnn

#endif  // FSWGNN_TMD_H_
