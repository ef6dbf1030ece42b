// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FSWGNN_ASSIGNMENT_H_
#define FSWGNN_ASSIGNMENT_H_

#include <span>
#include <vector>

#include "fswgnn/common.h"

namespace fswgnn {

struct Assignment {
  double value = 0.0;
  // Row i is matched to column permutation[i].
  std::vector<int> permutation;
};

// Minimum-cost perfect matching of a square, non-negative, finite cost matrix
// (Hungarian method, O(k^3)). Among optimal matchings the lexicographically
// smallest permutation is returned. `value` is the sum of the matched entries
// taken in row order. Throws ValidationError for empty, non-square, negative
// or non-finite input.
Assignment AssignmentMinCost(const Matrix& cost);

// Optimal value only, skipping the lexicographic tie-break.
double AssignmentMinValue(const Matrix& cost);

// 1D optimal transport between equal-size multisets: sum_j |a_(j) - b_(j)|
// over the sorted samples. Throws ValidationError if the sizes differ.
double Wasserstein1d(std::span<const double> a, std::span<const double> b);

}  // namespace fswgnn

#endif  // FSWGNN_ASSIGNMENT_H_
