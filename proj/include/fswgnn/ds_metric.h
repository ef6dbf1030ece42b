// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FSWGNN_DS_METRIC_H_
#define FSWGNN_DS_METRIC_H_

#include "fswgnn/graph.h"
#include "fswgnn/lp.h"

namespace fswgnn {

// Coupling in Pi(n, n~): non-negative n x n~ matrix with row sums 1/n and
// column sums 1/n~.
struct TransportPlan {
  Matrix coupling;
  double objective = 0.0;
};

// Largest absolute deviation of the plan's marginals from (1/n, 1/n~), or
// +inf if any entry is negative beyond -tol.
double MarginalError(const Matrix& coupling, double tol = 0.0);

struct DsResult {
  // |n - n~| + min over Pi of (adjacency mismatch + feature transport).
  double value = 0.0;
  TransportPlan plan;
};

// DS metric with entrywise l1 norms, solved exactly as the LP
//   min  sum(p + q) + sum_ij S_ij |x_i - x~_j|_1
//   s.t. S in Pi(n, n~),  (A S - S A~)_ij = p_ij - q_ij,  S, p, q >= 0.
// Throws ValidationError on feature-dimension mismatch and ComputationError
// if the LP fails.
DsResult DsMetricL1(const Graph& g1, const Graph& g2, const LpOptions& lp = {});

struct DsL2Options {
  // Stop once the Frank-Wolfe duality gap is at most tol.
  double tol = 1e-6;
  int max_iterations = 20000;
  // sqrt(|R|_F^2 + smoothing^2) replaces |R|_F so the gradient exists at R = 0.
  double smoothing = 1e-12;
};

struct DsL2Result {
  // Objective at the returned plan (including |n - n~|); an upper bound on
  // the true minimum, at most `gap` above it.
  double value = 0.0;
  double gap = 0.0;
  int iterations = 0;
  TransportPlan plan;
};

// DS metric with entrywise l2 (Frobenius) and Euclidean feature norms,
// approximated by pairwise Frank-Wolfe over Pi(n, n~) with exact line search.
// The linear minimization oracle is a transportation LP; the start point is
// the l1 optimum, so the result never exceeds the l1 value. Throws
// ComputationError if the gap does not reach tol within max_iterations.
DsL2Result DsMetricL2(const Graph& g1, const Graph& g2,
                      const DsL2Options& options = {});

}  // namespace fswgnn

#endif  // FSWGNN_DS_METRIC_H_
