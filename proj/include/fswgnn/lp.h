// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FSWGNN_LP_H_
#define FSWGNN_LP_H_

#include "fswgnn/common.h"

namespace fswgnn {

// Standard-form linear program
//   minimize c^T x  subject to  A x = b,  x >= 0.
struct LpProblem {
  Vector objective;  // c
  Matrix equality;   // A
  Vector rhs;        // b

  int num_variables() const { return static_cast<int>(objective.size()); }
  int num_constraints() const { return static_cast<int>(equality.rows()); }
  // Throws ValidationError on inconsistent shapes or non-finite entries.
  void Validate() const;
};

struct LpSolution {
  double value = 0.0;
  Vector x;
  int iterations = 0;
};

struct LpOptions {
  int max_iterations = 200000;
  // Primal feasibility / phase-one residual tolerance.
  double feasibility_tol = 1e-9;
  // A reduced cost below -optimality_tol makes a column eligible to enter.
  double optimality_tol = 1e-11;
  double pivot_tol = 1e-10;
  // Pivots between refactorizations of the basis inverse.
  int refactor_every = 64;
};

class LpInfeasibleError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};
class LpUnboundedError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};
class LpIterationLimitError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

// Two-phase dense revised simplex with Bland's rule (smallest eligible index
// enters; ratio ties leave by smallest basic index), so degenerate problems
// terminate. Redundant equality rows are tolerated: their phase-one
// artificials stay basic at zero. Deterministic.
LpSolution SolveLp(const LpProblem& problem, const LpOptions& options = {});

}  // namespace fswgnn

#endif  // FSWGNN_LP_H_
