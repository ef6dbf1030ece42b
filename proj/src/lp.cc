// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#include "fswgnn/lp.h"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace fswgnn {

void LpProblem::Validate() const {
  if (equality.cols() != objective.size()) {
    throw ValidationError("LP: constraint matrix has " +
                          std::to_string(equality.cols()) + " columns for " +
                          std::to_string(objective.size()) + " variables");
  }
  if (equality.rows() != rhs.size()) {
    throw ValidationError("LP: constraint matrix has " +
                          std::to_string(equality.rows()) + " rows for " +
                          std::to_string(rhs.size()) + " right-hand sides");
  }
  if (!objective.allFinite() || !equality.allFinite() || !rhs.allFinite()) {
    throw ValidationError("LP: non-finite coefficients");
  }
}

namespace {

class RevisedSimplex {
 public:
  RevisedSimplex(const LpProblem& p, const LpOptions& options)
      : options_(options),
        rows_(p.num_constraints()),
        vars_(p.num_variables()),
        a_(rows_, vars_ + rows_),
        b_(p.rhs),
        basis_(rows_),
        is_basic_(vars_ + rows_, false) {
    // [A | I] with rows flipped so that b >= 0; the identity block holds the
    // phase-one artificials and doubles as the initial basis.
    a_.leftCols(vars_) = p.equality;
    a_.rightCols(rows_).setIdentity();
    for (int i = 0; i < rows_; ++i) {
      if (b_(i) < 0) {
        b_(i) = -b_(i);
        a_.row(i).head(vars_) *= -1.0;
      }
      basis_[i] = vars_ + i;
      is_basic_[vars_ + i] = true;
    }
    binv_ = Matrix::Identity(rows_, rows_);
    xb_ = b_;
  }

  LpSolution Solve(const Vector& objective) {
    Vector cost = Vector::Zero(vars_ + rows_);
    cost.tail(rows_).setOnes();
    Run(cost);
    const double infeasibility = cost.dot(Primal());
    if (infeasibility > options_.feasibility_tol * (1.0 + b_.lpNorm<1>())) {
      throw LpInfeasibleError("LP infeasible: phase-one residual " +
                              std::to_string(infeasibility));
    }
    DriveOutArtificials();
    pin_artificials_ = true;

    cost.setZero();
    cost.head(vars_) = objective;
    Run(cost);
    Refactor();

    LpSolution out;
    out.x = Primal().head(vars_);
    for (int j = 0; j < vars_; ++j) {
      if (out.x(j) < 0.0) out.x(j) = 0.0;
    }
    out.value = objective.dot(out.x);
    out.iterations = iterations_;
    return out;
  }

 private:
  Vector Primal() const {
    Vector x = Vector::Zero(vars_ + rows_);
    for (int i = 0; i < rows_; ++i) x(basis_[i]) = xb_(i);
    return x;
  }

  void Refactor() {
    if (rows_ == 0) return;
    Matrix basis_matrix(rows_, rows_);
    for (int i = 0; i < rows_; ++i) basis_matrix.col(i) = a_.col(basis_[i]);
    binv_ = basis_matrix.partialPivLu().inverse();
    xb_ = binv_ * b_;
    since_refactor_ = 0;
  }

  void Pivot(int row, int entering, const Vector& column) {
    const double theta = xb_(row) / column(row);
    xb_ -= theta * column;
    xb_(row) = theta;
    const Eigen::RowVectorXd pivot_row = binv_.row(row) / column(row);
    binv_.noalias() -= column * pivot_row;
    binv_.row(row) = pivot_row;
    is_basic_[basis_[row]] = false;
    is_basic_[entering] = true;
    basis_[row] = entering;
    ++since_refactor_;
  }

  // Minimizes cost over the current phase; only structural columns enter.
  void Run(const Vector& cost) {
    while (true) {
      if (++iterations_ > options_.max_iterations) {
        throw LpIterationLimitError("LP: iteration cap of " +
                                    std::to_string(options_.max_iterations) +
                                    " exceeded");
      }
      if (since_refactor_ >= options_.refactor_every) Refactor();

      Vector cost_basic(rows_);
      for (int i = 0; i < rows_; ++i) cost_basic(i) = cost(basis_[i]);
      const Vector duals = binv_.transpose() * cost_basic;

      int entering = -1;
      for (int j = 0; j < vars_; ++j) {
        if (is_basic_[j]) continue;
        if (cost(j) - duals.dot(a_.col(j)) < -options_.optimality_tol) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return;

      const Vector column = binv_ * a_.col(entering);
      int leaving = -1;
      bool leaving_pinned = false;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < rows_; ++i) {
        const bool pinned = pin_artificials_ && basis_[i] >= vars_ &&
                            std::abs(column(i)) > options_.pivot_tol;
        if (!pinned && column(i) <= options_.pivot_tol) continue;
        const double ratio = pinned ? 0.0 : std::max(xb_(i), 0.0) / column(i);
        if (ratio < best - 1e-13 ||
            (ratio <= best + 1e-13 && basis_[i] < basis_[leaving])) {
          best = std::min(best, ratio);
          leaving = i;
          leaving_pinned = pinned;
        }
      }
      if (leaving < 0) throw LpUnboundedError("LP unbounded");
      // A pinned artificial leaves at level zero even against a negative entry.
      if (leaving_pinned) xb_(leaving) = 0.0;
      Pivot(leaving, entering, column);
    }
  }

  // Artificials left in the basis at level zero are swapped for structural
  // columns where possible; those in redundant rows stay, pinned at zero.
  void DriveOutArtificials() {
    for (int r = 0; r < rows_; ++r) {
      if (basis_[r] < vars_) continue;
      const Eigen::RowVectorXd reduced_row = binv_.row(r) * a_.leftCols(vars_);
      int best = -1;
      double magnitude = 1e-7;
      for (int j = 0; j < vars_; ++j) {
        if (!is_basic_[j] && std::abs(reduced_row(j)) > magnitude) {
          magnitude = std::abs(reduced_row(j));
          best = j;
        }
      }
      if (best < 0) continue;
      xb_(r) = 0.0;
      Pivot(r, best, binv_ * a_.col(best));
    }
  }

  LpOptions options_;
  int rows_;
  int vars_;
  Matrix a_;
  Vector b_;
  std::vector<int> basis_;
  std::vector<bool> is_basic_;
  Matrix binv_;
  Vector xb_;
  int iterations_ = 0;
  int since_refactor_ = 0;
  // After phase one, basic artificials must stay at zero.
  bool pin_artificials_ = false;
};

}  // namespace

LpSolution SolveLp(const LpProblem& problem, const LpOptions& options) {
  problem.Validate();
  return RevisedSimplex(problem, options).Solve(problem.objective);
}

}  // namespace fswgnn
