// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#include "fswgnn/ds_metric.h"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

namespace fswgnn {

double MarginalError(const Matrix& coupling, double tol) {
  if (coupling.minCoeff() < -tol) return std::numeric_limits<double>::infinity();
  const double row_target = 1.0 / static_cast<double>(coupling.rows());
  const double col_target = 1.0 / static_cast<double>(coupling.cols());
  const double row_err = (coupling.rowwise().sum().array() - row_target).abs().maxCoeff();
  const double col_err = (coupling.colwise().sum().array() - col_target).abs().maxCoeff();
  return std::max(row_err, col_err);
}

namespace {

void CheckDims(const Graph& g1, const Graph& g2) {
  if (g1.feature_dim() != g2.feature_dim()) {
    throw ValidationError("feature-dimension mismatch: " +
                          std::to_string(g1.feature_dim()) + " vs " +
                          std::to_string(g2.feature_dim()));
  }
}

enum class Norm { kL1, kL2 };

Matrix FeatureCost(const Graph& g1, const Graph& g2, Norm norm) {
  Matrix cost(g1.num_vertices(), g2.num_vertices());
  for (int i = 0; i < g1.num_vertices(); ++i) {
    for (int j = 0; j < g2.num_vertices(); ++j) {
      const auto diff = g1.features().row(i) - g2.features().row(j);
      cost(i, j) = norm == Norm::kL1 ? diff.lpNorm<1>() : diff.norm();
    }
  }
  return cost;
}

// Rows 0..n-1: row sums; rows n..n+m-1: column sums. Plan entry (i, j) is
// variable i*m + j.
void AddMarginals(int n, int m, LpProblem& lp) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      lp.equality(i, i * m + j) = 1.0;
      lp.equality(n + j, i * m + j) = 1.0;
    }
  }
  lp.rhs.head(n).setConstant(1.0 / n);
  lp.rhs.segment(n, m).setConstant(1.0 / m);
}

Matrix Unflatten(const Vector& x, int n, int m) {
  Matrix s(n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) s(i, j) = x(i * m + j);
  }
  return s;
}

// argmin <cost, S> over Pi(n, m); returns a vertex of the polytope.
Matrix TransportVertex(const Matrix& cost) {
  const int n = static_cast<int>(cost.rows());
  const int m = static_cast<int>(cost.cols());
  LpProblem lp;
  lp.objective.resize(n * m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) lp.objective(i * m + j) = cost(i, j);
  }
  lp.equality = Matrix::Zero(n + m, n * m);
  lp.rhs = Vector::Zero(n + m);
  AddMarginals(n, m, lp);
  return Unflatten(SolveLp(lp).x, n, m);
}

}  // namespace

DsResult DsMetricL1(const Graph& g1, const Graph& g2, const LpOptions& options) {
  CheckDims(g1, g2);
  const int n = g1.num_vertices();
  const int m = g2.num_vertices();
  const int cells = n * m;
  const Matrix a1 = g1.adjacency();
  const Matrix a2 = g2.adjacency();
  const Matrix cost = FeatureCost(g1, g2, Norm::kL1);

  // Variables: plan S (cells), then p (cells), then q (cells).
  LpProblem lp;
  lp.objective = Vector::Ones(3 * cells);
  lp.equality = Matrix::Zero(n + m + cells, 3 * cells);
  lp.rhs = Vector::Zero(n + m + cells);
  AddMarginals(n, m, lp);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      const int cell = i * m + j;
      lp.objective(cell) = cost(i, j);
      const int row = n + m + cell;
      // (A1 S)_ij = sum_k A1(i,k) S(k,j)
      for (int k = 0; k < n; ++k) lp.equality(row, k * m + j) += a1(i, k);
      // (S A2)_ij = sum_k S(i,k) A2(k,j)
      for (int k = 0; k < m; ++k) lp.equality(row, i * m + k) -= a2(k, j);
      lp.equality(row, cells + cell) = -1.0;
      lp.equality(row, 2 * cells + cell) = 1.0;
    }
  }

  LpSolution solution;
  try {
    solution = SolveLp(lp, options);
  } catch (const ComputationError& e) {
    throw ComputationError(std::string("DS metric LP failed (n=") +
                           std::to_string(n) + ", n~=" + std::to_string(m) +
                           "): " + e.what());
  }
  DsResult out;
  out.plan.coupling = Unflatten(solution.x, n, m);
  out.plan.objective = solution.value;
  out.value = std::abs(n - m) + solution.value;
  return out;
}

DsL2Result DsMetricL2(const Graph& g1, const Graph& g2, const DsL2Options& options) {
  if (!(options.tol > 0.0)) throw ValidationError("tol must be positive");
  CheckDims(g1, g2);
  const Matrix a1 = g1.adjacency();
  const Matrix a2 = g2.adjacency();
  const Matrix cost = FeatureCost(g1, g2, Norm::kL2);
  const double delta2 = options.smoothing * options.smoothing;
  auto residual = [&](const Matrix& s) -> Matrix { return a1 * s - s * a2; };

  struct Atom {
    Matrix vertex;
    double weight;
  };
  Matrix plan = DsMetricL1(g1, g2).plan.coupling;
  std::vector<Atom> atoms{{plan, 1.0}};

  DsL2Result out;
  double gap = std::numeric_limits<double>::infinity();
  int it = 0;
  for (;; ++it) {
    const Matrix r = residual(plan);
    const double r_norm = std::sqrt(r.squaredNorm() + delta2);
    const Matrix grad = (a1.transpose() * r - r * a2.transpose()) / r_norm + cost;
    const Matrix toward = TransportVertex(grad);
    gap = grad.cwiseProduct(plan - toward).sum();
    if (gap <= options.tol) break;
    if (it >= options.max_iterations) {
      throw ComputationError("DS l2 Frank-Wolfe did not converge in " +
                             std::to_string(options.max_iterations) +
                             " iterations (gap " + std::to_string(gap) + ")");
    }

    std::size_t away = 0;
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      const double score = grad.cwiseProduct(atoms[k].vertex).sum();
      if (score > worst) {
        worst = score;
        away = k;
      }
    }
    const Matrix direction = toward - atoms[away].vertex;
    const double max_step = atoms[away].weight;

    // phi(g) = sqrt(c0 + 2 b g + a g^2) + lin * g is convex; bisect phi'.
    const Matrix rd = residual(direction);
    const double qa = rd.squaredNorm();
    const double qb = r.cwiseProduct(rd).sum();
    const double qc = r.squaredNorm() + delta2;
    const double lin = cost.cwiseProduct(direction).sum();
    auto slope = [&](double g) {
      return (qb + g * qa) / std::sqrt(std::max(qc + 2.0 * qb * g + qa * g * g, delta2)) + lin;
    };
    double step = max_step;
    if (slope(max_step) > 0.0) {
      double lo = 0.0;
      double hi = max_step;
      for (int k = 0; k < 100 && hi - lo > 0.0; ++k) {
        const double mid = 0.5 * (lo + hi);
        (slope(mid) > 0.0 ? hi : lo) = mid;
      }
      step = lo;
    }

    plan += step * direction;
    atoms[away].weight -= step;
    bool merged = false;
    for (Atom& atom : atoms) {
      if ((atom.vertex - toward).cwiseAbs().maxCoeff() <= 1e-13) {
        atom.weight += step;
        merged = true;
        break;
      }
    }
    if (!merged) atoms.push_back({toward, step});
    std::erase_if(atoms, [](const Atom& atom) { return atom.weight <= 1e-15; });
  }

  out.iterations = it;
  out.gap = gap;
  out.plan.coupling = plan;
  out.plan.objective = residual(plan).norm() + cost.cwiseProduct(plan).sum();
  out.value = std::abs(g1.num_vertices() - g2.num_vertices()) + out.plan.objective;
  return out;
}

}  // namespace fswgnn
