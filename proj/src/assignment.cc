// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#include "fswgnn/assignment.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace fswgnn {
namespace {

void CheckCost(const Matrix& cost) {
  if (cost.rows() == 0 || cost.rows() != cost.cols()) {
    throw ValidationError("cost matrix must be square and non-empty, got " +
                          std::to_string(cost.rows()) + "x" +
                          std::to_string(cost.cols()));
  }
  if (!cost.allFinite()) throw ValidationError("cost matrix must be finite");
  if (cost.minCoeff() < 0.0) throw ValidationError("cost matrix has negative entries");
}

// Shortest-augmenting-path Hungarian method with row/column potentials.
std::vector<int> Hungarian(const Matrix& cost) {
  const int k = static_cast<int>(cost.rows());
  const double inf = std::numeric_limits<double>::infinity();
  // 1-based; column 0 is the virtual root of each augmenting search.
  std::vector<double> u(k + 1, 0.0), v(k + 1, 0.0);
  std::vector<int> match(k + 1, 0), way(k + 1, 0);
  for (int row = 1; row <= k; ++row) {
    match[0] = row;
    int col0 = 0;
    std::vector<double> min_slack(k + 1, inf);
    std::vector<bool> used(k + 1, false);
    do {
      used[col0] = true;
      const int i0 = match[col0];
      double delta = inf;
      int col1 = 0;
      for (int j = 1; j <= k; ++j) {
        if (used[j]) continue;
        const double slack = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (slack < min_slack[j]) {
          min_slack[j] = slack;
          way[j] = col0;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          col1 = j;
        }
      }
      for (int j = 0; j <= k; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      col0 = col1;
    } while (match[col0] != 0);
    do {
      const int col1 = way[col0];
      match[col0] = match[col1];
      col0 = col1;
    } while (col0 != 0);
  }
  std::vector<int> perm(k);
  for (int j = 1; j <= k; ++j) perm[match[j] - 1] = j - 1;
  return perm;
}

double RowOrderSum(const Matrix& cost, const std::vector<int>& perm) {
  double total = 0.0;
  for (std::size_t i = 0; i < perm.size(); ++i) total += cost(i, perm[i]);
  return total;
}

}  // namespace

double AssignmentMinValue(const Matrix& cost) {
  CheckCost(cost);
  return RowOrderSum(cost, Hungarian(cost));
}

Assignment AssignmentMinCost(const Matrix& cost) {
  CheckCost(cost);
  const int k = static_cast<int>(cost.rows());
  const double optimum = RowOrderSum(cost, Hungarian(cost));
  const double tol = 1e-12 * (1.0 + std::abs(optimum));

  // Fix rows in order, each to the smallest column that still admits an
  // optimal completion.
  std::vector<int> perm(k, -1);
  std::vector<bool> taken(k, false);
  double prefix = 0.0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (taken[j]) continue;
      double rest = 0.0;
      const int left = k - i - 1;
      if (left > 0) {
        Matrix sub(left, left);
        int c = 0;
        for (int col = 0; col < k; ++col) {
          if (taken[col] || col == j) continue;
          for (int r = 0; r < left; ++r) sub(r, c) = cost(i + 1 + r, col);
          ++c;
        }
        rest = RowOrderSum(sub, Hungarian(sub));
      }
      if (prefix + cost(i, j) + rest <= optimum + tol) {
        perm[i] = j;
        taken[j] = true;
        prefix += cost(i, j);
        break;
      }
    }
    if (perm[i] < 0) {
      throw ComputationError("assignment tie-break lost the optimum");
    }
  }
  return {RowOrderSum(cost, perm), std::move(perm)};
}

double Wasserstein1d(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw ValidationError("multiset sizes differ: " + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()));
  }
  std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  double total = 0.0;
  for (std::size_t j = 0; j < sa.size(); ++j) total += std::abs(sa[j] - sb[j]);
  return total;
}

}  // namespace fswgnn
