// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#include "fswgnn/fsw.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace fswgnn {

FswParams SampleFswParams(int d, int m, std::uint64_t seed) {
  if (d < 1 || m < 1) {
    throw ValidationError("FSW dimensions must be positive (d=" +
                          std::to_string(d) + ", m=" + std::to_string(m) + ")");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);

  FswParams params;
  params.seed = seed;
  params.slices.resize(m, d);
  params.freqs.resize(m);
  for (int i = 0; i < m; ++i) {
    double norm = 0.0;
    do {
      for (int k = 0; k < d; ++k) params.slices(i, k) = gauss(rng);
      norm = params.slices.row(i).norm();
    } while (norm == 0.0);
    params.slices.row(i) /= norm;
  }
  for (int i = 0; i < m; ++i) params.freqs(i) = expo(rng);
  return params;
}

double QuantileCosineIntegral(std::span<const double> sorted, double xi) {
  if (sorted.empty()) throw ValidationError("quantile of an empty multiset");
  if (!std::is_sorted(sorted.begin(), sorted.end())) {
    throw ValidationError("projected values must be sorted ascending");
  }
  const double n = static_cast<double>(sorted.size());
  const double scale = 2.0 * (1.0 + xi);
  if (xi <= kZeroFrequency) {
    return scale * std::accumulate(sorted.begin(), sorted.end(), 0.0) / n;
  }
  const double pi_xi = std::numbers::pi * xi;
  double acc = 0.0;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    acc += sorted[j] * std::cos(pi_xi * (2.0 * static_cast<double>(j) + 1.0) / n);
  }
  return scale * (std::sin(pi_xi / n) / pi_xi) * acc;
}

Vector EmbedMultiset(const Matrix& table, std::span<const int> rows,
                     const FswParams& params) {
  const int d = params.input_dim();
  const int m = params.output_dim();
  Vector out = Vector::Zero(m);
  if (rows.empty()) return out;
  if (table.cols() != d) {
    throw ValidationError("multiset dimension " + std::to_string(table.cols()) +
                          " does not match FSW input dimension " +
                          std::to_string(d));
  }
  std::vector<double> projected(rows.size());
  for (int i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      double dot = 0.0;
      for (int k = 0; k < d; ++k) dot += params.slices(i, k) * table(rows[j], k);
      projected[j] = dot;
    }
    std::sort(projected.begin(), projected.end());
    out(i) = QuantileCosineIntegral(projected, params.freqs(i));
  }
  return out;
}

Vector EmbedMultiset(const Matrix& points, const FswParams& params) {
  std::vector<int> rows(points.rows());
  std::iota(rows.begin(), rows.end(), 0);
  return EmbedMultiset(points, rows, params);
}

}  // namespace fswgnn
