// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FSWGNN_FSW_H_
#define FSWGNN_FSW_H_

#include <cstdint>
#include <span>

#include "fswgnn/common.h"

namespace fswgnn {

// Parameters of one Fourier Sliced-Wasserstein embedding R^d-multisets -> R^m.
struct FswParams {
  Matrix slices;  // m x d, unit rows
  Vector freqs;   // m, non-negative
  std::uint64_t seed = 0;

  int input_dim() const { return static_cast<int>(slices.cols()); }
  int output_dim() const { return static_cast<int>(slices.rows()); }
};

// Slices uniform on the unit sphere (normalized Gaussians), frequencies
// Exponential(1). Deterministic in `seed`. Throws ValidationError if d < 1 or
// m < 1.
FswParams SampleFswParams(int d, int m, std::uint64_t seed);

// Frequencies at or below this use the xi -> 0 limit 2 * mean(y).
inline constexpr double kZeroFrequency = 1e-9;

// 2(1+xi) * integral_0^1 Q_y(t) cos(2 pi xi t) dt for the step quantile
// function Q_y taking value y_j on [(j-1)/n, j/n).
//
// Evaluated in closed form; with s_j = 2 pi xi j / n,
//   sin(s_j) - sin(s_{j-1}) = 2 cos(pi xi (2j-1)/n) sin(pi xi / n),
// which avoids the cancellation of the plain difference for small xi.
// `sorted` must be ascending and non-empty (ValidationError otherwise).
double QuantileCosineIntegral(std::span<const double> sorted, double xi);

// Embeds the multiset given by the rows of `points` (n x d). An empty multiset
// maps to the zero vector. The result does not depend on row order, bit for
// bit. Throws ValidationError on dimension mismatch.
Vector EmbedMultiset(const Matrix& points, const FswParams& params);

// Same, for the multiset formed by rows `rows` of `table`.
Vector EmbedMultiset(const Matrix& table, std::span<const int> rows,
                     const FswParams& params);

}  // namespace fswgnn

#endif  // FSWGNN_FSW_H_
