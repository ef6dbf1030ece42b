// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#include "fswgnn/gnn.h"

#include <numeric>
#include <random>
#include <string>

namespace fswgnn {
namespace {

Matrix GaussianMatrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = gauss(rng);
  }
  return m;
}

Vector Aggregate(const Matrix& table, std::span<const int> rows,
                 const FswParams& fsw, const Vector& mass) {
  Vector q = EmbedMultiset(table, rows, fsw);
  q += static_cast<double>(rows.size()) * mass;
  return q;
}

}  // namespace

int DefaultHiddenDim(int max_vertices, int feature_dim) {
  return 2 * max_vertices * feature_dim + 2;
}

FswGnnModel InitModel(int input_dim, int hidden_dim, int iterations,
                      std::uint64_t seed, const GnnOptions& options) {
  if (input_dim < 1 || hidden_dim < 1 || iterations < 0) {
    throw ValidationError("invalid model sizes (d_in=" + std::to_string(input_dim) +
                          ", m=" + std::to_string(hidden_dim) +
                          ", T=" + std::to_string(iterations) + ")");
  }
  FswGnnModel model;
  model.iterations = iterations;
  model.input_dim = input_dim;
  model.hidden_dim = hidden_dim;
  model.seed = seed;
  model.hidden_layer = options.hidden_layer;

  std::mt19937_64 rng(MixSeed(seed, 0));
  const int m = hidden_dim;
  for (int t = 0; t < iterations; ++t) {
    const int prev = t == 0 ? input_dim : m;
    model.aggregators.push_back(SampleFswParams(prev, m, MixSeed(seed, t + 1)));
    model.aggregator_mass.push_back(GaussianMatrix(m, 1, rng));
    model.updates.push_back(GaussianMatrix(m, prev + m, rng));
    if (options.hidden_layer) model.update_outputs.push_back(GaussianMatrix(m, m, rng));
  }
  const int last = iterations == 0 ? input_dim : m;
  model.readout_fsw = SampleFswParams(last, m, MixSeed(seed, iterations + 1));
  model.readout_mass = GaussianMatrix(m, 1, rng);
  model.readout = GaussianMatrix(m, m, rng);
  return model;
}

std::vector<Matrix> NodeEmbeddings(const FswGnnModel& model, const Graph& g) {
  if (g.feature_dim() != model.input_dim) {
    throw ValidationError("graph feature dimension " +
                          std::to_string(g.feature_dim()) +
                          " does not match model input dimension " +
                          std::to_string(model.input_dim));
  }
  const int n = g.num_vertices();
  const int m = model.hidden_dim;
  std::vector<Matrix> layers;
  layers.reserve(model.iterations + 1);
  layers.push_back(g.features());
  for (int t = 0; t < model.iterations; ++t) {
    const Matrix& prev = layers.back();
    const int prev_dim = static_cast<int>(prev.cols());
    Matrix next(n, m);
    Vector joined(prev_dim + m);
    for (int v = 0; v < n; ++v) {
      joined.head(prev_dim) = prev.row(v).transpose();
      joined.tail(m) = Aggregate(prev, g.neighbors(v), model.aggregators[t],
                                 model.aggregator_mass[t]);
      Vector h = model.updates[t] * joined;
      if (model.hidden_layer) h = model.update_outputs[t] * h.cwiseMax(0.0);
      next.row(v) = h.transpose();
    }
    layers.push_back(std::move(next));
  }
  return layers;
}

Vector GraphEmbedding(const FswGnnModel& model, const Graph& g) {
  const Matrix last = std::move(NodeEmbeddings(model, g).back());
  std::vector<int> all(g.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  return model.readout * Aggregate(last, all, model.readout_fsw, model.readout_mass);
}

}  // namespace fswgnn
