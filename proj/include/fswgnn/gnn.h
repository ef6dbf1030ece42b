// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FSWGNN_GNN_H_
#define FSWGNN_GNN_H_

#include <cstdint>
#include <span>
#include <vector>

#include "fswgnn/fsw.h"
#include "fswgnn/graph.h"

namespace fswgnn {

struct GnnOptions {
  // Replace each linear update Phi by W2 * relu(W1 x). Off by default: the
  // separation guarantee is stated for activation-free updates.
  bool hidden_layer = false;
};

// Randomly initialized FSW-GNN. Message passing, for t = 1..T:
//   q_v = E_t({h_u : u in N(v)}) + |N(v)| * mass_t
//   h_v = Phi_t [h_v ; q_v]
// and the graph readout is Psi (E_glob({h_v}) + n * mass_glob).
//
// The FSW embedding only sees the normalized distribution of its input, so the
// mass term is what lets a neighborhood {h, h} differ from {h}.
struct FswGnnModel {
  int iterations = 0;
  int input_dim = 0;
  int hidden_dim = 0;
  std::uint64_t seed = 0;
  bool hidden_layer = false;

  std::vector<FswParams> aggregators;  // one per iteration
  std::vector<Vector> aggregator_mass;
  // Phi_t: hidden_dim x (prev_dim + hidden_dim). With hidden_layer this is W1
  // and update_outputs holds the hidden_dim x hidden_dim W2.
  std::vector<Matrix> updates;
  std::vector<Matrix> update_outputs;

  FswParams readout_fsw;
  Vector readout_mass;
  Matrix readout;  // Psi: hidden_dim x hidden_dim
};

// 2 N d + 2: the width for which the random model separates all WL-distinct
// graphs with at most N vertices and d-dimensional features.
int DefaultHiddenDim(int max_vertices, int feature_dim);

// All matrix and mass entries are i.i.d. standard Gaussian; FSW parameters use
// seeds derived from `seed`. iterations == 0 yields a readout-only model.
FswGnnModel InitModel(int input_dim, int hidden_dim, int iterations,
                      std::uint64_t seed, const GnnOptions& options = {});

// H^(0..T); H^(0) is the feature matrix, H^(t) has one row per vertex.
std::vector<Matrix> NodeEmbeddings(const FswGnnModel& model, const Graph& g);

Vector GraphEmbedding(const FswGnnModel& model, const Graph& g);

}  // namespace fswgnn

#endif  // FSWGNN_GNN_H_
