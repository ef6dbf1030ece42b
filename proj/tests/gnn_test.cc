// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#include "fswgnn/gnn.h"

#include <gtest/gtest.h>

#include "fswgnn/wl.h"
#include "test_util.h"

namespace fswgnn {
namespace {

using testing::Rng;

double RelativeDistance(const Vector& a, const Vector& b) {
  return (a - b).norm() / std::max({1.0, a.norm(), b.norm()});
}

TEST(GnnTest, InitIsDeterministic) {
  const FswGnnModel a = InitModel(2, 10, 3, 42);
  const FswGnnModel b = InitModel(2, 10, 3, 42);
  ASSERT_EQ(a.updates.size(), b.updates.size());
  for (std::size_t t = 0; t < a.updates.size(); ++t) {
    EXPECT_EQ(a.updates[t], b.updates[t]);
    EXPECT_EQ(a.aggregators[t].slices, b.aggregators[t].slices);
    EXPECT_EQ(a.aggregators[t].freqs, b.aggregators[t].freqs);
    EXPECT_EQ(a.aggregator_mass[t], b.aggregator_mass[t]);
  }
  EXPECT_EQ(a.readout, b.readout);
  EXPECT_NE(InitModel(2, 10, 3, 43).readout, a.readout);
}

TEST(GnnTest, UpdateShapesFollowConcatenation) {
  const FswGnnModel model = InitModel(2, 10, 3, 1);
  ASSERT_EQ(model.updates.size(), 3u);
  EXPECT_EQ(model.updates[0].rows(), 10);
  EXPECT_EQ(model.updates[0].cols(), 12);
  EXPECT_EQ(model.updates[1].cols(), 20);
  EXPECT_EQ(model.updates[2].cols(), 20);
  EXPECT_EQ(model.aggregators[0].input_dim(), 2);
  EXPECT_EQ(model.aggregators[1].input_dim(), 10);
  EXPECT_EQ(model.readout.rows(), 10);
  EXPECT_EQ(model.readout.cols(), 10);
  EXPECT_TRUE(model.update_outputs.empty());
  EXPECT_THROW(InitModel(0, 10, 3, 1), ValidationError);
  EXPECT_THROW(InitModel(2, 0, 3, 1), ValidationError);
  EXPECT_THROW(InitModel(2, 10, -1, 1), ValidationError);
}

TEST(GnnTest, ZeroIterationsReadsOutRawFeatures) {
  const FswGnnModel model = InitModel(1, 6, 0, 3);
  EXPECT_EQ(model.readout_fsw.input_dim(), 1);
  const Graph g = testing::ConstantPath(3);
  const Vector expected =
      model.readout * (EmbedMultiset(g.features(), model.readout_fsw) + 3.0 * model.readout_mass);
  EXPECT_EQ(GraphEmbedding(model, g), expected);
  EXPECT_EQ(NodeEmbeddings(model, g).size(), 1u);
}

TEST(GnnTest, HiddenDimDefault) {
  EXPECT_EQ(DefaultHiddenDim(4, 1), 10);
  EXPECT_EQ(DefaultHiddenDim(6, 2), 26);
}

TEST(GnnTest, VertexTransitiveGraphHasIdenticalRows) {
  const FswGnnModel model = InitModel(1, 14, 6, 5);
  for (const Matrix& h : NodeEmbeddings(model, testing::ConstantCycle(6))) {
    for (int v = 1; v < 6; ++v) EXPECT_EQ(h.row(v), h.row(0));
  }
}

TEST(GnnTest, PathSplitsAfterOneIteration) {
  const FswGnnModel model = InitModel(1, 8, 1, 6);
  const Matrix h = NodeEmbeddings(model, testing::ConstantPath(3)).back();
  EXPECT_EQ(h.row(0), h.row(2));
  EXPECT_GT((h.row(0) - h.row(1)).norm(), 1e-6);
}

TEST(GnnTest, IsolatedVertexAggregatesToZero) {
  const FswGnnModel model = InitModel(1, 5, 1, 7);
  const Graph single(1, {}, Matrix::Constant(1, 1, 2.0));
  Vector joined(6);
  joined << 2.0, Vector::Zero(5);
  const Vector expected = model.updates[0] * joined;
  EXPECT_EQ(NodeEmbeddings(model, single)[1].row(0).transpose(), expected);
}

TEST(GnnTest, EquivariantAndInvariantBitForBit) {
  Rng rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = testing::UniformInt(rng, 1, 8);
    const Graph g = testing::RandomGraph(rng, n, 2, 0.4, 3);
    const std::vector<int> perm = testing::RandomPermutation(rng, n);
    const Graph pg = Permute(g, perm);
    for (bool hidden : {false, true}) {
      GnnOptions options;
      options.hidden_layer = hidden;
      const FswGnnModel model = InitModel(2, 12, 3, trial, options);
      const auto h = NodeEmbeddings(model, g);
      const auto ph = NodeEmbeddings(model, pg);
      for (std::size_t t = 0; t < h.size(); ++t) {
        for (int v = 0; v < n; ++v) EXPECT_EQ(ph[t].row(perm[v]), h[t].row(v));
      }
      EXPECT_EQ(GraphEmbedding(model, g), GraphEmbedding(model, pg));
    }
  }
}

TEST(GnnTest, WlEquivalentPairIsNotSeparated) {
  const Graph c6 = testing::ConstantCycle(6);
  const Graph c3 = testing::ConstantCycle(3);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const FswGnnModel model = InitModel(1, DefaultHiddenDim(6, 1), 6, seed);
    EXPECT_LE(RelativeDistance(GraphEmbedding(model, c6),
                               GraphEmbedding(model, DisjointUnion(c3, c3))),
              1e-9);
  }
}

TEST(GnnTest, WlSeparablePairIsSeparated) {
  const Graph p3 = testing::ConstantPath(3);
  const Graph c3 = testing::ConstantCycle(3);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const FswGnnModel model = InitModel(1, DefaultHiddenDim(3, 1), 3, seed);
    EXPECT_GE(RelativeDistance(GraphEmbedding(model, p3), GraphEmbedding(model, c3)), 1e-6);
  }
}

TEST(GnnTest, MassTermSeparatesRepeatedNeighbors) {
  // {h} and {h, h} have the same distribution; only the cardinality differs.
  const FswGnnModel model = InitModel(1, 6, 1, 8);
  const Graph p2 = testing::ConstantPath(2);
  const Graph star(3, {{0, 1}, {0, 2}}, Matrix::Ones(3, 1));
  const Matrix a = NodeEmbeddings(model, p2)[1];
  const Matrix b = NodeEmbeddings(model, star)[1];
  EXPECT_GT((a.row(0) - b.row(0)).norm(), 1e-6);
}

TEST(GnnTest, RejectsFeatureDimensionMismatch) {
  const FswGnnModel model = InitModel(2, 6, 1, 9);
  EXPECT_THROW(NodeEmbeddings(model, testing::ConstantPath(2)), ValidationError);
  EXPECT_THROW(GraphEmbedding(model, testing::ConstantPath(2)), ValidationError);
}

TEST(GnnTest, HiddenLayerVariantIsDeterministic) {
  GnnOptions options;
  options.hidden_layer = true;
  const FswGnnModel model = InitModel(1, 6, 2, 10, options);
  ASSERT_EQ(model.update_outputs.size(), 2u);
  const Graph g = testing::ConstantPath(4);
  EXPECT_EQ(GraphEmbedding(model, g), GraphEmbedding(InitModel(1, 6, 2, 10, options), g));
}

}  // namespace
}  // namespace fswgnn
