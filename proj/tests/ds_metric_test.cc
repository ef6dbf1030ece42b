// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#include "fswgnn/ds_metric.h"

#include <gtest/gtest.h>

#include "fswgnn/wl.h"
#include "test_util.h"

namespace fswgnn {
namespace {

using testing::Rng;

// Objective of the l1 problem at a given plan, evaluated directly.
double L1Objective(const Graph& g1, const Graph& g2, const Matrix& s) {
  const Matrix r = g1.adjacency() * s - s * g2.adjacency();
  double feature = 0.0;
  for (int i = 0; i < g1.num_vertices(); ++i) {
    for (int j = 0; j < g2.num_vertices(); ++j) {
      feature += s(i, j) * (g1.features().row(i) - g2.features().row(j)).lpNorm<1>();
    }
  }
  return r.cwiseAbs().sum() + feature;
}

TEST(DsMetricTest, SelfDistanceIsZeroWithScaledIdentity) {
  Rng rng(109);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = testing::UniformInt(rng, 1, 6);
    // Distinct features force the identity coupling.
    Graph g = testing::RandomGraph(rng, n, 1, 0.5, 1);
    Matrix x(n, 1);
    for (int i = 0; i < n; ++i) x(i, 0) = i + 1.0;
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(e.first, e.second);
    g = Graph(n, edges, x);
    const DsResult r = DsMetricL1(g, g);
    EXPECT_NEAR(r.value, 0.0, 1e-12);
    EXPECT_LE((r.plan.coupling - Matrix::Identity(n, n) / n).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(DsMetricTest, WlEquivalentCyclesAreAtDistanceZero) {
  const Graph c6 = testing::ConstantCycle(6);
  const Graph c3 = testing::ConstantCycle(3);
  EXPECT_LE(DsMetricL1(c6, DisjointUnion(c3, c3)).value, 1e-7);
}

TEST(DsMetricTest, PathAndTriangleAreSeparated) {
  const double value = DsMetricL1(testing::ConstantPath(3), testing::ConstantCycle(3)).value;
  EXPECT_GT(value, 1e-3);
  // Frozen from an independent LP solve of the same program (HiGHS).
  EXPECT_NEAR(value, 2.0 / 3.0, 1e-9);
}

TEST(DsMetricTest, PlanIsFeasibleAndAttainsValue) {
  Rng rng(113);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph a = testing::RandomGraph(rng, testing::UniformInt(rng, 1, 6), 2, 0.4, 3);
    const Graph b = testing::RandomGraph(rng, testing::UniformInt(rng, 1, 6), 2, 0.4, 3);
    const DsResult r = DsMetricL1(a, b);
    EXPECT_LE(MarginalError(r.plan.coupling, 1e-12), 1e-9);
    EXPECT_GE(r.plan.objective, -1e-12);
    EXPECT_NEAR(r.plan.objective, L1Objective(a, b, r.plan.coupling), 1e-9);
    EXPECT_NEAR(r.value, std::abs(a.num_vertices() - b.num_vertices()) + r.plan.objective,
                1e-12);
  }
}

TEST(DsMetricTest, NoVertexCouplingBeatsTheLp) {
  // Every permutation-like coupling (and the uniform plan) is feasible, so
  // none may have a smaller objective than the LP optimum.
  Rng rng(127);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = testing::UniformInt(rng, 1, 5);
    const Graph a = testing::RandomGraph(rng, n, 1, 0.5, 2);
    const Graph b = testing::RandomGraph(rng, n, 1, 0.5, 2);
    const double lp = DsMetricL1(a, b).value;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Matrix s = Matrix::Zero(n, n);
      for (int i = 0; i < n; ++i) s(i, perm[i]) = 1.0 / n;
      EXPECT_LE(lp, L1Objective(a, b, s) + 1e-9);
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_LE(lp, L1Objective(a, b, Matrix::Constant(n, n, 1.0 / (n * n))) + 1e-9);
  }
}

TEST(DsMetricTest, SymmetricUnderArgumentSwap) {
  Rng rng(131);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph a = testing::RandomGraph(rng, testing::UniformInt(rng, 1, 6), 1, 0.5, 3);
    const Graph b = testing::RandomGraph(rng, testing::UniformInt(rng, 1, 6), 1, 0.5, 3);
    const DsResult ab = DsMetricL1(a, b);
    const DsResult ba = DsMetricL1(b, a);
    EXPECT_NEAR(ab.value, ba.value, 1e-8);
    // The transposed plan is optimal for the swapped problem.
    EXPECT_NEAR(L1Objective(b, a, ab.plan.coupling.transpose()), ba.plan.objective, 1e-8);
  }
}

TEST(DsMetricTest, IsolatedBlankVerticesCostAtLeastTheirCount) {
  Rng rng(137);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testing::RandomGraph(rng, testing::UniformInt(rng, 1, 5), 2, 0.5, 2);
    const int k = testing::UniformInt(rng, 1, 3);
    const Graph extra = DisjointUnion(g, Graph(k, {}, Matrix::Ones(k, 2)));
    EXPECT_GE(DsMetricL1(g, extra).value, k - 1e-12);
    EXPECT_GE(DsMetricL1(extra, g).value, k - 1e-12);
  }
}

TEST(DsMetricTest, RejectsDimensionMismatch) {
  EXPECT_THROW(DsMetricL1(testing::ConstantCycle(3), MakeCycle(3, Vector::Ones(2))),
               ValidationError);
  EXPECT_THROW(DsMetricL2(testing::ConstantCycle(3), MakeCycle(3, Vector::Ones(2))),
               ValidationError);
}

TEST(DsMetricTest, L2SelfDistanceWithinTolerance) {
  Rng rng(139);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = testing::RandomGraph(rng, testing::UniformInt(rng, 1, 6), 2, 0.5, 3);
    EXPECT_LE(DsMetricL2(g, g).value, 1e-6);
  }
}

TEST(DsMetricTest, L2TwoPointFeatureTransport) {
  Matrix x(2, 1), y(2, 1);
  x << 0.0, 1.0;
  y << 0.0, 0.0;
  const DsL2Result r = DsMetricL2(Graph(2, {}, x), Graph(2, {}, y));
  EXPECT_NEAR(r.value, 0.5, 1e-6);
  EXPECT_LE(r.gap, 1e-6);
}

TEST(DsMetricTest, L2IsBoundedByL1AndPlansAreFeasible) {
  Rng rng(149);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph a = testing::RandomGraph(rng, testing::UniformInt(rng, 1, 5), 2, 0.5, 3);
    const Graph b = testing::RandomGraph(rng, testing::UniformInt(rng, 1, 5), 2, 0.5, 3);
    const DsL2Result l2 = DsMetricL2(a, b);
    EXPECT_LE(l2.value, DsMetricL1(a, b).value + 1e-9);
    EXPECT_LE(MarginalError(l2.plan.coupling, 1e-12), 1e-9);
    EXPECT_LE(l2.gap, 1e-6);
  }
}

TEST(DsMetricTest, L2RejectsNonPositiveTolerance) {
  DsL2Options options;
  options.tol = 0.0;
  EXPECT_THROW(DsMetricL2(testing::ConstantCycle(3), testing::ConstantCycle(3), options),
               ValidationError);
}

TEST(DsMetricTest, L2ReportsIterationCap) {
  DsL2Options options;
  options.tol = 1e-15;
  options.max_iterations = 2;
  Matrix x(3, 1);
  x << 0.1, 0.7, 0.3;
  const Graph a(3, {{0, 1}}, x);
  const Graph b(3, {{1, 2}, {0, 2}}, x.reverse());
  EXPECT_THROW(DsMetricL2(a, b, options), ComputationError);
}

TEST(DsMetricTest, MarginalErrorDetectsBadPlans) {
  EXPECT_EQ(MarginalError(Matrix::Constant(2, 3, 1.0 / 6.0), 1e-12), 0.0);
  EXPECT_GT(MarginalError(Matrix::Constant(2, 2, 0.5), 1e-12), 0.1);
  Matrix negative = Matrix::Constant(2, 2, 0.25);
  negative(0, 0) = -0.25;
  EXPECT_TRUE(std::isinf(MarginalError(negative, 1e-12)));
}

}  // namespace
}  // namespace fswgnn
