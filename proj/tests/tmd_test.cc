// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#include "fswgnn/tmd.h"

#include <gtest/gtest.h>

#include "fswgnn/gnn.h"
#include "test_util.h"

namespace fswgnn {
namespace {

using testing::Rng;

ComputationTree Leaf(double value) {
  auto node = std::make_shared<TreeNode>();
  node->feature = Vector::Constant(1, value);
  return node;
}

ComputationTree Node(double value, std::vector<ComputationTree> children) {
  auto node = std::make_shared<TreeNode>();
  node->feature = Vector::Constant(1, value);
  for (const auto& c : children) node->depth = std::max(node->depth, c->depth + 1);
  node->children = std::move(children);
  return node;
}

// Plain recursion over explicit trees: no memo, no sharing, and padding done
// by trying every pairing of the padded child lists.
double NaiveTreeDistance(const TreeNode& a, const TreeNode& b);

double NaiveTransport(const std::vector<const TreeNode*>& xs,
                      const std::vector<const TreeNode*>& ys) {
  const std::size_t k = std::max(xs.size(), ys.size());
  if (k == 0) return 0.0;
  const TreeNode blank{Vector::Zero(xs.empty() ? ys[0]->feature.size() : xs[0]->feature.size()),
                       {}, 1};
  std::vector<const TreeNode*> px = xs, py = ys;
  px.resize(k, &blank);
  py.resize(k, &blank);
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double total = 0.0;
    for (std::size_t i = 0; i < k; ++i) total += NaiveTreeDistance(*px[i], *py[perm[i]]);
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

double NaiveTreeDistance(const TreeNode& a, const TreeNode& b) {
  std::vector<const TreeNode*> xs, ys;
  for (const auto& c : a.children) xs.push_back(c.get());
  for (const auto& c : b.children) ys.push_back(c.get());
  return (a.feature - b.feature).lpNorm<1>() + NaiveTransport(xs, ys);
}

double NaiveTmd(const Graph& g1, const Graph& g2, int depth) {
  const auto t1 = MakeComputationTrees(g1, depth);
  const auto t2 = MakeComputationTrees(g2, depth);
  std::vector<const TreeNode*> xs, ys;
  for (const auto& t : t1) xs.push_back(t.get());
  for (const auto& t : t2) ys.push_back(t.get());
  return NaiveTransport(xs, ys);
}

TEST(TmdTest, AugmentPadAppendsBlankTrees) {
  const std::vector<ComputationTree> two{Leaf(1), Leaf(2)};
  const auto padded = AugmentPad(two, 3, 1);
  ASSERT_EQ(padded.size(), 3u);
  EXPECT_EQ(padded[0], two[0]);
  EXPECT_TRUE(padded[2]->children.empty());
  EXPECT_EQ(padded[2]->feature, Vector::Zero(1));
  EXPECT_EQ(AugmentPad(two, 2, 1), two);
  EXPECT_THROW(AugmentPad(two, 1, 1), ValidationError);
}

TEST(TmdTest, BlankAgainstNonzeroTreeIsPositive) {
  EXPECT_GT(TreeDistance(BlankTree(1), Leaf(0.5)), 0.0);
  EXPECT_EQ(TreeDistance(BlankTree(1), Node(1.0, {Leaf(2.0)})), 3.0);
}

TEST(TmdTest, TreeDistanceExamples) {
  auto p = std::make_shared<TreeNode>();
  p->feature = Eigen::Vector2d(1.0, -2.0);
  auto q = std::make_shared<TreeNode>();
  q->feature = Eigen::Vector2d(0.5, 1.0);
  EXPECT_EQ(TreeDistance(p, q), 3.5);

  const ComputationTree t = Node(1.0, {Leaf(1.0), Leaf(2.0)});
  EXPECT_EQ(TreeDistance(t, t), 0.0);
  EXPECT_EQ(TreeDistance(t, Node(1.0, {Leaf(1.0)})), 2.0);
  EXPECT_THROW(TreeDistance(p, Leaf(1.0)), ValidationError);
}

TEST(TmdTest, TreeDistanceMatchesNaiveRecursion) {
  Rng rng(79);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph a = testing::RandomGraph(rng, testing::UniformInt(rng, 1, 4), 1, 0.5, 3);
    const Graph b = testing::RandomGraph(rng, testing::UniformInt(rng, 1, 4), 1, 0.5, 3);
    const int depth = testing::UniformInt(rng, 1, 4);
    const auto ta = MakeComputationTree(a, 0, depth);
    const auto tb = MakeComputationTree(b, 0, depth);
    EXPECT_NEAR(TreeDistance(ta, tb), NaiveTreeDistance(*ta, *tb), 1e-12);
    EXPECT_NEAR(Tmd(a, b, depth), NaiveTmd(a, b, depth), 1e-12);
  }
}

TEST(TmdTest, SelfDistanceIsZero) {
  Rng rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::RandomGraph(rng, testing::UniformInt(rng, 1, 8), 2, 0.4, 3);
    for (int k = 1; k <= 6; ++k) EXPECT_EQ(Tmd(g, g, k), 0.0);
  }
}

TEST(TmdTest, GraphExamples) {
  const Graph c6 = testing::ConstantCycle(6);
  const Graph c3 = testing::ConstantCycle(3);
  EXPECT_LE(Tmd(c6, DisjointUnion(c3, c3), 13), 1e-9);
  EXPECT_GT(Tmd(testing::ConstantPath(3), c3, 2), 1e-3);
  EXPECT_THROW(Tmd(c3, c3, 0), ValidationError);
  EXPECT_THROW(Tmd(c3, c3, kMaxTmdDepth + 1), ValidationError);
  EXPECT_THROW(Tmd(c3, MakeCycle(3, Vector::Ones(2)), 2), ValidationError);
}

TEST(TmdTest, PaddingChargesMissingVertices) {
  // One extra isolated vertex with feature x costs ||x||_1.
  const Graph c3 = testing::ConstantCycle(3);
  Matrix x(1, 1);
  x << 2.5;
  EXPECT_EQ(Tmd(c3, DisjointUnion(c3, Graph(1, {}, x)), 4), 2.5);
}

TEST(TmdTest, IsHomogeneous) {
  Rng rng(89);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph a = testing::RandomGraph(rng, testing::UniformInt(rng, 1, 6), 2, 0.4, 3);
    const Graph b = testing::RandomGraph(rng, testing::UniformInt(rng, 1, 6), 2, 0.4, 3);
    const double base = Tmd(a, b, 4);
    for (double alpha : {0.0, 0.5, 2.0, 10.0}) {
      const double scaled = Tmd(testing::Scaled(a, alpha), testing::Scaled(b, alpha), 4);
      EXPECT_LE(std::abs(scaled - alpha * base), 1e-9 * alpha * base + 1e-300);
    }
  }
}

TEST(TmdTest, IsSymmetricAndSatisfiesTriangleInequality) {
  Rng rng(97);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph a = testing::RandomGraph(rng, testing::UniformInt(rng, 1, 6), 1, 0.4, 3);
    const Graph b = testing::RandomGraph(rng, testing::UniformInt(rng, 1, 6), 1, 0.4, 3);
    const Graph c = testing::RandomGraph(rng, testing::UniformInt(rng, 1, 6), 1, 0.4, 3);
    const double ab = Tmd(a, b, 3);
    EXPECT_NEAR(ab, Tmd(b, a, 3), 1e-8);
    EXPECT_LE(Tmd(a, c, 3), ab + Tmd(b, c, 3) + 1e-8);
  }
}

TEST(TmdTest, ZeroSetMatchesEmbeddingZeroSet) {
  // With T = L iterations and depth L + 1 trees, equal embeddings coincide
  // with zero TMD on nonzero-feature graphs.
  const GraphCorpus corpus = testing::SmallCorpus(4, 1.0);
  const int iterations = 4;
  const FswGnnModel model = InitModel(1, DefaultHiddenDim(4, 1), iterations, 2024);
  std::vector<Vector> emb;
  for (const Graph& g : corpus.graphs) emb.push_back(GraphEmbedding(model, g));
  int zero_pairs = 0;
  for (int i = 0; i < corpus.size(); ++i) {
    for (int j = i + 1; j < corpus.size(); ++j) {
      const double scale = std::max({1.0, emb[i].norm(), emb[j].norm()});
      const bool same_embedding = (emb[i] - emb[j]).norm() <= 1e-8 * scale;
      const bool zero_tmd = Tmd(corpus.graphs[i], corpus.graphs[j], iterations + 1) <= 1e-8;
      EXPECT_EQ(same_embedding, zero_tmd) << corpus.labels[i] << " vs " << corpus.labels[j];
      zero_pairs += zero_tmd;
    }
  }
  EXPECT_GT(zero_pairs, 0);
}

}  // namespace
}  // namespace fswgnn
