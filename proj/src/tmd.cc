// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#include "fswgnn/tmd.h"

#include <map>
#include <string>
#include <utility>

#include "fswgnn/assignment.h"

namespace fswgnn {

ComputationTree BlankTree(int feature_dim) {
  auto node = std::make_shared<TreeNode>();
  node->feature = Vector::Zero(feature_dim);
  return node;
}

std::vector<ComputationTree> AugmentPad(std::span<const ComputationTree> trees,
                                        int target, int feature_dim) {
  if (static_cast<int>(trees.size()) > target) {
    throw ValidationError("cannot pad " + std::to_string(trees.size()) +
                          " trees down to " + std::to_string(target));
  }
  std::vector<ComputationTree> out(trees.begin(), trees.end());
  if (static_cast<int>(out.size()) < target) {
    const ComputationTree blank = BlankTree(feature_dim);
    out.resize(target, blank);
  }
  return out;
}

namespace {

class TreeDistanceSolver {
 public:
  explicit TreeDistanceSolver(int feature_dim) : blank_(BlankTree(feature_dim)) {}

  double Distance(const TreeNode* a, const TreeNode* b) {
    const auto key = std::make_pair(a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    double d = (a->feature - b->feature).lpNorm<1>();
    if (!a->children.empty() || !b->children.empty()) {
      d += Transport(a->children, b->children);
    }
    memo_.emplace(key, d);
    return d;
  }

  // Optimal matching of two tree multisets after blank padding.
  double Transport(std::span<const ComputationTree> xs,
                   std::span<const ComputationTree> ys) {
    const int k = static_cast<int>(std::max(xs.size(), ys.size()));
    if (k == 0) return 0.0;
    Matrix cost(k, k);
    for (int i = 0; i < k; ++i) {
      const TreeNode* x = i < static_cast<int>(xs.size()) ? xs[i].get() : blank_.get();
      for (int j = 0; j < k; ++j) {
        const TreeNode* y = j < static_cast<int>(ys.size()) ? ys[j].get() : blank_.get();
        cost(i, j) = Distance(x, y);
      }
    }
    return AssignmentMinValue(cost);
  }

 private:
  ComputationTree blank_;
  std::map<std::pair<const TreeNode*, const TreeNode*>, double> memo_;
};

}  // namespace

double TreeDistance(const ComputationTree& a, const ComputationTree& b) {
  if (a->feature.size() != b->feature.size()) {
    throw ValidationError("tree feature dimensions differ");
  }
  return TreeDistanceSolver(static_cast<int>(a->feature.size())).Distance(a.get(), b.get());
}

double Tmd(const Graph& g1, const Graph& g2, int depth) {
  if (g1.feature_dim() != g2.feature_dim()) {
    throw ValidationError("feature-dimension mismatch: " +
                          std::to_string(g1.feature_dim()) + " vs " +
                          std::to_string(g2.feature_dim()));
  }
  if (depth < 1 || depth > kMaxTmdDepth) {
    throw ValidationError("depth must be in [1, " + std::to_string(kMaxTmdDepth) +
                          "], got " + std::to_string(depth));
  }
  const auto trees1 = MakeComputationTrees(g1, depth);
  const auto trees2 = MakeComputationTrees(g2, depth);
  return TreeDistanceSolver(g1.feature_dim()).Transport(trees1, trees2);
}

}  // namespace fswgnn
