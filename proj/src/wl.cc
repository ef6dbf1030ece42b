// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#include "fswgnn/wl.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>

namespace fswgnn {

int ColorAssignment::num_colors(int t) const {
  const auto& c = colors.at(t);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

namespace {

// Assigns ids by first occurrence of each key in vertex order.
template <typename Key>
std::vector<int> Canonicalize(const std::vector<Key>& keys) {
  std::map<Key, int> ids;
  std::vector<int> out(keys.size());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    auto [it, inserted] = ids.try_emplace(keys[v], static_cast<int>(ids.size()));
    out[v] = it->second;
  }
  return out;
}

std::vector<int> InitialColors(const Graph& g) {
  std::vector<std::vector<std::uint64_t>> keys(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    keys[v].reserve(g.feature_dim());
    for (int k = 0; k < g.feature_dim(); ++k) {
      keys[v].push_back(std::bit_cast<std::uint64_t>(g.features()(v, k)));
    }
  }
  return Canonicalize(keys);
}

std::vector<int> Refine(const Graph& g, const std::vector<int>& prev) {
  std::vector<std::vector<int>> keys(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    auto& key = keys[v];
    key.push_back(prev[v]);
    for (int u : g.neighbors(v)) key.push_back(prev[u]);
    std::sort(key.begin() + 1, key.end());
  }
  return Canonicalize(keys);
}

int CountColors(const std::vector<int>& colors) {
  return *std::max_element(colors.begin(), colors.end()) + 1;
}

}  // namespace

ColorAssignment WlColors(const Graph& g, int iterations) {
  if (iterations < 0) throw ValidationError("iterations must be non-negative");
  ColorAssignment out;
  out.colors.reserve(iterations + 1);
  out.colors.push_back(InitialColors(g));
  for (int t = 1; t <= iterations; ++t) {
    out.colors.push_back(Refine(g, out.colors.back()));
  }
  return out;
}

bool WlEquivalent(const Graph& g1, const Graph& g2) {
  const Graph joint = DisjointUnion(g1, g2);
  const int n1 = g1.num_vertices();
  if (n1 != g2.num_vertices()) return false;
  const ColorAssignment colors = WlColors(joint, std::max(n1, g2.num_vertices()));
  for (const auto& round : colors.colors) {
    std::vector<int> a(round.begin(), round.begin() + n1);
    std::vector<int> b(round.begin() + n1, round.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  return true;
}

StablePartition ComputeStablePartition(const Graph& g) {
  std::vector<int> colors = InitialColors(g);
  int rounds = 0;
  while (true) {
    std::vector<int> next = Refine(g, colors);
    if (CountColors(next) == CountColors(colors)) break;
    colors = std::move(next);
    ++rounds;
  }
  StablePartition out;
  out.rounds = rounds;
  out.classes.resize(CountColors(colors));
  for (int v = 0; v < g.num_vertices(); ++v) out.classes[colors[v]].push_back(v);
  return out;
}

bool IsStablePartition(const Graph& g, const std::vector<std::vector<int>>& classes) {
  const int n = g.num_vertices();
  std::vector<int> class_of(n, -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int v : classes[c]) {
      if (v < 0 || v >= n || class_of[v] != -1) return false;
      class_of[v] = static_cast<int>(c);
    }
  }
  if (std::find(class_of.begin(), class_of.end(), -1) != class_of.end()) return false;

  auto profile = [&](int v) {
    std::vector<int> counts(classes.size(), 0);
    for (int u : g.neighbors(v)) ++counts[class_of[u]];
    return counts;
  };
  for (const auto& cls : classes) {
    if (cls.empty()) return false;
    const int head = cls.front();
    const auto head_profile = profile(head);
    for (int v : cls) {
      if (g.features().row(v) != g.features().row(head)) return false;
      if (profile(v) != head_profile) return false;
    }
  }
  return true;
}

std::vector<ComputationTree> MakeComputationTrees(const Graph& g, int depth) {
  if (depth < 1) throw ValidationError("depth must be at least 1");
  const int n = g.num_vertices();
  std::vector<ComputationTree> level(n);
  for (int v = 0; v < n; ++v) {
    auto node = std::make_shared<TreeNode>();
    node->feature = g.features().row(v).transpose();
    level[v] = std::move(node);
  }
  for (int k = 2; k <= depth; ++k) {
    std::vector<ComputationTree> next(n);
    for (int v = 0; v < n; ++v) {
      auto node = std::make_shared<TreeNode>();
      node->feature = g.features().row(v).transpose();
      for (int u : g.neighbors(v)) {
        node->children.push_back(level[u]);
        node->depth = std::max(node->depth, level[u]->depth + 1);
      }
      next[v] = std::move(node);
    }
    level = std::move(next);
  }
  return level;
}

ComputationTree MakeComputationTree(const Graph& g, int v, int depth) {
  if (v < 0 || v >= g.num_vertices()) {
    throw ValidationError("vertex " + std::to_string(v) + " out of range");
  }
  return MakeComputationTrees(g, depth)[v];
}

std::uint64_t ExpandedSize(const ComputationTree& tree) {
  std::map<const TreeNode*, std::uint64_t> memo;
  auto size = [&](auto&& self, const TreeNode* node) -> std::uint64_t {
    if (auto it = memo.find(node); it != memo.end()) return it->second;
    std::uint64_t total = 1;
    for (const auto& child : node->children) {
      const std::uint64_t s = self(self, child.get());
      total = (s > std::numeric_limits<std::uint64_t>::max() - total)
                  ? std::numeric_limits<std::uint64_t>::max()
                  : total + s;
    }
    memo.emplace(node, total);
    return total;
  };
  return size(size, tree.get());
}

}  // namespace fswgnn
