// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#include "fswgnn/generators.h"

#include <string>

namespace fswgnn {

std::optional<Topology> ParseTopology(std::string_view name) {
  if (name == "ring") return Topology::kRing;
  if (name == "crossring") return Topology::kCrossRing;
  if (name == "cliquepath") return Topology::kCliquePath;
  return std::nullopt;
}

std::string_view TopologyName(Topology topology) {
  switch (topology) {
    case Topology::kRing:
      return "ring";
    case Topology::kCrossRing:
      return "crossring";
    case Topology::kCliquePath:
      return "cliquepath";
  }
  return "unknown";
}

TransferGraph MakeTransferGraph(Topology topology, int radius) {
  if (radius < 2) {
    throw ValidationError("radius must be at least 2, got " +
                          std::to_string(radius));
  }
  const int r = radius;
  const int n = 2 * r;
  std::vector<std::pair<int, int>> edges;
  int source = 0;
  int target = 0;
  switch (topology) {
    case Topology::kRing:
    case Topology::kCrossRing:
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      if (topology == Topology::kCrossRing) {
        for (int i = 1; i < r; ++i) edges.emplace_back(i, n - i);
      }
      target = r;
      break;
    case Topology::kCliquePath:
      for (int i = 0; i <= r; ++i) {
        for (int j = i + 1; j <= r; ++j) edges.emplace_back(i, j);
      }
      for (int i = r; i < n - 1; ++i) edges.emplace_back(i, i + 1);
      target = n - 1;
      break;
  }
  Matrix features = Matrix::Ones(n, 2);
  features.row(source) << 1.0, 0.0;
  features.row(target) << 0.0, 1.0;
  return {Graph(n, std::move(edges), std::move(features)), source, target};
}

Graph MakeNeighborsMatch(int radius) {
  if (radius < 2 || radius > 12) {
    throw ValidationError("radius must be in [2, 12], got " +
                          std::to_string(radius));
  }
  const int leaves = 1 << radius;
  const int n = 2 * leaves - 1;
  const int first_leaf = leaves - 1;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int child = 1; child < n; ++child) edges.emplace_back((child - 1) / 2, child);
  Matrix features = Matrix::Ones(n, leaves + 1);
  for (int k = 0; k < leaves; ++k) {
    features.row(first_leaf + k).setZero();
    features(first_leaf + k, k) = 1.0;
  }
  features.row(0).setZero();
  features(0, 0) = 1.0;
  features(0, leaves) = 1.0;
  return Graph(n, std::move(edges), std::move(features));
}

GraphCorpus EnumerateSmallGraphs(int n, const Vector& feature) {
  if (n < 1 || n > 6) {
    throw ValidationError("n must be in [1, 6], got " + std::to_string(n));
  }
  if (feature.size() < 1) throw ValidationError("feature must be non-empty");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  Matrix features = feature.transpose().replicate(n, 1);
  GraphCorpus corpus;
  const long count = 1L << pairs.size();
  for (long mask = 0; mask < count; ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask & (1L << k)) edges.push_back(pairs[k]);
    }
    corpus.graphs.emplace_back(n, std::move(edges), features);
    corpus.labels.push_back("n" + std::to_string(n) + "_m" + std::to_string(mask));
  }
  return corpus;
}

Graph MakeCycle(int n, const Vector& feature) {
  if (n < 3) throw ValidationError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges), feature.transpose().replicate(n, 1));
}

Graph MakePath(int n, const Vector& feature) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges), feature.transpose().replicate(n, 1));
}

}  // namespace fswgnn
