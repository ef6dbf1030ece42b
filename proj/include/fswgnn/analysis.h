// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FSWGNN_ANALYSIS_H_
#define FSWGNN_ANALYSIS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fswgnn/ds_metric.h"
#include "fswgnn/gnn.h"
#include "fswgnn/graph.h"

namespace fswgnn {

enum class MetricKind { kDsL1, kDsL2, kTmd };

std::optional<MetricKind> ParseMetricKind(std::string_view name);
std::string_view MetricName(MetricKind kind);

struct MetricSpec {
  MetricKind kind = MetricKind::kDsL1;
  // TMD depth; 0 means N + 1 for the largest vertex count N of the corpus.
  int depth = 0;
  DsL2Options l2;
};

double EvaluateMetric(const MetricSpec& spec, const Graph& g1, const Graph& g2);

struct Floors {
  // Metric values at or below this count as zero.
  double metric = 1e-7;
  // Embedding distances at or below this, relative to max(1, |E1|, |E2|),
  // count as zero.
  double embedding = 1e-8;
};

struct PairRecord {
  int first = 0;
  int second = 0;
  double metric = 0.0;
  double embedding_distance = 0.0;
  // Embedding distance over metric; set only for pairs that enter the ratio
  // statistics.
  std::optional<double> ratio;
  bool excluded = false;
  bool violation = false;
};

struct DistortionReport {
  std::string metric_name;
  std::uint64_t seed = 0;
  int pair_count = 0;
  int excluded_pairs = 0;
  std::vector<double> ratios;
  double c_hat = 0.0;
  double c_hat_upper = 0.0;  // C_hat
  // C_hat / c_hat; empty when no pair has a positive metric value.
  std::optional<double> distortion;
  // One message per pair where "metric is zero" and "embeddings coincide"
  // disagree.
  std::vector<std::string> violations;
  std::vector<PairRecord> pairs;
};

// Evaluates every unordered pair of the corpus. Pairs with metric <= floor
// are excluded from the ratio statistics; a pair is a violation when exactly
// one of metric and embedding distance is (numerically) zero. Throws
// ValidationError for an empty corpus and ComputationError, naming the pair,
// when the metric fails.
DistortionReport ComputeDistortionReport(const GraphCorpus& corpus,
                                         const FswGnnModel& model,
                                         const MetricSpec& metric,
                                         const Floors& floors = {});

struct HolderFit {
  double alpha = 0.0;
  double c = 0.0;
  // Root-mean-square log residual over the envelope points.
  double residual = 0.0;
  int envelope_points = 0;
};

// Fits |dE| >= c * rho^alpha on the lower envelope: pairs with rho > floor are
// binned by log(rho) into `bins` equal-width bins (0: ceil(sqrt(count))), the
// smallest |dE| of each bin is kept, and log|dE| = log c + alpha log rho is
// solved by least squares. Pairs are (rho, |dE|). Throws ValidationError with
// fewer than three usable pairs or a degenerate rho range.
HolderFit FitHolder(std::span<const std::pair<double, double>> pairs,
                    double metric_floor = 1e-7, int bins = 0);

// (1/|V|) * sum over edges of |h_u - h_v|^2.
double DirichletEnergy(const Matrix& h, const Graph& g);

// Mean over edges of 1 - cos(h_u, h_v); a row with norm below 1e-12 makes
// its edges contribute 1. Zero for edgeless graphs.
double MeanAverageDistance(const Matrix& h, const Graph& g);

struct SmoothnessPoint {
  int layer = 0;
  double dirichlet = 0.0;
  double mad = 0.0;
};

// Dirichlet energy and MAD of every layer H^(0..T) of the model.
std::vector<SmoothnessPoint> SmoothnessProfile(const FswGnnModel& model,
                                               const Graph& g);

}  // namespace fswgnn

#endif  // FSWGNN_ANALYSIS_H_
