// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#include "fswgnn/analysis.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fswgnn/tmd.h"

namespace fswgnn {

std::optional<MetricKind> ParseMetricKind(std::string_view name) {
  if (name == "ds_l1") return MetricKind::kDsL1;
  if (name == "ds_l2") return MetricKind::kDsL2;
  if (name == "tmd") return MetricKind::kTmd;
  return std::nullopt;
}

std::string_view MetricName(MetricKind kind) {
  switch (kind) {
    case MetricKind::kDsL1:
      return "ds_l1";
    case MetricKind::kDsL2:
      return "ds_l2";
    case MetricKind::kTmd:
      return "tmd";
  }
  return "unknown";
}

double EvaluateMetric(const MetricSpec& spec, const Graph& g1, const Graph& g2) {
  switch (spec.kind) {
    case MetricKind::kDsL1:
      return DsMetricL1(g1, g2).value;
    case MetricKind::kDsL2:
      return DsMetricL2(g1, g2, spec.l2).value;
    case MetricKind::kTmd: {
      const int depth =
          spec.depth > 0 ? spec.depth
                         : std::min(std::max(g1.num_vertices(), g2.num_vertices()) + 1,
                                    kMaxTmdDepth);
      return Tmd(g1, g2, depth);
    }
  }
  throw ValidationError("unknown metric");
}

DistortionReport ComputeDistortionReport(const GraphCorpus& corpus,
                                         const FswGnnModel& model,
                                         const MetricSpec& metric,
                                         const Floors& floors) {
  if (corpus.graphs.empty()) throw ValidationError("empty corpus");
  corpus.Validate();

  MetricSpec resolved = metric;
  if (resolved.kind == MetricKind::kTmd && resolved.depth <= 0) {
    int max_n = 0;
    for (const Graph& g : corpus.graphs) max_n = std::max(max_n, g.num_vertices());
    resolved.depth = std::min(max_n + 1, kMaxTmdDepth);
  }

  std::vector<Vector> embeddings;
  embeddings.reserve(corpus.graphs.size());
  for (const Graph& g : corpus.graphs) embeddings.push_back(GraphEmbedding(model, g));

  DistortionReport report;
  report.metric_name = std::string(MetricName(metric.kind));
  report.seed = model.seed;
  const int n = corpus.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      PairRecord rec;
      rec.first = i;
      rec.second = j;
      try {
        rec.metric = EvaluateMetric(resolved, corpus.graphs[i], corpus.graphs[j]);
      } catch (const ComputationError& e) {
        throw ComputationError("metric failed on pair (" + std::to_string(i) +
                               ", " + std::to_string(j) + "): " + e.what());
      }
      rec.embedding_distance = (embeddings[i] - embeddings[j]).norm();
      const double scale = std::max({1.0, embeddings[i].norm(), embeddings[j].norm()});
      const bool metric_zero = rec.metric <= floors.metric;
      const bool embedding_zero = rec.embedding_distance <= floors.embedding * scale;
      rec.excluded = metric_zero;
      rec.violation = metric_zero != embedding_zero;
      if (rec.violation) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "pair (" << i << ", " << j << "): metric " << rec.metric
            << ", embedding distance " << rec.embedding_distance;
        report.violations.push_back(msg.str());
      }
      if (metric_zero) {
        ++report.excluded_pairs;
      } else if (!rec.violation) {
        rec.ratio = rec.embedding_distance / rec.metric;
        report.ratios.push_back(*rec.ratio);
      }
      report.pairs.push_back(rec);
    }
  }
  report.pair_count = static_cast<int>(report.pairs.size());
  if (!report.ratios.empty()) {
    const auto [lo, hi] = std::minmax_element(report.ratios.begin(), report.ratios.end());
    report.c_hat = *lo;
    report.c_hat_upper = *hi;
    report.distortion = *hi / *lo;
  }
  return report;
}

HolderFit FitHolder(std::span<const std::pair<double, double>> pairs,
                    double metric_floor, int bins) {
  std::vector<std::pair<double, double>> logs;
  for (const auto& [rho, dist] : pairs) {
    if (rho > metric_floor && dist > 0.0 && std::isfinite(rho) && std::isfinite(dist)) {
      logs.emplace_back(std::log(rho), std::log(dist));
    }
  }
  if (logs.size() < 3) {
    throw ValidationError("Hölder fit needs at least 3 pairs above the metric floor, got " +
                          std::to_string(logs.size()));
  }
  if (bins <= 0) bins = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(logs.size()))));
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& p : logs) {
    lo = std::min(lo, p.first);
    hi = std::max(hi, p.first);
  }
  if (!(hi - lo > 1e-12)) throw ValidationError("Hölder fit needs a spread of metric values");

  const double width = (hi - lo) / bins;
  std::vector<std::optional<std::pair<double, double>>> envelope(bins);
  for (const auto& p : logs) {
    const int b = std::min(bins - 1, static_cast<int>((p.first - lo) / width));
    if (!envelope[b] || p.second < envelope[b]->second) envelope[b] = p;
  }
  std::vector<std::pair<double, double>> points;
  for (const auto& e : envelope) {
    if (e) points.push_back(*e);
  }
  if (points.size() < 2) throw ValidationError("Hölder fit envelope has fewer than 2 points");

  const double count = static_cast<double>(points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double alpha = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  const double intercept = (sy - alpha * sx) / count;
  double sq = 0.0;
  for (const auto& [x, y] : points) {
    const double r = y - (intercept + alpha * x);
    sq += r * r;
  }
  return {alpha, std::exp(intercept), std::sqrt(sq / count),
          static_cast<int>(points.size())};
}

namespace {

void CheckRows(const Matrix& h, const Graph& g) {
  if (h.rows() != g.num_vertices()) {
    throw ValidationError("feature matrix has " + std::to_string(h.rows()) +
                          " rows for " + std::to_string(g.num_vertices()) +
                          " vertices");
  }
}

}  // namespace

double DirichletEnergy(const Matrix& h, const Graph& g) {
  CheckRows(h, g);
  std::vector<double> terms;
  terms.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    terms.push_back((h.row(e.first) - h.row(e.second)).squaredNorm());
  }
  return CanonicalSum(std::move(terms)) / g.num_vertices();
}

double MeanAverageDistance(const Matrix& h, const Graph& g) {
  CheckRows(h, g);
  if (g.num_edges() == 0) return 0.0;
  std::vector<double> terms;
  terms.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    const double nu = h.row(e.first).norm();
    const double nv = h.row(e.second).norm();
    if (nu < 1e-12 || nv < 1e-12) {
      terms.push_back(1.0);
    } else if (h.row(e.first) == h.row(e.second)) {
      // Exact zero; the cosine formula can leave a rounding residue here.
      terms.push_back(0.0);
    } else {
      terms.push_back(1.0 - h.row(e.first).dot(h.row(e.second)) / (nu * nv));
    }
  }
  return CanonicalSum(std::move(terms)) / g.num_edges();
}

std::vector<SmoothnessPoint> SmoothnessProfile(const FswGnnModel& model,
                                               const Graph& g) {
  const auto layers = NodeEmbeddings(model, g);
  std::vector<SmoothnessPoint> out;
  for (std::size_t t = 0; t < layers.size(); ++t) {
    out.push_back({static_cast<int>(t), DirichletEnergy(layers[t], g),
                   MeanAverageDistance(layers[t], g)});
  }
  return out;
}

}  // namespace fswgnn
