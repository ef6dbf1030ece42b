// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#include "fswgnn/cli.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fswgnn/analysis.h"
#include "fswgnn/ds_metric.h"
#include "fswgnn/fsw.h"
#include "fswgnn/generators.h"
#include "fswgnn/gnn.h"
#include "fswgnn/json_format.h"
#include "fswgnn/tmd.h"
#include "fswgnn/wl.h"

namespace fswgnn {
namespace {

using Json = nlohmann::ordered_json;

// Flags shared by the subcommands; each subcommand binds the ones it uses.
struct RunConfig {
  std::uint64_t seed = 0;
  int hidden_dim = 0;   // 0: 2 N d + 2
  int iterations = -1;  // -1: N
  int depth = 0;        // 0: N + 1
  std::string norm = "l1";
  std::string metric = "ds_l1";
  double tol = 1e-6;
  int max_iterations = 20000;
  std::string topology;
  int radius = 0;
  int enumerate = 0;
  double feature = 1.0;
  bool node_embeddings = false;
  bool hidden_layer = false;
  bool plan = false;
  std::string matrix;
  std::string csv;
  std::string output;
  std::vector<std::string> inputs;
};

void WriteText(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw ValidationError("cannot write " + cfg.output);
  file << text << '\n';
}

void WriteCsvFile(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw ValidationError("cannot write " + path);
  file << text;
}

int MaxVertices(const std::vector<Graph>& graphs) {
  int n = 0;
  for (const Graph& g : graphs) n = std::max(n, g.num_vertices());
  return n;
}

FswGnnModel ModelFor(const RunConfig& cfg, int max_vertices, int feature_dim) {
  const int m = cfg.hidden_dim > 0 ? cfg.hidden_dim
                                   : DefaultHiddenDim(max_vertices, feature_dim);
  const int t = cfg.iterations >= 0 ? cfg.iterations : max_vertices;
  GnnOptions options;
  options.hidden_layer = cfg.hidden_layer;
  return InitModel(feature_dim, m, t, cfg.seed, options);
}

void RunGen(const RunConfig& cfg, std::ostream& out) {
  if (cfg.enumerate > 0) {
    GraphCorpus corpus;
    for (int n = 1; n <= cfg.enumerate; ++n) {
      GraphCorpus part = EnumerateSmallGraphs(n, Vector::Constant(1, cfg.feature));
      std::move(part.graphs.begin(), part.graphs.end(), std::back_inserter(corpus.graphs));
      std::move(part.labels.begin(), part.labels.end(), std::back_inserter(corpus.labels));
    }
    WriteText(cfg, DumpJson(CorpusToJson(corpus)), out);
    return;
  }
  if (cfg.topology.empty()) throw ValidationError("gen needs --topology or --enumerate");
  if (cfg.topology == "neighborsmatch") {
    WriteText(cfg, DumpJson(GraphToJson(MakeNeighborsMatch(cfg.radius))), out);
    return;
  }
  const auto topology = ParseTopology(cfg.topology);
  if (!topology) throw ValidationError("unknown topology " + cfg.topology);
  const TransferGraph tg = MakeTransferGraph(*topology, cfg.radius);
  Json doc = GraphToJson(tg.graph);
  doc["source"] = tg.source;
  doc["target"] = tg.target;
  WriteText(cfg, DumpJson(doc), out);
}

void RunWl(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() == 2) {
    const Graph a = LoadGraphFile(cfg.inputs[0]);
    const Graph b = LoadGraphFile(cfg.inputs[1]);
    Json doc;
    doc["equivalent"] = WlEquivalent(a, b);
    doc["iterations"] = std::max(a.num_vertices(), b.num_vertices());
    WriteText(cfg, DumpJson(doc), out);
    return;
  }
  if (cfg.inputs.size() != 1) throw ValidationError("wl takes one or two graph files");
  const Graph g = LoadGraphFile(cfg.inputs[0]);
  const int t = cfg.iterations >= 0 ? cfg.iterations : g.num_vertices();
  const ColorAssignment colors = WlColors(g, t);
  const StablePartition stable = ComputeStablePartition(g);
  Json doc;
  doc["iterations"] = t;
  doc["colors"] = colors.colors;
  doc["stable_rounds"] = stable.rounds;
  doc["stable_partition"] = stable.classes;
  WriteText(cfg, DumpJson(doc), out);
}

void RunEmbed(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 1) throw ValidationError("embed takes one multiset file");
  std::ifstream in(cfg.inputs[0]);
  if (!in) throw ValidationError("cannot open " + cfg.inputs[0]);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(cfg.inputs[0] + ": malformed document: " + e.what());
  }
  if (!doc.is_array()) throw ValidationError("multiset must be a JSON array of vectors");
  const int n = static_cast<int>(doc.size());
  int d = 0;
  Matrix points;
  for (int i = 0; i < n; ++i) {
    if (!doc[i].is_array() || doc[i].empty()) {
      throw ValidationError("multiset element " + std::to_string(i) + " is not a vector");
    }
    if (i == 0) {
      d = static_cast<int>(doc[0].size());
      points.resize(n, d);
    }
    if (static_cast<int>(doc[i].size()) != d) {
      throw ValidationError("ragged multiset: element " + std::to_string(i));
    }
    for (int k = 0; k < d; ++k) {
      if (!doc[i][k].is_number()) throw ValidationError("multiset entries must be numbers");
      points(i, k) = doc[i][k].get<double>();
    }
  }
  const int m = cfg.hidden_dim > 0 ? cfg.hidden_dim : 16;
  const FswParams params = SampleFswParams(std::max(d, 1), m, cfg.seed);
  WriteText(cfg, DumpJson(VectorToJson(EmbedMultiset(points, params)), -1), out);
}

void RunForward(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 1) throw ValidationError("forward takes one graph file");
  const Graph g = LoadGraphFile(cfg.inputs[0]);
  const FswGnnModel model = ModelFor(cfg, g.num_vertices(), g.feature_dim());
  Json doc;
  doc["hidden_dim"] = model.hidden_dim;
  doc["iterations"] = model.iterations;
  doc["seed"] = model.seed;
  doc["graph_embedding"] = VectorToJson(GraphEmbedding(model, g));
  if (cfg.node_embeddings) {
    auto layers = Json::array();
    for (const Matrix& h : NodeEmbeddings(model, g)) layers.push_back(MatrixToJson(h));
    doc["node_embeddings"] = std::move(layers);
  }
  WriteText(cfg, DumpJson(doc), out);
}

std::string MatrixCsv(const GraphCorpus& corpus,
                      const std::function<double(const Graph&, const Graph&)>& metric) {
  const int n = corpus.size();
  Matrix values = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      try {
        values(i, j) = values(j, i) = metric(corpus.graphs[i], corpus.graphs[j]);
      } catch (const ComputationError& e) {
        throw ComputationError("pair (" + std::to_string(i) + ", " +
                               std::to_string(j) + "): " + e.what());
      }
    }
  }
  std::string text;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j > 0) text += ',';
      text += FormatDouble(values(i, j));
    }
    text += '\n';
  }
  return text;
}

void RunMetricDs(const RunConfig& cfg, std::ostream& out) {
  if (cfg.norm != "l1" && cfg.norm != "l2") throw ValidationError("--norm must be l1 or l2");
  DsL2Options l2;
  l2.tol = cfg.tol;
  l2.max_iterations = cfg.max_iterations;
  if (!cfg.matrix.empty()) {
    const GraphCorpus corpus = LoadCorpusFile(cfg.matrix);
    std::string csv = MatrixCsv(corpus, [&](const Graph& a, const Graph& b) {
      return cfg.norm == "l1" ? DsMetricL1(a, b).value : DsMetricL2(a, b, l2).value;
    });
    csv.pop_back();
    WriteText(cfg, csv, out);
    return;
  }
  if (cfg.inputs.size() != 2) throw ValidationError("metric ds takes two graph files");
  const Graph a = LoadGraphFile(cfg.inputs[0]);
  const Graph b = LoadGraphFile(cfg.inputs[1]);
  Json doc;
  TransportPlan plan;
  if (cfg.norm == "l1") {
    const DsResult r = DsMetricL1(a, b);
    doc["value"] = r.value;
    plan = r.plan;
  } else {
    const DsL2Result r = DsMetricL2(a, b, l2);
    doc["value"] = r.value;
    doc["gap"] = r.gap;
    plan = r.plan;
  }
  doc["norm"] = cfg.norm;
  if (cfg.plan) doc["plan"] = MatrixToJson(plan.coupling);
  WriteText(cfg, DumpJson(doc), out);
}

void RunMetricTmd(const RunConfig& cfg, std::ostream& out) {
  auto depth_for = [&](const Graph& a, const Graph& b) {
    return cfg.depth > 0 ? cfg.depth
                         : std::min(std::max(a.num_vertices(), b.num_vertices()) + 1,
                                    kMaxTmdDepth);
  };
  if (!cfg.matrix.empty()) {
    const GraphCorpus corpus = LoadCorpusFile(cfg.matrix);
    const int depth = cfg.depth > 0 ? cfg.depth
                                    : std::min(MaxVertices(corpus.graphs) + 1, kMaxTmdDepth);
    std::string csv = MatrixCsv(
        corpus, [&](const Graph& a, const Graph& b) { return Tmd(a, b, depth); });
    csv.pop_back();
    WriteText(cfg, csv, out);
    return;
  }
  if (cfg.inputs.size() != 2) throw ValidationError("metric tmd takes two graph files");
  const Graph a = LoadGraphFile(cfg.inputs[0]);
  const Graph b = LoadGraphFile(cfg.inputs[1]);
  const int depth = depth_for(a, b);
  Json doc;
  doc["value"] = Tmd(a, b, depth);
  doc["depth"] = depth;
  WriteText(cfg, DumpJson(doc), out);
}

void RunDistortion(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 1) throw ValidationError("distortion takes one corpus file");
  const GraphCorpus corpus = LoadCorpusFile(cfg.inputs[0]);
  if (corpus.graphs.empty()) throw ValidationError("empty corpus");
  const auto kind = ParseMetricKind(cfg.metric);
  if (!kind) throw ValidationError("--metric must be ds_l1, ds_l2 or tmd");
  const FswGnnModel model =
      ModelFor(cfg, MaxVertices(corpus.graphs), corpus.graphs.front().feature_dim());
  MetricSpec spec;
  spec.kind = *kind;
  spec.depth = cfg.depth;
  spec.l2.tol = cfg.tol;
  spec.l2.max_iterations = cfg.max_iterations;
  const DistortionReport report = ComputeDistortionReport(corpus, model, spec);

  Json doc;
  doc["metric"] = report.metric_name;
  doc["seed"] = report.seed;
  doc["hidden_dim"] = model.hidden_dim;
  doc["iterations"] = model.iterations;
  doc["pair_count"] = report.pair_count;
  doc["excluded_pairs"] = report.excluded_pairs;
  doc["c_hat"] = report.c_hat;
  doc["C_hat"] = report.c_hat_upper;
  doc["distortion"] = report.distortion ? Json(*report.distortion) : Json(nullptr);
  doc["violations"] = report.violations;
  std::vector<std::pair<double, double>> samples;
  for (const PairRecord& p : report.pairs) {
    if (p.ratio) samples.emplace_back(p.metric, p.embedding_distance);
  }
  try {
    const HolderFit fit = FitHolder(samples);
    doc["holder"] = {{"alpha", fit.alpha}, {"c", fit.c}, {"residual", fit.residual}};
  } catch (const ValidationError&) {
    doc["holder"] = nullptr;
  }
  WriteText(cfg, DumpJson(doc), out);

  if (!cfg.csv.empty()) {
    std::string csv = "first,second,metric,embedding_distance,ratio\n";
    for (const PairRecord& p : report.pairs) {
      csv += std::to_string(p.first) + ',' + std::to_string(p.second) + ',' +
             FormatDouble(p.metric) + ',' + FormatDouble(p.embedding_distance) + ',' +
             (p.ratio ? FormatDouble(*p.ratio) : std::string()) + '\n';
    }
    WriteCsvFile(cfg.csv, csv);
  }
}

void RunSmoothness(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 1) throw ValidationError("smoothness takes one graph file");
  const Graph g = LoadGraphFile(cfg.inputs[0]);
  const FswGnnModel model = ModelFor(cfg, g.num_vertices(), g.feature_dim());
  auto layers = Json::array();
  for (const SmoothnessPoint& p : SmoothnessProfile(model, g)) {
    layers.push_back({{"layer", p.layer}, {"dirichlet", p.dirichlet}, {"mad", p.mad}});
  }
  Json doc;
  doc["hidden_dim"] = model.hidden_dim;
  doc["iterations"] = model.iterations;
  doc["seed"] = model.seed;
  doc["layers"] = std::move(layers);
  WriteText(cfg, DumpJson(doc), out);
}

}  // namespace

int Dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"FSW-GNN embeddings, WL refinement and WL-equivalent graph metrics"};
  app.name("fswgnn");
  app.require_subcommand(1);

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", cfg.output, "Write the result here instead of stdout");
  };
  auto add_model = [&](CLI::App* cmd) {
    cmd->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    cmd->add_option("--hidden-dim", cfg.hidden_dim, "Embedding width m (default 2Nd+2)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--iterations", cfg.iterations,
                    "Message-passing iterations T (default N)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--hidden-layer", cfg.hidden_layer,
                  "Use W2 relu(W1 x) updates instead of linear ones");
  };

  auto* gen = app.add_subcommand("gen", "Generate a graph or a corpus");
  gen->add_option("--topology", cfg.topology, "ring, crossring, cliquepath or neighborsmatch")
      ->check(CLI::IsMember({"ring", "crossring", "cliquepath", "neighborsmatch"}));
  gen->add_option("--radius", cfg.radius, "Problem radius r");
  gen->add_option("--enumerate", cfg.enumerate,
                  "Emit every graph on 1..N vertices as a corpus")
      ->check(CLI::Range(1, 6));
  gen->add_option("--feature", cfg.feature, "Constant feature for --enumerate")
      ->capture_default_str();
  add_output(gen);

  auto* wl = app.add_subcommand("wl", "WL colors of one graph, or equivalence of two");
  wl->add_option("graphs", cfg.inputs, "Graph file(s)")->required()->expected(1, 2);
  wl->add_option("--iterations", cfg.iterations, "Refinement rounds (default n)")
      ->check(CLI::NonNegativeNumber);
  add_output(wl);

  auto* embed = app.add_subcommand("embed", "FSW embedding of a multiset");
  embed->add_option("multiset", cfg.inputs, "JSON array of vectors")->required()->expected(1);
  embed->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  embed->add_option("--hidden-dim,-m", cfg.hidden_dim, "Output dimension m (default 16)")
      ->check(CLI::PositiveNumber);
  add_output(embed);

  auto* forward = app.add_subcommand("forward", "FSW-GNN forward pass");
  forward->add_option("graph", cfg.inputs, "Graph file")->required()->expected(1);
  add_model(forward);
  forward->add_flag("--node-embeddings", cfg.node_embeddings, "Include H^(0..T)");
  add_output(forward);

  auto* metric = app.add_subcommand("metric", "Graph distances");
  metric->require_subcommand(1);
  auto* ds = metric->add_subcommand("ds", "DS metric");
  ds->add_option("graphs", cfg.inputs, "Two graph files")->expected(0, 2);
  ds->add_option("--norm", cfg.norm, "l1 (exact LP) or l2 (Frank-Wolfe)")
      ->check(CLI::IsMember({"l1", "l2"}))
      ->capture_default_str();
  ds->add_option("--tol", cfg.tol, "Duality-gap tolerance for l2")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ds->add_option("--max-iterations", cfg.max_iterations, "Frank-Wolfe iteration cap for l2")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ds->add_flag("--plan", cfg.plan, "Include the optimal coupling");
  ds->add_option("--matrix", cfg.matrix, "Corpus file; emit the distance matrix as CSV");
  add_output(ds);
  auto* tmd = metric->add_subcommand("tmd", "Tree Mover's Distance");
  tmd->add_option("graphs", cfg.inputs, "Two graph files")->expected(0, 2);
  tmd->add_option("--depth", cfg.depth, "Computation-tree depth K (default N+1)")
      ->check(CLI::Range(1, kMaxTmdDepth));
  tmd->add_option("--matrix", cfg.matrix, "Corpus file; emit the distance matrix as CSV");
  add_output(tmd);

  auto* distortion = app.add_subcommand("distortion", "Empirical bi-Lipschitz distortion");
  distortion->add_option("corpus", cfg.inputs, "Corpus file")->required()->expected(1);
  distortion->add_option("--metric", cfg.metric, "ds_l1, ds_l2 or tmd")
      ->check(CLI::IsMember({"ds_l1", "ds_l2", "tmd"}))
      ->capture_default_str();
  distortion->add_option("--depth", cfg.depth, "TMD depth K (default N+1)")
      ->check(CLI::Range(1, kMaxTmdDepth));
  distortion->add_option("--tol", cfg.tol, "Duality-gap tolerance for ds_l2")
      ->check(CLI::PositiveNumber);
  distortion->add_option("--max-iterations", cfg.max_iterations,
                         "Frank-Wolfe iteration cap for ds_l2")
      ->check(CLI::PositiveNumber);
  distortion->add_option("--csv", cfg.csv, "Also write per-pair rows to this CSV");
  add_model(distortion);
  add_output(distortion);

  auto* smoothness = app.add_subcommand("smoothness", "Dirichlet energy and MAD per layer");
  smoothness->add_option("graph", cfg.inputs, "Graph file")->required()->expected(1);
  add_model(smoothness);
  add_output(smoothness);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    if (*gen) RunGen(cfg, out);
    if (*wl) RunWl(cfg, out);
    if (*embed) RunEmbed(cfg, out);
    if (*forward) RunForward(cfg, out);
    if (*ds) RunMetricDs(cfg, out);
    if (*tmd) RunMetricTmd(cfg, out);
    if (*distortion) RunDistortion(cfg, out);
    if (*smoothness) RunSmoothness(cfg, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitOk;
}

}  // namespace fswgnn
