// dsg: command-line front end for the densest-subgraph toolkit.
//
//   dsg solve    --method <m> [options] graph.txt
//   dsg bench    [options] corpus_dir
//   dsg verify   [options]
//   dsg features [--labels set.txt | --label-exact] graph.txt
//   dsg corrupt  --eps 0.2 --seed 1 [--optimum set.txt] graph.txt

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsg/augmented.hpp"
#include "dsg/bench.hpp"
#include "dsg/exact.hpp"
#include "dsg/graph.hpp"
#include "dsg/peeling.hpp"
#include "dsg/predictor_io.hpp"
#include "dsg/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr int exit_error = 1;
constexpr int exit_no_input = 2;
constexpr int exit_violation = 3;

dsg::Graph load_graph(const std::string& path, bool directed) {
  std::ifstream in(path);
  if (!in) throw dsg::Error("cannot open " + path);
  dsg::Graph g = dsg::parse_edge_list(in, directed);
  if (g.dropped_self_loops() || g.dropped_duplicates())
    std::cerr << "warning: " << path << ": dropped " << g.dropped_self_loops() << " self-loop(s) and "
              << g.dropped_duplicates() << " duplicate edge(s)\n";
  return g;
}

dsg::NodeSet load_node_set(const std::string& path, const dsg::Graph& g) {
  std::ifstream in(path);
  if (!in) throw dsg::Error("cannot open " + path);
  return dsg::parse_node_set(in, g);
}

json labels_of(const dsg::Graph& g, const dsg::NodeSet& s) {
  json out = json::array();
  for (dsg::node_t v : s) out.push_back(g.label(v));
  return out;
}

struct SolveOptions {
  std::string graph;
  std::string method;
  std::string objective = "standard";
  bool directed = false;
  double eps = 0.2;
  double eps1 = 0.2;
  double eps2 = 0.2;
  std::uint64_t seed = 0;
  std::string predictions;
  std::string predictions2;
  double threshold = 0.5;
  bool ceil_budget = false;
};

int run_solve(const SolveOptions& o) {
  const bool directed = o.directed || o.method == "augmented_directed";
  const dsg::Graph g = load_graph(o.graph, directed);
  const auto rounding = o.ceil_budget ? dsg::BudgetRounding::ceil : dsg::BudgetRounding::floor;

  json rec;
  rec["graph"] = fs::path(o.graph).stem().string();
  rec["method"] = o.method;
  const auto start = std::chrono::steady_clock::now();
  auto finish = [&](const dsg::Density& d) {
    rec["density"] = d.value();
    rec["density_num"] = d.numerator();
    rec["density_den"] = d.denominator();
    rec["density_form"] = d.kind() == dsg::Density::Kind::ratio ? "ratio" : "sqrt_den";
    rec["wall_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  auto predicted = [&](const dsg::NodeSet& optimum) {
    if (!o.predictions.empty()) return dsg::load_predictions(o.predictions, g, o.threshold).nodes;
    return dsg::corrupt_solution(g, optimum, o.eps, o.seed).nodes;
  };

  if (o.method == "augmented_directed") {
    dsg::NodeSet s1, s2;
    if (!o.predictions.empty()) {
      if (o.predictions2.empty()) throw dsg::ContractViolation("--predictions2 (target side) is required");
      s1 = dsg::load_predictions(o.predictions, g, o.threshold).nodes;
      s2 = dsg::load_predictions(o.predictions2, g, o.threshold).nodes;
    } else {
      const auto [b1, b2] = dsg::brute_force_directed_densest(g);
      auto [p1, p2] = dsg::corrupt_directed_solution(g, b1, b2, o.eps1, o.eps2, o.seed);
      s1 = p1.nodes;
      s2 = p2.nodes;
    }
    const auto [out1, out2] = dsg::augment_directed(g, s1, s2, o.eps1, o.eps2, rounding);
    rec["size"] = out1.size() + out2.size();
    rec["source_size"] = out1.size();
    rec["target_size"] = out2.size();
    finish(dsg::directed_density(g, out1, out2));
    rec["eps1"] = o.eps1;
    rec["eps2"] = o.eps2;
    rec["seed"] = o.predictions.empty() ? json(o.seed) : json();
    rec["source_nodes"] = labels_of(g, out1);
    rec["target_nodes"] = labels_of(g, out2);
    std::cout << rec.dump() << '\n';
    return 0;
  }

  if (o.method == "brute" && directed) {
    const auto [s1, s2] = dsg::brute_force_directed_densest(g);
    rec["size"] = s1.size() + s2.size();
    rec["source_size"] = s1.size();
    rec["target_size"] = s2.size();
    finish(dsg::directed_density(g, s1, s2));
    rec["source_nodes"] = labels_of(g, s1);
    rec["target_nodes"] = labels_of(g, s2);
    std::cout << rec.dump() << '\n';
    return 0;
  }
  if (directed) throw dsg::ContractViolation("method '" + o.method + "' requires an undirected graph");

  dsg::NodeSet out;
  bool clique = false;
  bool uses_prediction = false;
  if (o.method == "exact") {
    out = dsg::exact_densest_subgraph(g);
  } else if (o.method == "peel") {
    out = dsg::charikar_peel(g).nodes;
  } else if (o.method == "brute") {
    clique = o.objective == "clique";
    out = dsg::brute_force_densest(g, clique ? dsg::Objective::clique : dsg::Objective::standard);
  } else if (o.method == "predictor") {
    uses_prediction = true;
    out = predicted(o.predictions.empty() ? dsg::exact_densest_subgraph(g) : dsg::NodeSet{});
  } else if (o.method == "augmented") {
    uses_prediction = true;
    const auto s = predicted(o.predictions.empty() ? dsg::exact_densest_subgraph(g) : dsg::NodeSet{});
    out = dsg::augment_undirected(g, s, o.eps, rounding);
  } else if (o.method == "augmented_clique") {
    uses_prediction = true;
    clique = true;
    const auto s = predicted(o.predictions.empty() ? dsg::brute_force_densest(g, dsg::Objective::clique)
                                                   : dsg::NodeSet{});
    out = dsg::augment_clique(g, s, o.eps, rounding);
  } else {
    throw dsg::ContractViolation("unknown method '" + o.method + "'");
  }
  rec["size"] = out.size();
  finish(clique ? dsg::clique_density(g, out) : dsg::density(g, out));
  if (uses_prediction) {
    rec["eps"] = o.eps;
    rec["seed"] = o.predictions.empty() ? json(o.seed) : json();
    rec["threshold"] = o.predictions.empty() ? json() : json(o.threshold);
  }
  rec["nodes"] = labels_of(g, out);
  std::cout << rec.dump() << '\n';
  return 0;
}

int run_bench_cmd(const dsg::BenchConfig& cfg, const std::string& out_dir) {
  const auto result = dsg::run_bench(cfg);
  for (const auto& line : result.log) std::cerr << line << '\n';
  dsg::write_bench_outputs(out_dir, result);
  std::cout << dsg::to_json(result.summary).dump(2) << '\n';
  return 0;
}

int run_verify_cmd(const dsg::VerifyConfig& cfg) {
  const auto report = dsg::run_verify(cfg);
  std::cout << "instances: " << report.instances << " (edgeless: " << report.edgeless << ")\n";
  for (const auto& [name, tally] : report.checks)
    std::cout << name << ": " << tally.passed << " passed, " << tally.failed << " failed\n";
  if (report.ok()) {
    std::cout << "all checks passed\n";
    return 0;
  }
  const auto& f = *report.failure;
  std::cout << "VIOLATION " << f.check << " (" << f.detail << ") at trial " << f.trial << ", instance seed "
            << f.instance_seed << (f.directed ? ", directed" : ", undirected") << "\n--- instance ---\n"
            << f.instance;
  return exit_violation;
}

int run_features(const std::string& graph, const std::string& labels_path, bool label_exact,
                 const std::string& out_path) {
  const dsg::Graph g = load_graph(graph, false);
  std::optional<dsg::NodeSet> labels;
  if (!labels_path.empty()) labels = load_node_set(labels_path, g);
  if (label_exact) labels = dsg::exact_densest_subgraph(g);
  const auto rows = dsg::export_features(g, labels);
  if (out_path.empty()) {
    dsg::write_features_csv(std::cout, rows);
  } else {
    std::ofstream out(out_path);
    dsg::write_features_csv(out, rows);
  }
  return 0;
}

int run_corrupt(const std::string& graph, const std::string& optimum_path, double eps, std::uint64_t seed,
                bool as_csv) {
  const dsg::Graph g = load_graph(graph, false);
  const dsg::NodeSet optimum =
      optimum_path.empty() ? dsg::exact_densest_subgraph(g) : load_node_set(optimum_path, g);
  const auto pred = dsg::corrupt_solution(g, optimum, eps, seed);
  if (as_csv) {
    std::vector<dsg::ScoredNode> rows;
    for (dsg::node_t v = 0; v < g.node_count(); ++v)
      rows.push_back({g.label(v), pred.nodes.contains(v) ? 1.0 : 0.0});
    dsg::write_predictions_csv(std::cout, rows);
  } else {
    dsg::write_node_set(std::cout, g, pred.nodes);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Densest-subgraph toolkit: exact, peeling and prediction-augmented solvers"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run one solver on an edge-list file and print a JSON record");
  solve_cmd->add_option("graph", solve.graph, "Edge-list file")->required();
  solve_cmd->add_option("--method", solve.method, "Solver")
      ->required()
      ->check(CLI::IsMember(
          {"exact", "peel", "predictor", "augmented", "augmented_directed", "augmented_clique", "brute"}));
  solve_cmd->add_option("--objective", solve.objective, "Objective for --method brute")
      ->check(CLI::IsMember({"standard", "clique"}));
  solve_cmd->add_flag("--directed", solve.directed, "Read the graph as directed");
  solve_cmd->add_option("--eps", solve.eps, "Prediction error bound (undirected / clique)");
  solve_cmd->add_option("--eps1", solve.eps1, "Source-side error bound (directed)");
  solve_cmd->add_option("--eps2", solve.eps2, "Target-side error bound (directed)");
  solve_cmd->add_option("--seed", solve.seed, "Seed for synthetic corruption");
  solve_cmd->add_option("--predictions", solve.predictions, "Prediction CSV (source side when directed)");
  solve_cmd->add_option("--predictions2", solve.predictions2, "Target-side prediction CSV (directed)");
  solve_cmd->add_option("--threshold", solve.threshold, "Score threshold for prediction CSVs");
  solve_cmd->add_flag("--ceil-budget", solve.ceil_budget, "Round the augmentation budget up instead of down");

  dsg::BenchConfig bench;
  std::string bench_corpus, bench_predictions, bench_out = "bench_out";
  auto* bench_cmd = app.add_subcommand("bench", "Compare predictor, peeling and augmentation over a corpus");
  bench_cmd->add_option("corpus", bench_corpus, "Directory of edge-list files")->required();
  bench_cmd->add_option("--eps", bench.eps, "Error bound for corruption and augmentation")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Base seed")->capture_default_str();
  bench_cmd->add_option("--predictions", bench_predictions, "Directory of <graph>.csv prediction files");
  bench_cmd->add_option("--threshold", bench.threshold, "Score threshold")->capture_default_str();
  bench_cmd->add_option("--min-edges", bench.min_edges, "Skip graphs with fewer edges")->capture_default_str();
  bench_cmd->add_option("--out", bench_out, "Output directory")->capture_default_str();
  bench_cmd->add_option("--workers", bench.workers, "Worker threads")->capture_default_str();
  bench_cmd->add_flag("--timings", bench.record_timings, "Fill wall_ms in results.csv (not reproducible)");
  bench_cmd->add_option("--exact-limit", bench.exact_node_limit, "Largest node count solved exactly")
      ->capture_default_str();

  dsg::VerifyConfig verify;
  std::vector<double> verify_eps;
  auto* verify_cmd = app.add_subcommand("verify", "Check solvers and bounds on seeded random graphs");
  verify_cmd->add_option("--trials", verify.trials, "Number of random instances")->capture_default_str();
  verify_cmd->add_option("--min-n", verify.min_nodes, "Smallest node count")->capture_default_str();
  verify_cmd->add_option("--max-n", verify.max_nodes, "Largest node count (<= 16)")->capture_default_str();
  verify_cmd->add_option("--eps", verify_eps, "Epsilon grid (repeatable)");
  verify_cmd->add_option("--probs", verify.edge_probabilities, "Edge probabilities");
  verify_cmd->add_option("--seed", verify.seed, "Base seed")->capture_default_str();

  std::string feat_graph, feat_labels, feat_out;
  bool feat_exact = false;
  auto* features_cmd = app.add_subcommand("features", "Write the per-node feature CSV");
  features_cmd->add_option("graph", feat_graph, "Edge-list file")->required();
  auto* labels_opt = features_cmd->add_option("--labels", feat_labels, "Node-set file marking label 1");
  features_cmd->add_flag("--label-exact", feat_exact, "Label nodes with the exact densest subgraph")
      ->excludes(labels_opt);
  features_cmd->add_option("--out", feat_out, "Output file (default stdout)");

  std::string cor_graph, cor_optimum;
  double cor_eps = 0.2;
  std::uint64_t cor_seed = 0;
  bool cor_csv = false;
  auto* corrupt_cmd = app.add_subcommand("corrupt", "Print a seeded corruption of the optimum");
  corrupt_cmd->add_option("graph", cor_graph, "Edge-list file")->required();
  corrupt_cmd->add_option("--optimum", cor_optimum, "Node-set file (default: exact solver)");
  corrupt_cmd->add_option("--eps", cor_eps, "Corruption fraction")->capture_default_str();
  corrupt_cmd->add_option("--seed", cor_seed, "Seed")->capture_default_str();
  corrupt_cmd->add_flag("--csv", cor_csv, "Emit a node,score prediction CSV instead of a node list");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) return run_solve(solve);
    if (*bench_cmd) {
      bench.corpus = bench_corpus;
      if (!bench_predictions.empty()) bench.predictions_dir = fs::path(bench_predictions);
      return run_bench_cmd(bench, bench_out);
    }
    if (*verify_cmd) {
      if (!verify_eps.empty()) verify.eps_grid = verify_eps;
      return run_verify_cmd(verify);
    }
    if (*features_cmd) return run_features(feat_graph, feat_labels, feat_exact, feat_out);
    if (*corrupt_cmd) return run_corrupt(cor_graph, cor_optimum, cor_eps, cor_seed, cor_csv);
  } catch (const dsg::NoEdgesError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_no_input;
  } catch (const dsg::EmptyPredictionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_no_input;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}
