#ifndef DSG_BENCH_HPP
#define DSG_BENCH_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "dsg/augmented.hpp"
#include "dsg/bounds.hpp"
#include "dsg/exact.hpp"
#include "dsg/format.hpp"
#include "dsg/graph.hpp"
#include "dsg/peeling.hpp"
#include "dsg/predictor_io.hpp"
#include "dsg/random.hpp"

namespace dsg {

namespace fs = std::filesystem;

/// One (graph, method) result row.
struct RunRecord {
  std::string graph;
  std::string method;
  std::size_t size = 0;
  Density density;
  std::optional<double> wall_ms;
  std::optional<double> eps;
  std::optional<std::uint64_t> seed;
};

inline constexpr std::string_view results_csv_header =
    "graph,method,size,density,density_num,density_den,wall_ms,eps,seed";

inline void write_results_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << results_csv_header << '\n';
  for (const auto& r : records) {
    out << r.graph << ',' << r.method << ',' << r.size << ',' << format_double(r.density.value()) << ','
        << r.density.numerator() << ',' << r.density.denominator() << ',';
    if (r.wall_ms) out << format_double(*r.wall_ms);
    out << ',';
    if (r.eps) out << format_double(*r.eps);
    out << ',';
    if (r.seed) out << *r.seed;
    out << '\n';
  }
}

/// Improvement of `better` over `base` in percent; nullopt when base is 0.
inline std::optional<double> improvement_pct(double better, double base) {
  if (base <= 0.0) return std::nullopt;
  return 100.0 * (better - base) / base;
}

struct GraphComparison {
  std::string graph;
  double predictor = 0.0;
  double peel = 0.0;
  double augmented = 0.0;
  std::optional<double> reference;  // exact optimum, when computed
};

struct ComparisonSummary {
  std::size_t n_graphs = 0;
  double win_rate_vs_predictor = 0.0;
  double win_rate_vs_peel = 0.0;
  std::optional<double> mean_impr_vs_predictor_pct;
  std::optional<double> mean_impr_vs_peel_pct;
  std::optional<double> min_impr_pct;  // over finite improvements vs the predictor
  std::optional<double> max_impr_pct;
  std::size_t infinite_impr_vs_predictor = 0;
  std::size_t infinite_impr_vs_peel = 0;
  std::size_t skipped = 0;
  std::size_t filtered = 0;
  std::size_t bound_checked = 0;
  std::size_t bound_satisfied = 0;
};

/// Win rates and improvement statistics. A zero-density baseline with a
/// positive augmented density counts as an infinite improvement: it is a
/// win, tallied separately, and kept out of the means.
inline ComparisonSummary summarize(const std::vector<GraphComparison>& rows) {
  ComparisonSummary s;
  s.n_graphs = rows.size();
  std::size_t wins_pred = 0, wins_peel = 0;
  double sum_pred = 0.0, sum_peel = 0.0;
  std::size_t finite_pred = 0, finite_peel = 0;
  for (const auto& r : rows) {
    if (r.augmented > r.predictor) ++wins_pred;
    if (r.augmented > r.peel) ++wins_peel;
    if (auto pct = improvement_pct(r.augmented, r.predictor)) {
      sum_pred += *pct;
      ++finite_pred;
      s.min_impr_pct = s.min_impr_pct ? std::min(*s.min_impr_pct, *pct) : *pct;
      s.max_impr_pct = s.max_impr_pct ? std::max(*s.max_impr_pct, *pct) : *pct;
    } else if (r.augmented > 0.0) {
      ++s.infinite_impr_vs_predictor;
    }
    if (auto pct = improvement_pct(r.augmented, r.peel)) {
      sum_peel += *pct;
      ++finite_peel;
    } else if (r.augmented > 0.0) {
      ++s.infinite_impr_vs_peel;
    }
  }
  if (!rows.empty()) {
    s.win_rate_vs_predictor = static_cast<double>(wins_pred) / static_cast<double>(rows.size());
    s.win_rate_vs_peel = static_cast<double>(wins_peel) / static_cast<double>(rows.size());
  }
  if (finite_pred) s.mean_impr_vs_predictor_pct = sum_pred / static_cast<double>(finite_pred);
  if (finite_peel) s.mean_impr_vs_peel_pct = sum_peel / static_cast<double>(finite_peel);
  return s;
}

inline nlohmann::ordered_json to_json(const ComparisonSummary& s) {
  auto opt = [](const std::optional<double>& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(); };
  nlohmann::ordered_json j;
  j["n_graphs"] = s.n_graphs;
  j["win_rate_vs_predictor"] = s.win_rate_vs_predictor;
  j["win_rate_vs_peel"] = s.win_rate_vs_peel;
  j["mean_impr_vs_predictor_pct"] = opt(s.mean_impr_vs_predictor_pct);
  j["mean_impr_vs_peel_pct"] = opt(s.mean_impr_vs_peel_pct);
  j["min_impr_pct"] = opt(s.min_impr_pct);
  j["max_impr_pct"] = opt(s.max_impr_pct);
  j["skipped"] = s.skipped;
  j["infinite_impr_vs_predictor"] = s.infinite_impr_vs_predictor;
  j["infinite_impr_vs_peel"] = s.infinite_impr_vs_peel;
  j["filtered"] = s.filtered;
  j["bound_checked"] = s.bound_checked;
  j["bound_satisfied"] = s.bound_satisfied;
  return j;
}

struct BenchConfig {
  fs::path corpus;
  double eps = 0.2;
  std::uint64_t seed = 0;
  /// When set, predictions come from `<dir>/<graph>.csv` instead of synthetic corruption.
  std::optional<fs::path> predictions_dir;
  double threshold = 0.5;
  std::size_t min_edges = 100;
  std::size_t workers = 1;
  /// Fill the wall_ms column. Off by default so results.csv is reproducible byte for byte.
  bool record_timings = false;
  /// Largest graph solved exactly; above it peeling stands in for the optimum.
  std::size_t exact_node_limit = 5000;
};

struct BenchResult {
  std::vector<RunRecord> records;
  std::vector<GraphComparison> comparisons;
  ComparisonSummary summary;
  std::vector<std::string> log;  // skipped graphs and warnings, in graph order
};

namespace detail {

struct GraphOutcome {
  std::vector<RunRecord> records;
  std::optional<GraphComparison> comparison;
  bool filtered = false;
  bool skipped = false;
  bool bound_checked = false;
  bool bound_satisfied = false;
  std::vector<std::string> log;
};

template <class F>
auto timed(F&& f, double& ms) {
  const auto start = std::chrono::steady_clock::now();
  auto out = f();
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

inline GraphOutcome bench_one(const BenchConfig& cfg, const fs::path& file) {
  GraphOutcome out;
  const std::string id = file.stem().string();
  try {
    std::ifstream in(file);
    if (!in) throw Error("cannot open " + file.string());
    const Graph g = parse_edge_list(in, false);
    if (g.edge_count() < cfg.min_edges || g.edge_count() == 0) {
      out.filtered = true;
      return out;
    }

    auto record = [&](std::string method, const NodeSet& s, double ms, bool with_params) {
      RunRecord r;
      r.graph = id;
      r.method = std::move(method);
      r.size = s.size();
      r.density = density(g, s);
      if (cfg.record_timings) r.wall_ms = ms;
      if (with_params) {
        r.eps = cfg.eps;
        if (!cfg.predictions_dir) r.seed = cfg.seed;
      }
      out.records.push_back(r);
      return r.density;
    };

    double ms = 0.0;
    const bool exact = g.node_count() <= cfg.exact_node_limit;
    std::optional<Density> reference;
    NodeSet optimum;
    if (exact) {
      optimum = timed([&] { return exact_densest_subgraph(g); }, ms);
      reference = record("exact", optimum, ms, false);
    } else {
      out.log.push_back(id + ": " + std::to_string(g.node_count()) +
                        " nodes exceeds the exact limit; peeling stands in for the optimum");
    }

    const PeelResult peel = timed([&] { return charikar_peel(g); }, ms);
    const Density peel_density = record("peel", peel.nodes, ms, false);
    if (!exact) optimum = peel.nodes;

    NodeSet predicted;
    if (cfg.predictions_dir) {
      predicted = load_predictions((*cfg.predictions_dir / (id + ".csv")).string(), g, cfg.threshold).nodes;
    } else {
      predicted = corrupt_solution(g, optimum, cfg.eps, sub_seed(cfg.seed, fnv1a(id))).nodes;
    }
    const Density predicted_density = record("predictor", predicted, 0.0, true);

    const NodeSet augmented = timed(
        [&] { return cfg.eps > 0.0 ? augment_undirected(g, predicted, cfg.eps) : predicted; }, ms);
    const Density augmented_density = record("augmented", augmented, ms, true);

    if (reference && !cfg.predictions_dir) {
      out.bound_checked = true;
      out.bound_satisfied = undirected_bound_holds(augmented_density, *reference, ratio_from_double(cfg.eps));
    }
    out.comparison = GraphComparison{id, predicted_density.value(), peel_density.value(),
                                     augmented_density.value(),
                                     reference ? std::optional<double>(reference->value()) : std::nullopt};
  } catch (const std::exception& e) {
    out.records.clear();
    out.comparison.reset();
    out.skipped = true;
    out.log.push_back(id + ": skipped: " + e.what());
  }
  return out;
}

}  // namespace detail

/// Edge-list files of a corpus directory in lexicographic filename order.
inline std::vector<fs::path> corpus_files(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error("cannot read corpus directory " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  return files;
}

/// Runs exact, peeling, predictor and augmentation over every corpus graph
/// with at least `min_edges` edges. Graphs are processed by up to `workers`
/// threads; results are merged in filename order.
inline BenchResult run_bench(const BenchConfig& cfg) {
  const auto files = corpus_files(cfg.corpus);
  std::vector<detail::GraphOutcome> outcomes(files.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) outcomes[i] = detail::bench_one(cfg, files[i]);
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(cfg.workers, files.size()));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  BenchResult result;
  std::size_t skipped = 0, filtered = 0, checked = 0, satisfied = 0;
  for (auto& o : outcomes) {
    result.records.insert(result.records.end(), o.records.begin(), o.records.end());
    if (o.comparison) result.comparisons.push_back(*o.comparison);
    result.log.insert(result.log.end(), o.log.begin(), o.log.end());
    skipped += o.skipped;
    filtered += o.filtered;
    checked += o.bound_checked;
    satisfied += o.bound_checked && o.bound_satisfied;
  }
  result.summary = summarize(result.comparisons);
  result.summary.skipped = skipped;
  result.summary.filtered = filtered;
  result.summary.bound_checked = checked;
  result.summary.bound_satisfied = satisfied;
  return result;
}

/// Plot data: one row per graph with the densities to compare.
inline void write_plot_csv(std::ostream& out, const std::vector<GraphComparison>& rows) {
  out << "graph,d_predictor,d_peel,d_augmented,d_exact\n";
  for (const auto& r : rows) {
    out << r.graph << ',' << format_double(r.predictor) << ',' << format_double(r.peel) << ','
        << format_double(r.augmented) << ',';
    if (r.reference) out << format_double(*r.reference);
    out << '\n';
  }
}

/// Writes results.csv, summary.json and plot.csv into `dir`.
inline void write_bench_outputs(const fs::path& dir, const BenchResult& result) {
  fs::create_directories(dir);
  std::ofstream results(dir / "results.csv");
  write_results_csv(results, result.records);
  std::ofstream summary(dir / "summary.json");
  summary << to_json(result.summary).dump(2) << '\n';
  std::ofstream plot(dir / "plot.csv");
  write_plot_csv(plot, result.comparisons);
  if (!results || !summary || !plot) throw Error("failed writing bench outputs to " + dir.string());
}

}  // namespace dsg

#endif
