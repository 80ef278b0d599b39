#ifndef DSG_PREDICTOR_IO_HPP
#define DSG_PREDICTOR_IO_HPP

#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dsg/error.hpp"
#include "dsg/format.hpp"
#include "dsg/graph.hpp"
#include "dsg/random.hpp"

namespace dsg {

struct SyntheticSource {
  double eps = 0.0;
  std::uint64_t seed = 0;
};

struct ExternalSource {
  std::string path;
};

struct PredictionSet {
  NodeSet nodes;
  std::variant<SyntheticSource, ExternalSource> source;
};

/// floor(eps * size), snapping values within 1e-9 of an integer.
inline std::size_t corruption_count(std::size_t size, double eps) {
  const double raw = eps * static_cast<double>(size);
  const double nearest = std::round(raw);
  if (std::abs(raw - nearest) <= 1e-9 * std::max(1.0, raw)) return static_cast<std::size_t>(nearest);
  return static_cast<std::size_t>(std::floor(raw));
}

/// True when |S ∩ H*| >= (1-eps)|H*| and |S \ H*| <= eps|H*| (1e-9 slack for
/// the binary representation of eps).
inline bool satisfies_preconditions(const NodeSet& s, const NodeSet& h_star, double eps) {
  const auto h = static_cast<double>(h_star.size());
  const auto inside = static_cast<double>(set_intersection(s, h_star).size());
  const auto outside = static_cast<double>(set_difference(s, h_star).size());
  const double slack = 1e-9 * std::max(1.0, h);
  return inside >= (1.0 - eps) * h - slack && outside <= eps * h + slack;
}

/// Seeded uniform corruption of a known optimum: drop floor(eps|H*|) random
/// members, then add as many random non-members (fewer if the graph runs out).
/// Members are drawn before non-members from one mt19937_64 stream seeded
/// with `seed`.
inline PredictionSet corrupt_solution(const Graph& g, const NodeSet& h_star, double eps,
                                      std::uint64_t seed) {
  detail::require(eps >= 0.0 && eps < 1.0, "corruption epsilon must lie in [0, 1)");
  if (h_star.empty()) throw EmptySetError("optimum set is empty");
  g.check(h_star);

  Rng rng(seed);
  const std::size_t k = corruption_count(h_star.size(), eps);
  std::vector<node_t> members(h_star.begin(), h_star.end());
  auto dropped = NodeSet(sample_without_replacement(members, k, rng));

  std::vector<node_t> outside;
  const auto in_h = h_star.mask(g.node_count());
  for (node_t v = 0; v < g.node_count(); ++v)
    if (!in_h[v]) outside.push_back(v);
  auto added = sample_without_replacement(std::move(outside), k, rng);

  std::vector<node_t> kept;
  for (node_t v : h_star)
    if (!dropped.contains(v)) kept.push_back(v);
  kept.insert(kept.end(), added.begin(), added.end());

  PredictionSet out{NodeSet(std::move(kept)), SyntheticSource{eps, seed}};
  if (!satisfies_preconditions(out.nodes, h_star, eps))
    throw std::logic_error("corrupt_solution produced a set violating its own preconditions");
  return out;
}

/// Independent corruption of each side; side i uses sub_seed(seed, i).
inline std::pair<PredictionSet, PredictionSet> corrupt_directed_solution(
    const Graph& g, const NodeSet& s1_star, const NodeSet& s2_star, double eps1, double eps2,
    std::uint64_t seed) {
  auto first = corrupt_solution(g, s1_star, eps1, sub_seed(seed, 1));
  auto second = corrupt_solution(g, s2_star, eps2, sub_seed(seed, 2));
  first.source = SyntheticSource{eps1, seed};
  second.source = SyntheticSource{eps2, seed};
  return {std::move(first), std::move(second)};
}

// ---------------------------------------------------------------------------
// Node features

struct FeatureRow {
  std::string node;
  std::uint64_t degree = 0;
  double avg_neighbor_degree = 0.0;
  std::uint64_t graph_n = 0;
  std::optional<bool> in_densest;
};

/// Degree, mean neighbor degree and graph size for every node, in index order.
inline std::vector<FeatureRow> export_features(const Graph& g, const std::optional<NodeSet>& labels = {}) {
  detail::require(!g.directed(), "feature export requires an undirected graph");
  if (labels) g.check(*labels);
  const std::size_t n = g.node_count();
  std::vector<char> in_labels;
  if (labels) in_labels = labels->mask(n);
  std::vector<FeatureRow> rows(n);
  for (node_t v = 0; v < n; ++v) {
    FeatureRow& row = rows[v];
    row.node = g.label(v);
    row.degree = g.degree(v);
    std::uint64_t sum = 0;
    for (node_t u : g.neighbors(v)) sum += g.degree(u);
    row.avg_neighbor_degree = row.degree ? static_cast<double>(sum) / static_cast<double>(row.degree) : 0.0;
    row.graph_n = n;
    if (labels) row.in_densest = in_labels[v] != 0;
  }
  return rows;
}

inline constexpr std::string_view feature_csv_header = "node,degree,avg_neighbor_degree,graph_n,label";
inline constexpr std::string_view prediction_csv_header = "node,score";

inline void write_features_csv(std::ostream& out, const std::vector<FeatureRow>& rows) {
  out << feature_csv_header << '\n';
  for (const auto& r : rows) {
    out << r.node << ',' << r.degree << ',' << format_double(r.avg_neighbor_degree) << ',' << r.graph_n
        << ',';
    if (r.in_densest) out << (*r.in_densest ? '1' : '0');
    out << '\n';
  }
}

namespace detail {

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                          : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

inline std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

inline void expect_header(std::istream& in, std::string_view header) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing header", 1);
  if (strip_cr(line) != header) throw ParseError("expected header '" + std::string(header) + "'", 1);
}

}  // namespace detail

/// Reads the label column of a feature CSV back into a node set.
/// Rows with an empty label are treated as unlabelled (not in the set).
inline NodeSet read_feature_labels(std::istream& in, const Graph& g) {
  detail::expect_header(in, feature_csv_header);
  std::vector<node_t> nodes;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = detail::strip_cr(line);
    if (text.empty()) continue;
    const auto fields = detail::split_commas(text);
    if (fields.size() != 5) throw ParseError("expected 5 fields", line_no);
    const auto label = fields[4];
    if (label != "" && label != "0" && label != "1") throw ParseError("label must be 0, 1 or empty", line_no);
    const node_t v = g.index_of(fields[0]);
    if (label == "1") nodes.push_back(v);
  }
  return NodeSet(std::move(nodes));
}

struct ScoredNode {
  std::string node;
  double score = 0.0;
};

inline void write_predictions_csv(std::ostream& out, const std::vector<ScoredNode>& rows) {
  out << prediction_csv_header << '\n';
  for (const auto& r : rows) out << r.node << ',' << format_double(r.score) << '\n';
}

/// Nodes whose score is at least `threshold`.
inline PredictionSet load_predictions(std::istream& in, const Graph& g, double threshold,
                                      std::string source_path = "<stream>") {
  detail::expect_header(in, prediction_csv_header);
  std::vector<node_t> nodes;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = detail::strip_cr(line);
    if (text.empty()) continue;
    const auto fields = detail::split_commas(text);
    if (fields.size() != 2) throw ParseError("expected 'node,score'", line_no);
    double score;
    if (!parse_double(fields[1], score) || score < 0.0 || score > 1.0)
      throw ParseError("score must be a number in [0, 1]", line_no);
    const node_t v = g.index_of(fields[0]);
    if (score >= threshold) nodes.push_back(v);
  }
  if (nodes.empty()) throw EmptyPredictionError("no node reaches the score threshold");
  return PredictionSet{NodeSet(std::move(nodes)), ExternalSource{std::move(source_path)}};
}

inline PredictionSet load_predictions(const std::string& path, const Graph& g, double threshold) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return load_predictions(in, g, threshold, path);
}

}  // namespace dsg

#endif
