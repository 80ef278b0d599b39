#ifndef DSG_GRAPH_HPP
#define DSG_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dsg/density.hpp"
#include "dsg/error.hpp"

namespace dsg {

using node_t = std::uint32_t;
using Edge = std::pair<node_t, node_t>;

/// Sorted, duplicate-free set of node indices.
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(std::initializer_list<node_t> nodes) : NodeSet(std::vector<node_t>(nodes)) {}
  explicit NodeSet(std::vector<node_t> nodes) : members_(std::move(nodes)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  /// All of 0..n-1.
  static NodeSet all(std::size_t n) {
    NodeSet s;
    s.members_.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.members_[i] = static_cast<node_t>(i);
    return s;
  }

  std::span<const node_t> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool contains(node_t v) const { return std::binary_search(members_.begin(), members_.end(), v); }

  /// Dense membership table of length n.
  std::vector<char> mask(std::size_t n) const {
    std::vector<char> in(n, 0);
    for (node_t v : members_) in[v] = 1;
    return in;
  }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<node_t> members_;
};

inline NodeSet set_union(const NodeSet& a, const NodeSet& b) {
  std::vector<node_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return NodeSet(std::move(out));
}

inline NodeSet set_difference(const NodeSet& a, const NodeSet& b) {
  std::vector<node_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return NodeSet(std::move(out));
}

inline NodeSet set_intersection(const NodeSet& a, const NodeSet& b) {
  std::vector<node_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return NodeSet(std::move(out));
}

/// Immutable simple graph in compressed adjacency form.
///
/// Undirected graphs store each edge in both endpoint lists; directed graphs
/// keep separate out- and in-lists. Neighbor lists are sorted. Node tokens map
/// to dense indices in first-appearance order.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph over nodes 0..n-1. Self-loops and repeated edges are
  /// dropped and counted. When `labels` is empty, node i is labelled "i".
  static Graph from_edges(std::size_t n, std::vector<Edge> edges, bool directed,
                          std::vector<std::string> labels = {}) {
    Graph g;
    g.directed_ = directed;
    g.n_ = n;
    if (labels.empty()) {
      labels.reserve(n);
      for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    }
    detail::require(labels.size() == n, "label count differs from node count");
    g.labels_ = std::move(labels);
    g.index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      detail::require(g.index_.emplace(g.labels_[i], static_cast<node_t>(i)).second,
                      "duplicate node label");
    }

    std::size_t kept = 0;
    for (auto [u, v] : edges) {
      detail::require(u < n && v < n, "edge endpoint out of range");
      if (u == v) {
        ++g.self_loops_;
        continue;
      }
      if (!directed && u > v) std::swap(u, v);
      edges[kept++] = {u, v};
    }
    edges.resize(kept);
    std::sort(edges.begin(), edges.end());
    auto last = std::unique(edges.begin(), edges.end());
    g.duplicates_ = static_cast<std::size_t>(edges.end() - last);
    edges.erase(last, edges.end());
    g.m_ = edges.size();

    auto build = [n](const std::vector<Edge>& arcs, std::vector<std::size_t>& offsets,
                     std::vector<node_t>& targets) {
      offsets.assign(n + 1, 0);
      for (auto [u, v] : arcs) ++offsets[u + 1];
      for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
      targets.resize(arcs.size());
      std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
      for (auto [u, v] : arcs) targets[cursor[u]++] = v;
      for (std::size_t i = 0; i < n; ++i)
        std::sort(targets.begin() + static_cast<std::ptrdiff_t>(offsets[i]),
                  targets.begin() + static_cast<std::ptrdiff_t>(offsets[i + 1]));
    };

    std::vector<Edge> reversed;
    reversed.reserve(edges.size());
    for (auto [u, v] : edges) reversed.emplace_back(v, u);

    if (directed) {
      build(edges, g.out_offsets_, g.out_targets_);
      build(reversed, g.in_offsets_, g.in_targets_);
    } else {
      edges.insert(edges.end(), reversed.begin(), reversed.end());
      build(edges, g.out_offsets_, g.out_targets_);
    }
    return g;
  }

  bool directed() const noexcept { return directed_; }
  std::size_t node_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  /// Neighbors (out-neighbors when directed).
  std::span<const node_t> neighbors(node_t v) const {
    return {out_targets_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
  }
  std::span<const node_t> in_neighbors(node_t v) const {
    detail::require(directed_, "in_neighbors on an undirected graph");
    return {in_targets_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
  }
  /// Degree (out-degree when directed).
  std::size_t degree(node_t v) const { return out_offsets_[v + 1] - out_offsets_[v]; }

  const std::string& label(node_t v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Looks up a node token; false when absent.
  bool find(std::string_view token, node_t& out) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) return false;
    out = it->second;
    return true;
  }

  node_t index_of(std::string_view token) const {
    node_t v;
    if (!find(token, v)) throw UnknownNodeError("unknown node '" + std::string(token) + "'");
    return v;
  }

  /// Edges in canonical order: (min, max) pairs for undirected graphs,
  /// (source, target) for directed ones, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (node_t u = 0; u < n_; ++u)
      for (node_t v : neighbors(u))
        if (directed_ || u < v) out.emplace_back(u, v);
    return out;
  }

  std::size_t dropped_self_loops() const noexcept { return self_loops_; }
  std::size_t dropped_duplicates() const noexcept { return duplicates_; }

  /// Throws ContractViolation unless every member of `s` is a node of this graph.
  void check(const NodeSet& s) const {
    detail::require(s.empty() || s.members().back() < n_, "node index out of range");
  }

 private:
  bool directed_ = false;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<node_t> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<node_t> in_targets_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, node_t> index_;
  std::size_t self_loops_ = 0;
  std::size_t duplicates_ = 0;
};

namespace detail {

inline bool is_comment(std::string_view line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '#' || line[pos] == '%';
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace detail

/// Reads a whitespace-separated edge list. Blank lines and lines starting
/// with '#' or '%' are skipped.
inline Graph parse_edge_list(std::istream& in, bool directed) {
  std::unordered_map<std::string, node_t> index;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto intern = [&](std::string_view token) {
    auto [it, inserted] = index.emplace(std::string(token), static_cast<node_t>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_comment(line)) continue;
    auto tokens = detail::split_ws(line);
    if (tokens.size() != 2)
      throw ParseError("expected 2 node tokens, found " + std::to_string(tokens.size()), line_no);
    node_t u = intern(tokens[0]);
    node_t v = intern(tokens[1]);
    edges.emplace_back(u, v);
  }
  const std::size_t n = labels.size();
  return Graph::from_edges(n, std::move(edges), directed, std::move(labels));
}

inline Graph parse_edge_list(std::string_view text, bool directed) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, directed);
}

/// Canonical edge list: one "label label" line per edge in Graph::edges() order.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

/// Node-set file: one token per line, '#'/'%' comments allowed.
inline NodeSet parse_node_set(std::istream& in, const Graph& g) {
  std::vector<node_t> nodes;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_comment(line)) continue;
    auto tokens = detail::split_ws(line);
    if (tokens.size() != 1) throw ParseError("expected one node token", line_no);
    nodes.push_back(g.index_of(tokens[0]));
  }
  return NodeSet(std::move(nodes));
}

inline void write_node_set(std::ostream& out, const Graph& g, const NodeSet& s) {
  for (node_t v : s) out << g.label(v) << '\n';
}

// ---------------------------------------------------------------------------
// Density functionals

/// |E(s)|, each undirected edge counted once.
inline std::uint64_t induced_edge_count(const Graph& g, const NodeSet& s) {
  detail::require(!g.directed(), "induced_edge_count requires an undirected graph");
  g.check(s);
  std::uint64_t twice = 0;
  for (node_t v : s)
    for (node_t u : g.neighbors(v))
      if (s.contains(u)) ++twice;
  return twice / 2;
}

/// Number of arcs u -> v with u in s1 and v in s2. The sets may overlap.
inline std::uint64_t cross_edge_count(const Graph& g, const NodeSet& s1, const NodeSet& s2) {
  detail::require(g.directed(), "cross_edge_count requires a directed graph");
  g.check(s1);
  g.check(s2);
  std::uint64_t count = 0;
  for (node_t u : s1)
    for (node_t v : g.neighbors(u))
      if (s2.contains(v)) ++count;
  return count;
}

inline Density density(const Graph& g, const NodeSet& s) {
  if (s.empty()) throw EmptySetError("density of the empty set is undefined");
  return Density::ratio(induced_edge_count(g, s), s.size());
}

inline Density directed_density(const Graph& g, const NodeSet& s1, const NodeSet& s2) {
  if (s1.empty() || s2.empty()) throw EmptySetError("directed density needs two non-empty sets");
  return Density::root_ratio(cross_edge_count(g, s1, s2),
                             static_cast<std::uint64_t>(s1.size()) * s2.size());
}

/// g(S) = |E(S)|^2 / |S|.
inline Density clique_density(const Graph& g, const NodeSet& s) {
  if (s.empty()) throw EmptySetError("clique density of the empty set is undefined");
  const std::uint64_t e = induced_edge_count(g, s);
  return Density::ratio(e * e, s.size());
}

}  // namespace dsg

#endif
