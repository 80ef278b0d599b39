#ifndef DSG_AUGMENTED_HPP
#define DSG_AUGMENTED_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "dsg/error.hpp"
#include "dsg/graph.hpp"

namespace dsg {

/// How the fractional budget eps/(1-eps)*|S| becomes a node count.
/// `floor` keeps the output within the fractional size; `ceil` may exceed it
/// by one node.
enum class BudgetRounding { floor, ceil };

/// Per-node greedy keys. For the undirected and clique variants only
/// `primary` is filled (t-scores); the directed variant fills `primary` with
/// w_S1 (arcs from v into S2) and `secondary` with w_S2 (arcs into v from S1).
struct TScores {
  std::vector<std::uint32_t> primary;
  std::vector<std::uint32_t> secondary;
};

/// Number of nodes to add for a prediction of size `s_size`.
/// Values within 1e-9 (relative) of an integer snap to it first, so that
/// e.g. eps = 2/7 with |S| = 5 yields exactly 2 despite binary rounding.
inline std::size_t augmentation_budget(std::size_t s_size, double eps,
                                       BudgetRounding rounding = BudgetRounding::floor) {
  const double raw = eps / (1.0 - eps) * static_cast<double>(s_size);
  const double nearest = std::round(raw);
  if (std::abs(raw - nearest) <= 1e-9 * std::max(1.0, raw)) return static_cast<std::size_t>(nearest);
  return static_cast<std::size_t>(rounding == BudgetRounding::floor ? std::floor(raw) : std::ceil(raw));
}

/// t(v) = |N(v) ∩ S| for v outside S, 0 inside.
inline TScores compute_t_scores(const Graph& g, const NodeSet& s) {
  detail::require(!g.directed(), "t-scores require an undirected graph");
  g.check(s);
  TScores scores;
  scores.primary.assign(g.node_count(), 0);
  const auto in_s = s.mask(g.node_count());
  for (node_t v : s)
    for (node_t u : g.neighbors(v))
      if (!in_s[u]) ++scores.primary[u];
  return scores;
}

/// w_S1(v) = |{v -> u : u in S2}| for v outside S1; w_S2(v) = |{u -> v : u in S1}| for v outside S2.
inline TScores compute_directed_scores(const Graph& g, const NodeSet& s1, const NodeSet& s2) {
  detail::require(g.directed(), "directed scores require a directed graph");
  g.check(s1);
  g.check(s2);
  const std::size_t n = g.node_count();
  const auto in_s1 = s1.mask(n);
  const auto in_s2 = s2.mask(n);
  TScores scores;
  scores.primary.assign(n, 0);
  scores.secondary.assign(n, 0);
  for (node_t v : s2)
    for (node_t u : g.in_neighbors(v))
      if (!in_s1[u]) ++scores.primary[u];
  for (node_t u : s1)
    for (node_t v : g.neighbors(u))
      if (!in_s2[v]) ++scores.secondary[v];
  return scores;
}

namespace detail {

// The `k` nodes outside `s` with the largest score, ties to the smaller index.
// Expected linear time via nth_element.
inline std::vector<node_t> top_outside(const std::vector<std::uint32_t>& score,
                                       const std::vector<char>& in_s, std::size_t k) {
  std::vector<node_t> outside;
  outside.reserve(score.size());
  for (node_t v = 0; v < score.size(); ++v)
    if (!in_s[v]) outside.push_back(v);
  if (k >= outside.size()) return outside;
  auto better = [&score](node_t a, node_t b) {
    return score[a] != score[b] ? score[a] > score[b] : a < b;
  };
  std::nth_element(outside.begin(), outside.begin() + static_cast<std::ptrdiff_t>(k), outside.end(),
                   better);
  outside.resize(k);
  return outside;
}

inline void check_augment_input(const Graph& g, const NodeSet& s, double eps, double eps_max,
                                bool eps_max_inclusive) {
  detail::require(!g.directed(), "augmentation requires an undirected graph");
  if (s.empty()) throw EmptySetError("prediction set is empty");
  g.check(s);
  detail::require(eps > 0.0 && (eps_max_inclusive ? eps <= eps_max : eps < eps_max),
                  "epsilon out of range");
}

inline NodeSet augment_with_t_scores(const Graph& g, const NodeSet& s, double eps,
                                     BudgetRounding rounding) {
  const TScores t = compute_t_scores(g, s);
  auto chosen = top_outside(t.primary, s.mask(g.node_count()),
                            augmentation_budget(s.size(), eps, rounding));
  chosen.insert(chosen.end(), s.begin(), s.end());
  return NodeSet(std::move(chosen));
}

}  // namespace detail

/// Adds to S the eps/(1-eps)*|S| outside nodes with the most neighbors in S.
/// Requires 0 < eps < 1.
inline NodeSet augment_undirected(const Graph& g, const NodeSet& s, double eps,
                                  BudgetRounding rounding = BudgetRounding::floor) {
  detail::check_augment_input(g, s, eps, 1.0, false);
  return detail::augment_with_t_scores(g, s, eps, rounding);
}

/// Same selection as augment_undirected, intended for the clique objective
/// |E(S)|^2/|S|. Requires 0 < eps <= 1/2.
inline NodeSet augment_clique(const Graph& g, const NodeSet& s, double eps,
                              BudgetRounding rounding = BudgetRounding::floor) {
  detail::check_augment_input(g, s, eps, 0.5, true);
  return detail::augment_with_t_scores(g, s, eps, rounding);
}

/// Directed variant: U1 (top w_S1) joins S1, U2 (top w_S2) joins S2.
/// Requires 0 < eps1, eps2 < 1/2.
inline std::pair<NodeSet, NodeSet> augment_directed(const Graph& g, const NodeSet& s1,
                                                    const NodeSet& s2, double eps1, double eps2,
                                                    BudgetRounding rounding = BudgetRounding::floor) {
  detail::require(g.directed(), "augment_directed requires a directed graph");
  if (s1.empty() || s2.empty()) throw EmptySetError("prediction set is empty");
  detail::require(eps1 > 0.0 && eps1 < 0.5 && eps2 > 0.0 && eps2 < 0.5, "epsilon out of range");
  const TScores w = compute_directed_scores(g, s1, s2);
  const std::size_t n = g.node_count();
  auto u1 = detail::top_outside(w.primary, s1.mask(n), augmentation_budget(s1.size(), eps1, rounding));
  auto u2 = detail::top_outside(w.secondary, s2.mask(n), augmentation_budget(s2.size(), eps2, rounding));
  u1.insert(u1.end(), s1.begin(), s1.end());
  u2.insert(u2.end(), s2.begin(), s2.end());
  return {NodeSet(std::move(u1)), NodeSet(std::move(u2))};
}

}  // namespace dsg

#endif
