#ifndef DSG_EXACT_HPP
#define DSG_EXACT_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "dsg/density.hpp"
#include "dsg/error.hpp"
#include "dsg/graph.hpp"
#include "dsg/max_flow.hpp"

namespace dsg {

struct ExactStats {
  std::size_t flow_calls = 0;
};

namespace detail {

// Min-cut test for guess gamma = k / scale (Goldberg's network, every capacity
// multiplied by `scale`). A cut with source side {s} + H costs
//   scale * (m*n + 2*|H|*(gamma - d(H))),
// so the minimal source side is non-empty exactly when some H has d(H) > gamma,
// and then it maximizes |H| * (d(H) - gamma).
inline NodeSet goldberg_cut(const Graph& g, std::int64_t k, std::int64_t scale) {
  const std::size_t n = g.node_count();
  const auto m = static_cast<capacity_t>(g.edge_count());
  const std::size_t source = n, sink = n + 1;
  FlowNetwork net(n + 2, source, sink);
  for (node_t v = 0; v < n; ++v) {
    net.add_arc(source, v, m * scale);
    net.add_arc(v, sink, m * scale + 2 * k - static_cast<capacity_t>(g.degree(v)) * scale);
  }
  for (auto [u, v] : g.edges()) {
    net.add_arc(u, v, scale);
    net.add_arc(v, u, scale);
  }
  auto cut = max_flow(net);
  std::vector<node_t> side;
  for (node_t v : cut.source_side)
    if (v < n) side.push_back(v);
  return NodeSet(std::move(side));
}

}  // namespace detail

/// Exact densest subgraph via binary search over min cuts.
///
/// Guesses live on the grid k / (n(n-1)). Two distinct subgraph densities
/// differ by at least 1/(n(n-1)), so once the search pins the largest k whose
/// cut is non-empty, the cut at k holds a maximum-density subgraph. Which
/// maximizer comes back is decided by the cut.
inline NodeSet exact_densest_subgraph(const Graph& g, ExactStats* stats = nullptr) {
  detail::require(!g.directed(), "exact_densest_subgraph requires an undirected graph");
  if (g.edge_count() == 0) throw NoEdgesError("graph has no edges");
  const auto n = static_cast<std::int64_t>(g.node_count());
  const auto m = static_cast<std::int64_t>(g.edge_count());
  const std::int64_t scale = n * (n - 1);
  detail::require(wide_int(n) * m * scale * 4 < (wide_int(1) << 62),
                  "graph too large for 64-bit cut capacities");

  ExactStats local;
  // d(V) = m/n > lo/scale, so lo is feasible; (n-1)/2 >= d(H) for every H, so hi is not.
  std::int64_t lo = (scale * m + n - 1) / n - 1;
  std::int64_t hi = (scale * (n - 1) + 1) / 2;
  NodeSet best = NodeSet::all(g.node_count());
  bool best_is_lo = false;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    NodeSet side = detail::goldberg_cut(g, mid, scale);
    ++local.flow_calls;
    if (side.empty()) {
      hi = mid;
    } else {
      lo = mid;
      best = std::move(side);
      best_is_lo = true;
    }
  }
  if (!best_is_lo) {
    // The search never moved off the initial bound; the cut at lo is still needed.
    best = detail::goldberg_cut(g, lo, scale);
    ++local.flow_calls;
  }
  if (stats) *stats = local;
  return best;
}

enum class Objective { standard, clique };

namespace detail {

// Tie-break key for exhaustive search: smaller set first, then the set whose
// sorted member list is lexicographically smaller.
inline bool mask_precedes(std::uint32_t a, std::uint32_t b) {
  const int ca = std::popcount(a), cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  if (a == b) return false;
  const std::uint32_t diff = a ^ b;
  return (a & diff & (~diff + 1)) != 0;  // lowest differing node belongs to a
}

inline NodeSet mask_to_set(std::uint32_t mask) {
  std::vector<node_t> out;
  for (node_t v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) out.push_back(v);
  return NodeSet(std::move(out));
}

}  // namespace detail

inline constexpr std::size_t brute_force_limit = 22;
inline constexpr std::size_t brute_force_directed_limit = 11;

/// Exhaustive maximizer of d (standard) or g (clique) over all non-empty
/// subsets; ties go to the smallest set, then lexicographic member order.
inline NodeSet brute_force_densest(const Graph& g, Objective objective) {
  detail::require(!g.directed(), "brute_force_densest requires an undirected graph");
  const std::size_t n = g.node_count();
  if (n > brute_force_limit) throw RefusedError("brute force limited to 22 nodes");
  if (n == 0) throw EmptySetError("graph has no nodes");

  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  std::vector<std::uint32_t> edges_in(std::size_t{full} + 1, 0);
  std::uint32_t best = 0;
  Density best_value;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    edges_in[mask] = edges_in[rest] + static_cast<std::uint32_t>(std::popcount(adj[low] & rest));
    const std::uint64_t e = edges_in[mask];
    const auto size = static_cast<std::uint64_t>(std::popcount(mask));
    const Density value = objective == Objective::standard ? Density::ratio(e, size)
                                                           : Density::ratio(e * e, size);
    if (best == 0 || value > best_value ||
        (value == best_value && detail::mask_precedes(mask, best))) {
      best = mask;
      best_value = value;
    }
  }
  return detail::mask_to_set(best);
}

/// Exhaustive maximizer of d(S1,S2) over pairs of non-empty subsets.
/// Ties are resolved on S1 first, then S2, each by (size, lexicographic order).
inline std::pair<NodeSet, NodeSet> brute_force_directed_densest(const Graph& g) {
  detail::require(g.directed(), "brute_force_directed_densest requires a directed graph");
  const std::size_t n = g.node_count();
  if (n > brute_force_directed_limit) throw RefusedError("directed brute force limited to 11 nodes");
  if (n == 0) throw EmptySetError("graph has no nodes");

  std::vector<std::uint32_t> in_mask(n, 0);
  for (auto [u, v] : g.edges()) in_mask[v] |= 1u << u;
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> arcs_into(std::size_t{full} + 1, 0);
  std::vector<std::uint32_t> from_s1(n);

  std::uint32_t best1 = 0, best2 = 0;
  Density best_value;
  for (std::uint32_t s1 = 1; s1 <= full; ++s1) {
    for (std::size_t v = 0; v < n; ++v)
      from_s1[v] = static_cast<std::uint32_t>(std::popcount(in_mask[v] & s1));
    const auto size1 = static_cast<std::uint64_t>(std::popcount(s1));
    for (std::uint32_t s2 = 1; s2 <= full; ++s2) {
      const int low = std::countr_zero(s2);
      arcs_into[s2] = arcs_into[s2 & (s2 - 1)] + from_s1[low];
      const Density value =
          Density::root_ratio(arcs_into[s2], size1 * static_cast<std::uint64_t>(std::popcount(s2)));
      bool take = best1 == 0 || value > best_value;
      if (!take && value == best_value) {
        take = detail::mask_precedes(s1, best1) ||
               (s1 == best1 && detail::mask_precedes(s2, best2));
      }
      if (take) {
        best1 = s1;
        best2 = s2;
        best_value = value;
      }
    }
  }
  return {detail::mask_to_set(best1), detail::mask_to_set(best2)};
}

}  // namespace dsg

#endif
