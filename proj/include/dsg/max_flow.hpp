#ifndef DSG_MAX_FLOW_HPP
#define DSG_MAX_FLOW_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "dsg/error.hpp"
#include "dsg/graph.hpp"

namespace dsg {

using capacity_t = std::int64_t;

struct MaxFlowResult {
  capacity_t value = 0;
  /// Nodes reachable from the source in the final residual network
  /// (the minimal minimum-cut source side); includes the source itself.
  NodeSet source_side;
};

/// Residual network with integer capacities. Arcs are stored in pairs:
/// arc 2k is the forward arc, arc 2k+1 its reverse with zero capacity.
class FlowNetwork {
 public:
  FlowNetwork(std::size_t nodes, std::size_t source, std::size_t sink)
      : head_(nodes, npos), source_(source), sink_(sink) {
    detail::require(source < nodes && sink < nodes && source != sink, "bad source/sink");
  }

  /// Adds u -> v with capacity `cap`; returns the forward arc id.
  std::size_t add_arc(std::size_t u, std::size_t v, capacity_t cap) {
    detail::require(u < head_.size() && v < head_.size(), "arc endpoint out of range");
    detail::require(cap >= 0, "negative capacity");
    const std::size_t id = arcs_.size();
    arcs_.push_back({v, head_[u], cap});
    head_[u] = id;
    arcs_.push_back({u, head_[v], 0});
    head_[v] = id + 1;
    return id;
  }

  std::size_t node_count() const noexcept { return head_.size(); }
  std::size_t source() const noexcept { return source_; }
  std::size_t sink() const noexcept { return sink_; }
  std::size_t arc_count() const noexcept { return arcs_.size() / 2; }

  /// Flow currently carried by the forward arc `id`.
  capacity_t flow(std::size_t id) const { return arcs_[id ^ 1].residual; }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  struct Arc {
    std::size_t to;
    std::size_t next;
    capacity_t residual;
  };

  std::vector<std::size_t> head_;
  std::vector<Arc> arcs_;
  std::size_t source_;
  std::size_t sink_;

  friend MaxFlowResult max_flow(FlowNetwork& net);
};

/// Dinic's blocking-flow algorithm. Runs on `net` in place, leaving the
/// final flow in its residual capacities.
inline MaxFlowResult max_flow(FlowNetwork& net) {
  using Arc = FlowNetwork::Arc;
  const std::size_t n = net.head_.size();
  const std::size_t s = net.source_, t = net.sink_;
  constexpr std::size_t npos = FlowNetwork::npos;
  std::vector<Arc>& arcs = net.arcs_;
  std::vector<int> level(n);
  std::vector<std::size_t> queue(n);
  std::vector<std::size_t> it(n);

  auto bfs = [&] {
    std::fill(level.begin(), level.end(), -1);
    std::size_t qh = 0, qt = 0;
    queue[qt++] = s;
    level[s] = 0;
    while (qh < qt) {
      const std::size_t u = queue[qh++];
      for (std::size_t a = net.head_[u]; a != npos; a = arcs[a].next) {
        if (arcs[a].residual > 0 && level[arcs[a].to] < 0) {
          level[arcs[a].to] = level[u] + 1;
          queue[qt++] = arcs[a].to;
        }
      }
    }
    return level[t] >= 0;
  };

  // Iterative DFS along the level graph; pushes one augmenting path per call.
  std::vector<std::size_t> path;  // arc ids
  auto augment = [&]() -> capacity_t {
    path.clear();
    std::size_t u = s;
    while (true) {
      if (u == t) {
        capacity_t push = std::numeric_limits<capacity_t>::max();
        for (std::size_t a : path) push = std::min(push, arcs[a].residual);
        for (std::size_t a : path) {
          arcs[a].residual -= push;
          arcs[a ^ 1].residual += push;
        }
        return push;
      }
      std::size_t& a = it[u];
      while (a != npos && !(arcs[a].residual > 0 && level[arcs[a].to] == level[u] + 1)) a = arcs[a].next;
      if (a != npos) {
        path.push_back(a);
        u = arcs[a].to;
        continue;
      }
      // Dead end: retreat and discard the arc that led here.
      if (path.empty()) return 0;
      level[u] = -1;
      const std::size_t back = path.back();
      path.pop_back();
      u = arcs[back ^ 1].to;
      it[u] = arcs[it[u]].next;
    }
  };

  MaxFlowResult result;
  while (bfs()) {
    for (std::size_t v = 0; v < n; ++v) it[v] = net.head_[v];
    while (capacity_t pushed = augment()) result.value += pushed;
  }

  // After the last BFS failed, `level` marks exactly the residual-reachable nodes.
  std::vector<node_t> side;
  for (std::size_t v = 0; v < n; ++v)
    if (level[v] >= 0) side.push_back(static_cast<node_t>(v));
  result.source_side = NodeSet(std::move(side));
  return result;
}

}  // namespace dsg

#endif
