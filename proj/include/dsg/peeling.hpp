#ifndef DSG_PEELING_HPP
#define DSG_PEELING_HPP

#include <cstdint>
#include <algorithm>
#include <utility>
#include <vector>

#include "dsg/density.hpp"
#include "dsg/error.hpp"
#include "dsg/graph.hpp"

namespace dsg {

struct PeelTrace {
  std::vector<node_t> removal_order;
  /// Number of nodes still present when the best density was seen.
  std::size_t best_size = 0;
  Density best_density;
};

struct PeelResult {
  NodeSet nodes;
  PeelTrace trace;
};

namespace detail {

// Binary min-heap of packed keys (degree << 32 | node) with decrease-key.
// Keys compare as (degree, node), which gives the smallest-index tie-break.
class DegreeHeap {
 public:
  explicit DegreeHeap(const Graph& g) : pos_(g.node_count()) {
    const auto n = static_cast<node_t>(g.node_count());
    heap_.resize(n);
    for (node_t v = 0; v < n; ++v) heap_[v] = key(g.degree(v), v);
    std::sort(heap_.begin(), heap_.end());
    for (std::uint32_t i = 0; i < n; ++i) pos_[node_of(heap_[i])] = i;
  }

  bool empty() const { return heap_.empty(); }
  bool contains(node_t v) const { return pos_[v] != gone; }

  /// Removes the minimum; returns (node, degree at removal).
  std::pair<node_t, std::uint32_t> pop() {
    const std::uint64_t top = heap_.front();
    pos_[node_of(top)] = gone;
    const std::uint64_t last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) sift_down(0, last);
    return {node_of(top), static_cast<std::uint32_t>(top >> 32)};
  }

  /// Lowers the degree of a node still in the heap by one.
  void decrement(node_t v) { sift_up(pos_[v], heap_[pos_[v]] - (std::uint64_t{1} << 32)); }

 private:
  static constexpr std::uint32_t gone = UINT32_MAX;
  static std::uint64_t key(std::uint64_t degree, node_t v) { return degree << 32 | v; }
  static node_t node_of(std::uint64_t k) { return static_cast<node_t>(k & 0xffffffffu); }

  void place(std::uint32_t i, std::uint64_t k) {
    heap_[i] = k;
    pos_[node_of(k)] = i;
  }
  void sift_up(std::uint32_t i, std::uint64_t k) {
    while (i > 0) {
      const std::uint32_t parent = (i - 1) / 2;
      if (heap_[parent] <= k) break;
      place(i, heap_[parent]);
      i = parent;
    }
    place(i, k);
  }
  void sift_down(std::uint32_t i, std::uint64_t k) {
    const auto n = static_cast<std::uint32_t>(heap_.size());
    while (true) {
      std::uint32_t child = 2 * i + 1;
      if (child >= n) break;
      if (child + 1 < n && heap_[child + 1] < heap_[child]) ++child;
      if (heap_[child] >= k) break;
      place(i, heap_[child]);
      i = child;
    }
    place(i, k);
  }

  std::vector<std::uint64_t> heap_;
  std::vector<std::uint32_t> pos_;
};

}  // namespace detail

/// Charikar's greedy peeling: repeatedly delete a minimum-degree node
/// (smallest index among ties) and keep the densest intermediate subgraph.
/// Among equally dense intermediates the earliest, i.e. largest, wins.
///
/// Degrees only ever drop by one, so each decrement sifts up a short way;
/// the heap holds n entries regardless of m.
inline PeelResult charikar_peel(const Graph& g) {
  detail::require(!g.directed(), "charikar_peel requires an undirected graph");
  if (g.edge_count() == 0) throw NoEdgesError("graph has no edges");
  const std::size_t n = g.node_count();

  detail::DegreeHeap heap(g);

  PeelResult result;
  PeelTrace& trace = result.trace;
  trace.removal_order.reserve(n);
  std::uint64_t live_edges = g.edge_count();
  std::size_t live_nodes = n;
  trace.best_size = n;
  trace.best_density = Density::ratio(live_edges, live_nodes);

  while (!heap.empty()) {
    const auto [v, live_degree] = heap.pop();
    trace.removal_order.push_back(v);
    live_edges -= live_degree;
    --live_nodes;
    for (node_t u : g.neighbors(v))
      if (heap.contains(u)) heap.decrement(u);
    if (live_nodes == 0) break;
    const Density current = Density::ratio(live_edges, live_nodes);
    if (current > trace.best_density) {
      trace.best_density = current;
      trace.best_size = live_nodes;
    }
  }

  std::vector<node_t> kept(trace.removal_order.end() - static_cast<std::ptrdiff_t>(trace.best_size),
                           trace.removal_order.end());
  result.nodes = NodeSet(std::move(kept));
  return result;
}

}  // namespace dsg

#endif
