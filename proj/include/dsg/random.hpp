#ifndef DSG_RANDOM_HPP
#define DSG_RANDOM_HPP

// Portable seeded randomness.
//
// std::mt19937_64 has a fully specified output sequence, but the standard
// distributions do not, so every draw here is derived from raw 64-bit outputs:
//   - bounded integers: rejection sampling on the top of the 64-bit range
//   - unit doubles: top 53 bits scaled by 2^-53
//   - sub-seeds: splitmix64 finalizer of (seed + stream constant)
// Any reimplementation following these rules reproduces the same fixtures.

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "dsg/graph.hpp"

namespace dsg {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent stream seed for `stream` derived from `seed`.
inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream));
}

/// FNV-1a, used to give every corpus file its own stream.
inline std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Uniform integer in [0, bound).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// Uniform double in [0, 1).
inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// `k` distinct elements of `pool` chosen uniformly (partial Fisher-Yates),
/// returned in selection order.
template <class T>
std::vector<T> sample_without_replacement(std::vector<T> pool, std::size_t k, Rng& rng) {
  if (k > pool.size()) k = pool.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + uniform_below(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

/// G(n, p): each unordered pair (each ordered pair when directed) is an edge
/// with probability p, pairs visited in lexicographic order.
inline Graph erdos_renyi(std::size_t n, double p, bool directed, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (node_t u = 0; u < n; ++u)
    for (node_t v = directed ? 0 : u + 1; v < n; ++v) {
      if (u == v) continue;
      if (uniform_unit(rng) < p) edges.emplace_back(u, v);
    }
  return Graph::from_edges(n, std::move(edges), directed);
}

/// Random graph with exactly `m` distinct edges drawn uniformly with
/// rejection; intended for sparse sizes (m much less than n^2/2).
inline Graph random_graph_with_edges(std::size_t n, std::size_t m, bool directed, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m + m / 8);
  while (true) {
    while (edges.size() < m + m / 16 + 16) {
      auto u = static_cast<node_t>(uniform_below(rng, n));
      auto v = static_cast<node_t>(uniform_below(rng, n));
      if (u == v) continue;
      if (!directed && u > v) std::swap(u, v);
      edges.emplace_back(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (edges.size() >= m) break;
  }
  // Drop a uniform subset of the surplus so exactly m remain.
  std::vector<Edge> kept = sample_without_replacement(std::move(edges), m, rng);
  return Graph::from_edges(n, std::move(kept), directed);
}

}  // namespace dsg

#endif
