#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dsg/graph.hpp"
#include "oracles.hpp"

namespace fixtures {

inline dsg::Graph undirected(std::string_view text) { return dsg::parse_edge_list(text, false); }
inline dsg::Graph directed(std::string_view text) { return dsg::parse_edge_list(text, true); }

/// Hubs x1 (index 0) and x2 (index 6) joined to leaves y1..y5 (indices 1..5).
inline dsg::Graph k25() {
  return undirected(
      "x1 y1\nx1 y2\nx1 y3\nx1 y4\nx1 y5\n"
      "x2 y1\nx2 y2\nx2 y3\nx2 y4\nx2 y5\n");
}

inline dsg::NodeSet labelled(const dsg::Graph& g, const std::vector<std::string>& labels) {
  std::vector<dsg::node_t> ids;
  for (const auto& l : labels) ids.push_back(g.index_of(l));
  return dsg::NodeSet(ids);
}

inline dsg::NodeSet k25_leaves(const dsg::Graph& g) { return labelled(g, {"y1", "y2", "y3", "y4", "y5"}); }

inline dsg::Graph triangle() { return undirected("a b\nb c\nc a\n"); }
inline dsg::Graph triangle_pendant() { return undirected("a b\nb c\nc a\nc d\n"); }
inline dsg::Graph k4_pendant() { return undirected("a b\na c\na d\nb c\nb d\nc d\nd p\n"); }
inline dsg::Graph path4() { return undirected("a b\nb c\nc d\n"); }

inline oracle::EdgeList edge_list(const dsg::Graph& g) {
  oracle::EdgeList out;
  for (auto [u, v] : g.edges()) out.emplace_back(static_cast<int>(u), static_cast<int>(v));
  return out;
}

}  // namespace fixtures
