#include <gtest/gtest.h>

#include <sstream>

#include "dsg/graph.hpp"
#include "dsg/random.hpp"
#include "fixtures.hpp"

namespace {

using dsg::Density;
using dsg::NodeSet;

TEST(ParseEdgeList, SmallestPath) {
  const auto g = fixtures::undirected("a b\nb c");
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.label(0), "a");
  EXPECT_EQ(g.label(2), "c");
}

TEST(ParseEdgeList, SymmetricDuplicateIsDropped) {
  const auto g = fixtures::undirected("a b\nb a");
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.dropped_duplicates(), 1u);
}

TEST(ParseEdgeList, SelfLoopIsDropped) {
  const auto g = fixtures::undirected("x x");
  EXPECT_EQ(g.node_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(g.dropped_self_loops(), 1u);
}

TEST(ParseEdgeList, DirectedKeepsBothOrientations) {
  const auto g = fixtures::directed("a b\nb a\na b\n");
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.dropped_duplicates(), 1u);
}

TEST(ParseEdgeList, CommentsAndBlankLines) {
  const auto g = fixtures::undirected("# header\n% matrix-market style\n\na b\n  # indented\n");
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(ParseEdgeList, MalformedLineReportsLineNumber) {
  try {
    fixtures::undirected("a b\nc\n");
    FAIL() << "expected ParseError";
  } catch (const dsg::ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(fixtures::undirected("a b c\n"), dsg::ParseError);
}

TEST(ParseNodeSet, UnknownTokenIsAnError) {
  const auto g = fixtures::triangle();
  std::istringstream good("a\nc\n"), bad("a\nzz\n");
  EXPECT_EQ(dsg::parse_node_set(good, g), NodeSet({0, 2}));
  EXPECT_THROW(dsg::parse_node_set(bad, g), dsg::UnknownNodeError);
}

TEST(InducedEdgeCount, Examples) {
  EXPECT_EQ(dsg::induced_edge_count(fixtures::triangle(), NodeSet::all(3)), 3u);
  const auto g = fixtures::k25();
  EXPECT_EQ(dsg::induced_edge_count(g, fixtures::k25_leaves(g)), 0u);
  EXPECT_EQ(dsg::induced_edge_count(g, NodeSet::all(7)), 10u);
  EXPECT_EQ(oracle::edges_inside(fixtures::edge_list(g), 0x7f), 10);
}

TEST(InducedEdgeCount, OutOfRangeIsContractViolation) {
  EXPECT_THROW(dsg::induced_edge_count(fixtures::triangle(), NodeSet({0, 5})), dsg::ContractViolation);
  EXPECT_THROW(dsg::induced_edge_count(fixtures::directed("a b"), NodeSet({0})), dsg::ContractViolation);
}

TEST(CrossEdgeCount, Examples) {
  const auto uv = fixtures::directed("u v");
  EXPECT_EQ(dsg::cross_edge_count(uv, {0}, {1}), 1u);
  EXPECT_EQ(dsg::cross_edge_count(uv, {1}, {0}), 0u);
  const auto bip = fixtures::directed("a c\na d\nb c\nb d\n");
  EXPECT_EQ(dsg::cross_edge_count(bip, fixtures::labelled(bip, {"a", "b"}), fixtures::labelled(bip, {"c", "d"})),
            4u);
  EXPECT_THROW(dsg::cross_edge_count(fixtures::triangle(), {0}, {1}), dsg::ContractViolation);
}

TEST(Density, Examples) {
  const auto edge = fixtures::undirected("a b");
  EXPECT_EQ(dsg::density(edge, {0, 1}), Density::ratio(1, 2));
  const auto g = fixtures::k25();
  EXPECT_EQ(dsg::density(g, fixtures::k25_leaves(g)), Density::ratio(0, 1));
  const Density all = dsg::density(g, NodeSet::all(7));
  EXPECT_EQ(all.numerator(), 10u);
  EXPECT_EQ(all.denominator(), 7u);
  // Exhaustive oracle: 10/7 is the best density of any subset of K_{2,5}.
  const auto best = oracle::max_density(7, fixtures::edge_list(g));
  EXPECT_TRUE((best == oracle::Fraction{10, 7}));
  EXPECT_THROW(dsg::density(g, NodeSet{}), dsg::EmptySetError);
}

TEST(DirectedDensity, Examples) {
  const auto uv = fixtures::directed("u v");
  EXPECT_DOUBLE_EQ(dsg::directed_density(uv, {0}, {1}).value(), 1.0);
  EXPECT_DOUBLE_EQ(dsg::directed_density(uv, {0, 1}, {0, 1}).value(), 0.5);
  const auto bip = fixtures::directed("a c\na d\nb c\nb d\n");
  const auto d = dsg::directed_density(bip, fixtures::labelled(bip, {"a", "b"}), fixtures::labelled(bip, {"c", "d"}));
  EXPECT_DOUBLE_EQ(d.value(), 2.0);
  EXPECT_EQ(d, Density::root_ratio(2, 1));
  EXPECT_THROW(dsg::directed_density(uv, {}, {1}), dsg::EmptySetError);
  EXPECT_THROW(dsg::directed_density(uv, {0}, {}), dsg::EmptySetError);
}

TEST(CliqueDensity, Examples) {
  EXPECT_EQ(dsg::clique_density(fixtures::triangle(), NodeSet::all(3)), Density::ratio(3, 1));
  const auto k4 = fixtures::undirected("a b\na c\na d\nb c\nb d\nc d\n");
  EXPECT_EQ(dsg::clique_density(k4, NodeSet::all(4)), Density::ratio(9, 1));
  EXPECT_EQ(dsg::clique_density(fixtures::undirected("a b"), {0, 1}), Density::ratio(1, 2));
  EXPECT_THROW(dsg::clique_density(k4, {}), dsg::EmptySetError);
}

TEST(DensityOrdering, ExactAndKindChecked) {
  EXPECT_EQ(Density::ratio(2, 4), Density::ratio(1, 2));
  EXPECT_LT(Density::ratio(1, 3), Density::ratio(1, 2));
  // 3/sqrt(2) ~ 2.1213 vs 2/sqrt(1) = 2.
  EXPECT_GT(Density::root_ratio(3, 2), Density::root_ratio(2, 1));
  EXPECT_EQ(Density::root_ratio(2, 1), Density::root_ratio(4, 4));
  EXPECT_THROW((void)(Density::ratio(1, 2) < Density::root_ratio(1, 2)), dsg::ContractViolation);
}

// Random subsets of random graphs: d(S) <= (|S|-1)/2 with equality iff S is a clique.
TEST(GraphProperties, DensityAtMostCliqueDensity) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = dsg::erdos_renyi(3 + seed % 9, 0.3 + 0.1 * static_cast<double>(seed % 7), false, seed);
    dsg::Rng rng(seed + 1000);
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<dsg::node_t> members;
      for (dsg::node_t v = 0; v < g.node_count(); ++v)
        if (dsg::uniform_below(rng, 2)) members.push_back(v);
      if (members.empty()) continue;
      const NodeSet s(members);
      const auto e = dsg::induced_edge_count(g, s);
      const auto k = s.size();
      const auto d = dsg::density(g, s);
      EXPECT_LE(d, Density::ratio(k - 1, 2));
      EXPECT_EQ(d == Density::ratio(k - 1, 2), e == k * (k - 1) / 2);
    }
    EXPECT_EQ(dsg::density(g, NodeSet::all(g.node_count())), Density::ratio(g.edge_count(), g.node_count()));
  }
}

TEST(GraphProperties, AdjacencyInvariants) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = dsg::erdos_renyi(15, 0.3, false, seed);
    std::size_t total = 0;
    for (dsg::node_t v = 0; v < g.node_count(); ++v) {
      total += g.degree(v);
      for (auto u : g.neighbors(v)) {
        EXPECT_NE(u, v);
        EXPECT_TRUE(std::ranges::binary_search(g.neighbors(u), v));
      }
    }
    EXPECT_EQ(total, 2 * g.edge_count());

    const auto dg = dsg::erdos_renyi(12, 0.3, true, seed);
    std::size_t out_total = 0;
    for (dsg::node_t v = 0; v < dg.node_count(); ++v) out_total += dg.degree(v);
    EXPECT_EQ(out_total, dg.edge_count());
    const auto all = NodeSet::all(dg.node_count());
    EXPECT_EQ(dsg::cross_edge_count(dg, all, all), dg.edge_count());
  }
}

// Serializing a parsed graph and parsing it again gives the same labelled edge set.
TEST(GraphProperties, CanonicalSerializationRoundTrip) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    for (bool directed : {false, true}) {
      const auto g = dsg::erdos_renyi(10, 0.35, directed, seed);
      std::ostringstream first;
      dsg::write_edge_list(first, g);
      const auto h = dsg::parse_edge_list(first.str(), directed);
      EXPECT_EQ(h.edge_count(), g.edge_count());
      EXPECT_EQ(h.directed(), g.directed());
      for (auto [u, v] : g.edges()) {
        const auto a = h.index_of(g.label(u)), b = h.index_of(g.label(v));
        EXPECT_TRUE(std::ranges::binary_search(h.neighbors(a), b));
      }
    }
  }
}

}  // namespace
