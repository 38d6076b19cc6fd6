#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "apkplex/gen.hpp"
#include "apkplex/signed_graph.hpp"

namespace apk {
namespace {

LoadedGraph load(const std::string& text) {
  std::istringstream in(text);
  return load_signed_edge_list(in);
}

TEST(Loader, ReadsPositiveAndNegativeEdges) {
  auto [g, report] = load("0 1 +\n1 2 -\n");
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_positive_edges(), 1u);
  EXPECT_EQ(g.num_negative_edges(), 1u);
  EXPECT_EQ(g.sign(0, 1), Sign::positive);
  EXPECT_EQ(g.sign(2, 1), Sign::negative);
  EXPECT_EQ(g.sign(0, 2), Sign::none);
  EXPECT_EQ(report.lines, 2u);
}

TEST(Loader, CollapsesExactDuplicates) {
  auto [g, report] = load("0 1 +\n0 1 +\n");
  EXPECT_EQ(g.num_positive_edges(), 1u);
  EXPECT_EQ(report.duplicates, 1u);
  EXPECT_EQ(report.conflicts, 0u);
}

TEST(Loader, DropsPairsSeenWithBothSigns) {
  auto [g, report] = load("0 1 +\n1 0 -\n");
  EXPECT_EQ(g.num_edges(), 0u);
  EXPECT_EQ(report.conflicts, 1u);
  EXPECT_EQ(g.num_vertices(), 2u);
}

TEST(Loader, AcceptsAllSignSpellingsAndComments) {
  auto [g, report] = load("# header\n\n0 1 1\n1 2 -1\n2 3 +\n3 0 -\n  # indented comment\n");
  EXPECT_EQ(g.num_positive_edges(), 2u);
  EXPECT_EQ(g.num_negative_edges(), 2u);
  EXPECT_EQ(report.lines, 4u);
}

TEST(Loader, DropsSelfLoops) {
  auto [g, report] = load("0 0 +\n0 1 -\n");
  EXPECT_EQ(report.self_loops, 1u);
  EXPECT_EQ(g.num_edges(), 1u);
}

TEST(Loader, RemapsLabelsInAscendingOrder) {
  auto [g, report] = load("100 -5 +\n7 100 -\n");
  ASSERT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.label(0), -5);
  EXPECT_EQ(g.label(1), 7);
  EXPECT_EQ(g.label(2), 100);
  EXPECT_EQ(g.sign(0, 2), Sign::positive);
  EXPECT_EQ(g.find_label(7), VertexId{1});
  EXPECT_FALSE(g.find_label(8).has_value());
}

TEST(Loader, ReportsLineOfMalformedInput) {
  for (const char* bad : {"0 1 +\n# ok\n0 2\n", "0 1 +\n\nx 2 +\n", "0 1 +\n0 1 +\n3 4 *\n", "0 1 + extra\n\n\n"}) {
    try {
      load(bad);
      FAIL() << "accepted: " << bad;
    } catch (const ParseError& e) {
      const std::size_t expected = std::string(bad).starts_with("0 1 + extra") ? 1 : 3;
      EXPECT_EQ(e.line(), expected) << bad;
    }
  }
}

TEST(Loader, RoundTripsThroughWriter) {
  const auto g = random_signed_graph(30, 0.3, 0.4, 11);
  std::ostringstream out;
  write_signed_edge_list(out, g);
  auto again = load(out.str()).graph;
  std::ostringstream out2;
  write_signed_edge_list(out2, again);
  EXPECT_EQ(out.str(), out2.str());
}

TEST(Graph, FromEdgesRejectsBadInput) {
  std::vector<SignedEdge> loop{{1, 1, Sign::positive}};
  std::vector<SignedEdge> range{{0, 5, Sign::positive}};
  std::vector<SignedEdge> twice{{0, 1, Sign::positive}, {1, 0, Sign::negative}};
  EXPECT_THROW(SignedGraph::from_edges(3, loop), std::invalid_argument);
  EXPECT_THROW(SignedGraph::from_edges(3, range), std::invalid_argument);
  EXPECT_THROW(SignedGraph::from_edges(3, twice), std::invalid_argument);
}

TEST(Graph, DenseAndSparseSignQueriesAgree) {
  // Same structure twice, once above the dense-table limit.
  std::vector<SignedEdge> edges{{0, 1, Sign::positive}, {1, 2, Sign::negative}, {0, 3, Sign::negative}};
  const auto small = SignedGraph::from_edges(4, edges);
  const auto big = SignedGraph::from_edges(SignedGraph::kDenseLimit + 10, edges);
  for (VertexId u = 0; u < 4; ++u) {
    for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(small.sign(u, v), big.sign(u, v)) << u << "," << v;
  }
  EXPECT_EQ(big.sign(0, SignedGraph::kDenseLimit + 5), Sign::none);
}

TEST(Graph, DegreesAndNeighbourListsAreConsistent) {
  const auto g = random_signed_graph(40, 0.25, 0.5, 3);
  std::size_t pos = 0, neg = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    EXPECT_EQ(g.degree(v), g.positive_degree(v) + g.negative_degree(v));
    EXPECT_TRUE(std::is_sorted(g.neighbors(v).begin(), g.neighbors(v).end()));
    for (VertexId u : g.positive_neighbors(v)) EXPECT_EQ(g.sign(u, v), Sign::positive);
    for (VertexId u : g.negative_neighbors(v)) EXPECT_EQ(g.sign(u, v), Sign::negative);
    pos += g.positive_degree(v);
    neg += g.negative_degree(v);
  }
  EXPECT_EQ(pos, 2 * g.num_positive_edges());
  EXPECT_EQ(neg, 2 * g.num_negative_edges());
}

TEST(Graph, InducedKeepsLabelsAndSigns) {
  auto [g, report] = load("10 20 +\n20 30 -\n10 30 -\n30 40 +\n");
  const VertexSet keep{0, 2, 3};  // labels 10, 30, 40
  const auto h = g.induced(keep);
  ASSERT_EQ(h.num_vertices(), 3u);
  EXPECT_EQ(h.label(1), 30);
  EXPECT_EQ(h.sign(0, 1), Sign::negative);
  EXPECT_EQ(h.sign(1, 2), Sign::positive);
  EXPECT_EQ(h.num_edges(), 2u);
}

TEST(TwoHop, PositivePathComposesToFriend) {
  std::vector<SignedEdge> e{{0, 1, Sign::positive}, {1, 2, Sign::positive}};
  const auto h = two_hop_signed(SignedGraph::from_edges(3, e), 0);
  EXPECT_TRUE(std::ranges::binary_search(h.n2plus, VertexId{2}));
}

TEST(TwoHop, MixedPathComposesToFoe) {
  std::vector<SignedEdge> e{{0, 1, Sign::positive}, {1, 2, Sign::negative}};
  const auto h = two_hop_signed(SignedGraph::from_edges(3, e), 0);
  EXPECT_TRUE(std::ranges::binary_search(h.n2minus, VertexId{2}));
}

TEST(TwoHop, UnbalancedTriangleKeepsBothRelations) {
  std::vector<SignedEdge> e{{0, 1, Sign::positive}, {1, 2, Sign::positive}, {0, 2, Sign::negative}};
  const auto g = SignedGraph::from_edges(3, e);
  const auto h = two_hop_signed(g, 0);
  EXPECT_TRUE(std::ranges::binary_search(h.n2plus, VertexId{2}));
  EXPECT_EQ(g.sign(0, 2), Sign::negative);
}

TEST(TwoHop, MatchesAllTwoPathsOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = random_signed_graph(14, 0.35, 0.5, seed);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      std::set<VertexId> plus, minus;
      for (VertexId a = 0; a < g.num_vertices(); ++a) {
        for (VertexId b = 0; b < g.num_vertices(); ++b) {
          const Sign s1 = g.sign(v, a), s2 = g.sign(a, b);
          if (s1 == Sign::none || s2 == Sign::none || b == v) continue;
          (s1 == s2 ? plus : minus).insert(b);
        }
      }
      const auto h = two_hop_signed(g, v);
      EXPECT_EQ(VertexSet(plus.begin(), plus.end()), h.n2plus);
      EXPECT_EQ(VertexSet(minus.begin(), minus.end()), h.n2minus);
    }
  }
}

TEST(Ego, PositiveStarHasNoInternalEdges) {
  std::vector<SignedEdge> e;
  for (VertexId leaf = 1; leaf <= 4; ++leaf) e.push_back({0, leaf, Sign::positive});
  const auto ego = dichromatic_ego(SignedGraph::from_edges(5, e), 0);
  EXPECT_EQ(ego.left, (VertexSet{1, 2, 3, 4}));
  EXPECT_TRUE(ego.right.empty());
  EXPECT_EQ(ego.network.num_edges(), 0u);
}

TEST(Ego, DropsConflictingEdges) {
  std::vector<SignedEdge> e{{0, 1, Sign::positive}, {0, 2, Sign::positive}, {0, 3, Sign::negative},
                            {1, 2, Sign::negative}, {1, 3, Sign::positive}, {2, 3, Sign::negative}};
  const auto ego = dichromatic_ego(SignedGraph::from_edges(4, e), 0);
  EXPECT_EQ(ego.left, (VertexSet{1, 2}));
  EXPECT_EQ(ego.right, (VertexSet{3}));
  // Local ids follow `members`: 1 -> 0, 2 -> 1, 3 -> 2.
  EXPECT_EQ(ego.network.sign(0, 1), Sign::none);
  EXPECT_EQ(ego.network.sign(0, 2), Sign::none);
  EXPECT_EQ(ego.network.sign(1, 2), Sign::negative);
}

TEST(Ego, NetworkIsAlwaysBalancedAroundCenter) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = random_signed_graph(15, 0.4, 0.5, seed);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      const auto ego = dichromatic_ego(g, v);
      for (const auto& edge : ego.network.edges()) {
        const bool same = std::ranges::binary_search(ego.left, ego.members[edge.u]) ==
                          std::ranges::binary_search(ego.left, ego.members[edge.v]);
        EXPECT_EQ(edge.sign == Sign::positive, same);
        EXPECT_EQ(edge.sign, g.sign(ego.members[edge.u], ego.members[edge.v]));
      }
    }
  }
}

TEST(Order, SmallerMinimumSignedDegreeComesFirst) {
  // v0: d+=3, d-=3; v1: d+=1, d-=5.
  std::vector<SignedEdge> e{{0, 2, Sign::positive}, {0, 3, Sign::positive}, {0, 4, Sign::positive},
                            {0, 5, Sign::negative}, {0, 6, Sign::negative}, {0, 7, Sign::negative},
                            {1, 2, Sign::positive}, {1, 3, Sign::negative}, {1, 4, Sign::negative},
                            {1, 5, Sign::negative}, {1, 6, Sign::negative}, {1, 7, Sign::negative}};
  const auto order = enumeration_order(SignedGraph::from_edges(8, e));
  const auto pos0 = std::ranges::find(order, VertexId{0}) - order.begin();
  const auto pos1 = std::ranges::find(order, VertexId{1}) - order.begin();
  EXPECT_LT(pos1, pos0);
}

TEST(Order, TiesBreakById) {
  std::vector<SignedEdge> e{{0, 1, Sign::positive}, {2, 3, Sign::positive}};
  EXPECT_EQ(enumeration_order(SignedGraph::from_edges(4, e)), (std::vector<VertexId>{0, 1, 2, 3}));
}

TEST(Order, MatchesIndependentSortAndRanksInvert) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = random_signed_graph(10, 0.5, 0.5, seed);
    std::vector<std::pair<std::size_t, VertexId>> keyed;
    for (VertexId v = 0; v < 10; ++v) keyed.emplace_back(std::min(g.positive_degree(v), g.negative_degree(v)), v);
    std::sort(keyed.begin(), keyed.end());
    const auto order = enumeration_order(g);
    const auto rank = ranks_of(order);
    for (std::size_t i = 0; i < 10; ++i) {
      EXPECT_EQ(order[i], keyed[i].second);
      EXPECT_EQ(rank[order[i]], i);
    }
  }
}

}  // namespace
}  // namespace apk
