#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "zsdl/families.hpp"
#include "zsdl/strong_resolving.hpp"
#include "zsdl/subsets.hpp"

using namespace zsdl;

TEST(Subsets, LexOrder) {
  std::vector<VertexMask> seen;
  for_each_subset(4, 2, [&](VertexMask m) { seen.push_back(m); });
  std::vector<VertexMask> expect{0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100};
  EXPECT_EQ(seen, expect);
  EXPECT_EQ(first_subset(3, 0, [](VertexMask) { return true; }), VertexMask{0});
  EXPECT_FALSE(first_subset(3, 4, [](VertexMask) { return true; }));
}

TEST(Subsets, HittingSetMatchesLexScan) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    std::vector<VertexMask> cons(rng() % 8);
    for (auto& c : cons) c = (rng() & rng()) & low_bits(n);
    for (int k = 0; k <= n; ++k) {
      auto expect = first_subset(n, k, [&](VertexMask m) {
        return std::all_of(cons.begin(), cons.end(), [&](VertexMask c) { return (c & m) != 0; });
      });
      ASSERT_EQ(first_hitting_set(n, cons, k), expect) << trial << " k=" << k;
    }
  }
}

TEST(StronglyResolves, Examples) {
  DistanceMatrix p3(path_graph(3));
  EXPECT_TRUE(strongly_resolves(0, 1, 2, p3));
  DistanceMatrix c4(cycle_graph(4));
  EXPECT_FALSE(strongly_resolves(1, 0, 2, c4));
  EXPECT_TRUE(strongly_resolves(0, 0, 2, c4));
}

TEST(StrongResolvingSet, Examples) {
  EXPECT_TRUE(is_strong_resolving_set(path_graph(6), VertexList{0}));
  EXPECT_FALSE(is_strong_resolving_set(cycle_graph(6), VertexList{0, 1}));
  Graph g = grid(3);
  EXPECT_TRUE(is_strong_resolving_set(g, to_list(g.vertices())));
  EXPECT_THROW(is_strong_resolving_set(Graph(3), VertexList{0}), GraphError);
}

TEST(Mmd, Examples) {
  EXPECT_EQ(mmd_graph(complete_graph(5)).pairs.size(), 10U);
  auto c6 = mmd_graph(cycle_graph(6));
  using P = std::pair<Vertex, Vertex>;
  EXPECT_EQ(c6.pairs, (std::vector<P>{{0, 3}, {1, 4}, {2, 5}}));
  EXPECT_EQ(mmd_vertex_cover_lower_bound(mmd_graph(complete_graph(5))), 4);
  EXPECT_EQ(mmd_vertex_cover_lower_bound(c6), 3);
  auto p5 = mmd_graph(path_graph(5));
  EXPECT_EQ(p5.pairs, (std::vector<P>{{0, 4}}));
  EXPECT_EQ(mmd_vertex_cover_lower_bound(p5), 1);
}

TEST(Mmd, LeafPairsAlwaysPresent) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_connected_graph(2 + static_cast<int>(rng() % 9), 0.25, rng);
    auto m = mmd_graph(g);
    auto ls = leaves(g);
    for (std::size_t i = 0; i < ls.size(); ++i)
      for (std::size_t j = i + 1; j < ls.size(); ++j)
        EXPECT_NE(std::find(m.pairs.begin(), m.pairs.end(), std::pair{ls[i], ls[j]}), m.pairs.end());
  }
}

TEST(Sdim, Examples) {
  EXPECT_EQ(strong_metric_dimension(cycle_graph(7)).value, 4);
  EXPECT_EQ(strong_metric_dimension(complete_bipartite(2, 3)).value, 3);
  EXPECT_EQ(strong_metric_dimension(grid(3)).value, 2);
  Graph two_p4(8, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}});
  auto r = strong_metric_dimension(two_p4);
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.witness, (VertexList{0, 4}));
  EXPECT_EQ(strong_metric_dimension(Graph(1)).value, 0);
}

TEST(Dim, Examples) {
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(metric_dimension(path_graph(n)).value, 1);
  EXPECT_EQ(metric_dimension(complete_graph(4)).value, 3);
  EXPECT_EQ(metric_dimension(complete_bipartite(1, 3)).value, 2);
  EXPECT_EQ(metric_dimension(Graph(1)).value, 0);
  EXPECT_THROW(metric_dimension(Graph(2)), GraphError);
}

TEST(Sdim, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = oracle::random_connected_graph(2 + static_cast<int>(rng() % 8), 0.35, rng);
    auto s = strong_metric_dimension(g);
    ASSERT_EQ(s.value, oracle::sdim(g)) << encode_graph6(g);
    EXPECT_EQ(strong_metric_dimension_value(g), s.value);
    EXPECT_TRUE(oracle::strong_resolving(oracle::floyd_warshall(g), to_mask(s.witness)));
    auto d = metric_dimension(g);
    ASSERT_EQ(d.value, oracle::dim(g)) << encode_graph6(g);
    EXPECT_TRUE(oracle::resolving(oracle::floyd_warshall(g), to_mask(d.witness)));
  }
}

TEST(Sdim, WitnessIsLexFirst) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_connected_graph(3 + static_cast<int>(rng() % 6), 0.4, rng);
    auto fw = oracle::floyd_warshall(g);
    auto s = strong_metric_dimension(g);
    auto first = first_subset(g.order(), s.value, [&](VertexMask w) { return oracle::strong_resolving(fw, w); });
    ASSERT_TRUE(first);
    EXPECT_EQ(to_mask(s.witness), *first);
    auto d = metric_dimension(g);
    auto dfirst = first_subset(g.order(), d.value, [&](VertexMask w) { return oracle::resolving(fw, w); });
    EXPECT_EQ(to_mask(d.witness), *dfirst);
  }
}

TEST(Sdim, LowerBoundsAndDim) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_connected_graph(2 + static_cast<int>(rng() % 8), 0.3, rng);
    int s = strong_metric_dimension_value(g);
    EXPECT_GE(s, leaf_count(g) - 1);
    EXPECT_GE(s, mmd_vertex_cover_lower_bound(mmd_graph(g)));
    EXPECT_LE(metric_dimension(g).value, s);
    EXPECT_EQ(s == 1, is_path(g));
  }
}
