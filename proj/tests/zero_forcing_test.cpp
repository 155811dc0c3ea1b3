#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "zsdl/families.hpp"
#include "zsdl/zero_forcing.hpp"

using namespace zsdl;

namespace {

Graph two_triangles() { return Graph(5, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

}  // namespace

TEST(Closure, PathForcesAlongItself) {
  auto c = forcing_closure(path_graph(4), VertexList{0});
  EXPECT_EQ(c.forces, (std::vector<Force>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(c.final_black, (VertexList{0, 1, 2, 3}));
  EXPECT_EQ(c.initial_black, (VertexList{0}));
}

TEST(Closure, StuckExamples) {
  auto c4 = forcing_closure(cycle_graph(4), VertexList{2});
  EXPECT_TRUE(c4.forces.empty());
  EXPECT_EQ(c4.final_black, (VertexList{2}));
  auto k3 = forcing_closure(complete_graph(3), VertexList{0});
  EXPECT_TRUE(k3.forces.empty());
  EXPECT_EQ(k3.final_black, (VertexList{0}));
}

TEST(Closure, OutOfRange) {
  EXPECT_THROW(forcing_closure(path_graph(3), VertexList{3}), GraphError);
  EXPECT_THROW(forcing_closure(path_graph(3), VertexList{-1}), GraphError);
}

TEST(Closure, ChronicleIsValidReplay) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 10), 0.3, rng);
    VertexMask s = rng() & g.vertices();
    auto c = forcing_closure(g, to_list(s));
    VertexMask black = s;
    for (auto f : c.forces) {
      ASSERT_TRUE(contains(black, f.forcer));
      ASSERT_EQ(g.neighbors(f.forcer) & ~black, bit(f.forced));
      black |= bit(f.forced);
    }
    EXPECT_EQ(to_mask(c.final_black), black);
    EXPECT_EQ(closure_mask(g, s), black);
  }
}

TEST(ZeroForcingSet, Examples) {
  Graph c4 = cycle_graph(4);
  EXPECT_TRUE(is_zero_forcing_set(c4, VertexList{0, 1}));
  EXPECT_FALSE(is_zero_forcing_set(c4, VertexList{0, 2}));
  Graph g = grid(3);
  EXPECT_TRUE(is_zero_forcing_set(g, to_list(g.vertices())));
}

TEST(ZeroForcingNumber, Examples) {
  for (int n = 2; n <= 10; ++n) EXPECT_EQ(zero_forcing_number(path_graph(n)).value, 1);
  EXPECT_EQ(zero_forcing_number(complete_graph(5)).value, 4);
  EXPECT_EQ(zero_forcing_number(grid(3)).value, 3);
  EXPECT_EQ(zero_forcing_number(cycle_graph(7)).value, 2);
  EXPECT_EQ(zero_forcing_number(Graph(1)).value, 1);
  EXPECT_EQ(zero_forcing_number(Graph(0)).value, 0);
}

TEST(ZeroForcingNumber, CanonicalWitness) {
  auto r = zero_forcing_number(cycle_graph(5));
  EXPECT_EQ(r.witness, (VertexList{0, 1}));
  auto star = zero_forcing_number(complete_bipartite(1, 3));
  EXPECT_EQ(star.value, 2);
  EXPECT_EQ(star.witness, (VertexList{1, 2}));  // {0,1} stalls at the centre
}

TEST(ZeroForcingNumber, DisconnectedIsAdditive) {
  Graph g(7, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 3}});
  auto r = zero_forcing_number(g);
  EXPECT_EQ(r.value, 1 + 2 + 1);
  EXPECT_EQ(r.witness, (VertexList{0, 3, 4, 6}));
  EXPECT_TRUE(is_zero_forcing_set(g, r.witness));
  EXPECT_EQ(zero_forcing_value(g), 4);
}

TEST(ZeroForcingNumber, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 9), 0.35, rng);
    auto r = zero_forcing_number(g);
    ASSERT_EQ(r.value, oracle::zero_forcing(g)) << encode_graph6(g);
    EXPECT_EQ(zero_forcing_value(g), r.value);
    EXPECT_EQ(static_cast<int>(r.witness.size()), r.value);
    EXPECT_TRUE(oracle::all_true(oracle::closure(g, oracle::from_mask(g.order(), to_mask(r.witness)))));
  }
}

TEST(PartialSun, FormulaExamples) {
  EXPECT_EQ(partial_sun_Z(6, std::vector<int>{3, 1}), 3);
  EXPECT_EQ(partial_sun_Z(6, std::vector<int>{}), 2);
  EXPECT_EQ(partial_sun_Z(6, std::vector<int>{1, 1, 1}), 3);
  EXPECT_EQ(partial_sun_Z(5, std::vector<int>{5}), 3);
}

TEST(PartialSun, InfeasibleLayouts) {
  EXPECT_THROW(partial_sun_Z(6, std::vector<int>{3, 3}), std::invalid_argument);
  EXPECT_THROW(partial_sun_Z(6, std::vector<int>{1, 1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(partial_sun_Z(2, std::vector<int>{}), std::invalid_argument);
  EXPECT_THROW(partial_sun_Z(6, std::vector<int>{0}), std::invalid_argument);
}

TEST(PartialSun, AgreesWithSolverOnAllLayouts) {
  for (int n = 3; n <= 8; ++n) {
    for (std::uint32_t u = 0; u < (1U << n); ++u) {
      std::vector<int> counts(n);
      for (int i = 0; i < n; ++i) counts[i] = (u >> i) & 1U;
      // segments: maximal cyclic runs of leafed positions
      std::vector<int> segments;
      if (u == (1U << n) - 1) {
        segments = {n};
      } else if (u != 0) {
        int start = 0;
        while (counts[start]) ++start;
        int run = 0;
        for (int k = 1; k <= n; ++k) {
          int i = (start + k) % n;
          if (counts[i]) {
            ++run;
          } else if (run) {
            segments.push_back(run);
            run = 0;
          }
        }
      }
      ASSERT_EQ(partial_sun_Z(n, segments), zero_forcing_value(sun_graph(counts))) << n << " " << u;
    }
  }
}

TEST(CutVertex, Examples) {
  EXPECT_EQ(z_cut_vertex_lower_bound(complete_bipartite(1, 3), 0), 1);
  EXPECT_EQ(z_cut_vertex_lower_bound(two_triangles(), 2), 3);
  EXPECT_EQ(z_cut_vertex_lower_bound(path_graph(5), 2), 1);
  EXPECT_THROW(z_cut_vertex_lower_bound(path_graph(5), 0), GraphError);
  EXPECT_THROW(z_cut_vertex_lower_bound(cycle_graph(5), 1), GraphError);
}

TEST(CutVertex, BoundHoldsOnRandomGraphs) {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_connected_graph(3 + static_cast<int>(rng() % 6), 0.3, rng);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (component_masks(g, g.vertices() & ~bit(v)).size() < 2) continue;
      EXPECT_LE(z_cut_vertex_lower_bound(g, v), oracle::zero_forcing(g));
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}
