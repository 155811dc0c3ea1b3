#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "zsdl/families.hpp"
#include "zsdl/graph.hpp"

using namespace zsdl;

namespace {

Graph from_edges(int n, std::vector<std::pair<Vertex, Vertex>> edges) { return Graph(n, edges); }

}  // namespace

TEST(Graph, RejectsLoopsAndDuplicates) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), GraphError);
  EXPECT_THROW(g.add_edge(2, 2), GraphError);
  EXPECT_THROW(g.add_edge(0, 3), GraphError);
  EXPECT_EQ(g.size(), 1);
  EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(Graph, OrderCappedAtWordSize) {
  EXPECT_NO_THROW(Graph(64));
  EXPECT_THROW(Graph(65), GraphError);
}

TEST(Graph6, ReferenceStrings) {
  Graph k2 = parse_graph6("A_");
  EXPECT_EQ(k2.order(), 2);
  EXPECT_EQ(k2.size(), 1);
  EXPECT_EQ(parse_graph6("Bw"), complete_graph(3));
  EXPECT_EQ(parse_graph6("Bg"), from_edges(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(encode_graph6(complete_graph(2)), "A_");
  EXPECT_EQ(encode_graph6(Graph(1)), "@");
  EXPECT_EQ(encode_graph6(path_graph(3)), "Bg");
  EXPECT_EQ(encode_graph6(Graph(0)), "?");
}

TEST(Graph6, HeaderAndLineEndings) {
  EXPECT_EQ(parse_graph6(">>graph6<<Bw"), complete_graph(3));
  EXPECT_EQ(parse_graph6("Bw\r\n"), complete_graph(3));
}

TEST(Graph6, MalformedInput) {
  EXPECT_THROW(parse_graph6(""), Graph6Error);
  EXPECT_THROW(parse_graph6("B"), Graph6Error);     // missing adjacency byte
  EXPECT_THROW(parse_graph6("Bww"), Graph6Error);   // trailing garbage
  EXPECT_THROW(parse_graph6("B~"), Graph6Error);    // padding bits set
  EXPECT_THROW(parse_graph6("B w"), Graph6Error);
  EXPECT_THROW(parse_graph6("~"), Graph6Error);     // long-form size field
  EXPECT_THROW(encode_graph6(Graph(63)), GraphError);
}

TEST(Graph6, MatchesReferenceEncoderOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    int n = static_cast<int>(rng() % 40);
    Graph g = oracle::random_graph(n, 0.3, rng);
    std::string s = encode_graph6(g);
    EXPECT_EQ(s, oracle::graph6(g));
    EXPECT_EQ(parse_graph6(s), g);
  }
  Graph big = oracle::random_graph(62, 0.5, rng);
  EXPECT_EQ(parse_graph6(encode_graph6(big)), big);
}

TEST(Distances, Examples) {
  EXPECT_EQ(DistanceMatrix(path_graph(3))(0, 2), 2);
  EXPECT_EQ(DistanceMatrix(cycle_graph(6))(1, 4), 3);
  DistanceMatrix k4(complete_graph(4));
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(k4(u, v), u == v ? 0 : 1);
  EXPECT_THROW(DistanceMatrix(Graph(2)), GraphError);
}

TEST(Distances, MetricAxiomsAgainstFloydWarshall) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_connected_graph(2 + static_cast<int>(rng() % 10), 0.35, rng);
    DistanceMatrix dm(g);
    auto fw = oracle::floyd_warshall(g);
    int n = g.order();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        ASSERT_EQ(dm(u, v), fw[u][v]);
        EXPECT_EQ(dm(u, v), dm(v, u));
        EXPECT_EQ(dm(u, v) == 1, g.adjacent(u, v));
        for (Vertex w = 0; w < n; ++w) EXPECT_LE(dm(u, w), dm(u, v) + dm(v, w));
      }
      EXPECT_EQ(dm(u, u), 0);
    }
  }
}

TEST(Leaves, Examples) {
  EXPECT_EQ(leaves(path_graph(5)), (VertexList{0, 4}));
  EXPECT_EQ(leaves(complete_bipartite(1, 3)), (VertexList{1, 2, 3}));
  EXPECT_TRUE(leaves(cycle_graph(5)).empty());
}

TEST(Leaves, MatchesDegreeSequence) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 20), 0.15, rng);
    int ones = 0;
    for (Vertex v = 0; v < g.order(); ++v) ones += g.degree(v) == 1;
    EXPECT_EQ(leaf_count(g), ones);
    EXPECT_EQ(static_cast<int>(leaves(g).size()), ones);
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(prufer_decode(std::vector<int>{0, 0, 1, 2, 2}, 7)), (GraphClass{GraphKind::Tree, 0}));
  Graph c5_pendant = cycle_graph(5);
  c5_pendant = Graph(6, c5_pendant.edges());
  c5_pendant.add_edge(0, 5);
  EXPECT_EQ(classify(c5_pendant), (GraphClass{GraphKind::Unicyclic, 1}));
  EXPECT_EQ(classify(grid(3)), (GraphClass{GraphKind::Other, 4}));
  EXPECT_THROW(classify(Graph(2)), GraphError);
  EXPECT_EQ(to_string(GraphKind::Unicyclic), "unicyclic");
}

TEST(Classify, RankZeroIffAcyclic) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_connected_graph(1 + static_cast<int>(rng() % 9), 0.3, rng);
    // Independent cycle search: a connected graph is acyclic iff every edge is a bridge.
    bool acyclic = true;
    for (auto [u, v] : g.edges()) {
      Graph without(g.order());
      for (auto [a, b] : g.edges())
        if (!(a == u && b == v)) without.add_edge(a, b);
      if (oracle::connected(without)) acyclic = false;
    }
    EXPECT_EQ(classify(g).cycle_rank == 0, acyclic);
  }
}

TEST(Components, Examples) {
  Graph p4 = path_graph(4);
  auto one = connected_components(p4);
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(one[0].graph, p4);

  Graph two = from_edges(5, {{0, 1}, {2, 3}, {3, 4}});
  auto parts = connected_components(two);
  ASSERT_EQ(parts.size(), 2U);
  EXPECT_EQ(parts[0].graph.order(), 2);
  EXPECT_EQ(parts[1].graph.order(), 3);
  EXPECT_EQ(parts[1].original, (VertexList{2, 3, 4}));
  EXPECT_EQ(parts[1].graph, path_graph(3));

  auto singles = connected_components(Graph(3));
  ASSERT_EQ(singles.size(), 3U);
  for (const auto& c : singles) EXPECT_EQ(c.graph.order(), 1);
}

TEST(Components, InducedSubgraphKeepsOriginalIds) {
  Graph g = cycle_graph(6);
  auto sub = induced_subgraph(g, bit(1) | bit(2) | bit(3) | bit(5));
  EXPECT_EQ(sub.original, (VertexList{1, 2, 3, 5}));
  EXPECT_EQ(sub.graph, from_edges(4, {{0, 1}, {1, 2}}));
}

TEST(Paths, IsPath) {
  EXPECT_TRUE(is_path(path_graph(1)));
  EXPECT_TRUE(is_path(path_graph(6)));
  EXPECT_FALSE(is_path(cycle_graph(4)));
  EXPECT_FALSE(is_path(complete_bipartite(1, 3)));
  EXPECT_FALSE(is_path(Graph(2)));
}
