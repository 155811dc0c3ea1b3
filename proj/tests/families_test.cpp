#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "zsdl/families.hpp"
#include "zsdl/strong_resolving.hpp"
#include "zsdl/tree_structure.hpp"
#include "zsdl/unicyclic.hpp"
#include "zsdl/zero_forcing.hpp"

using namespace zsdl;

TEST(Constructors, Comb) {
  Graph c = comb(4);
  EXPECT_EQ(c.order(), 10);
  EXPECT_TRUE(is_tree(c));
  EXPECT_EQ(leaf_count(c), 6);
  EXPECT_EQ(sdim_tree_closed_form(c), 5);
  auto p = tree_profile(c);
  EXPECT_EQ(p.exterior_major, (VertexList{1, 2, 3, 4}));
  EXPECT_EQ(p.major_vertices, (VertexList{1, 2, 3, 4}));
  EXPECT_TRUE(c.adjacent(2, comb_tooth(4, 2)));

  Graph ce = comb_plus_e(4);
  EXPECT_EQ(ce.order(), 10);
  EXPECT_TRUE(ce.adjacent(0, 5));
  EXPECT_EQ(classify(ce).kind, GraphKind::Unicyclic);
  EXPECT_THROW(comb(0), std::invalid_argument);
}

TEST(Constructors, CombExteriorMajorsAreTheSpine) {
  for (int k = 1; k <= 8; ++k) {
    auto p = tree_profile(comb(k));
    VertexList spine;
    for (int i = 1; i <= k; ++i) spine.push_back(i);
    if (k >= 2) EXPECT_EQ(p.exterior_major, spine) << k;
  }
}

TEST(Constructors, GridAndAlternatingSun) {
  Graph g = grid(3);
  EXPECT_EQ(g.order(), 9);
  EXPECT_EQ(g.size(), 12);
  EXPECT_EQ(classify(g), (GraphClass{GraphKind::Other, 4}));
  for (int s = 2; s <= 5; ++s) EXPECT_EQ(classify(grid(s)).cycle_rank, (s - 1) * (s - 1));

  Graph a = alternating_sun(3);
  EXPECT_EQ(a.order(), 9);
  EXPECT_EQ(classify(a).kind, GraphKind::Unicyclic);
  EXPECT_EQ(oracle::zero_forcing(a), 3);
  EXPECT_EQ(oracle::sdim(a), 3);
}

TEST(Constructors, SunAndNamedGraphs) {
  Graph s = sun_graph(std::vector<int>{2, 0, 1});
  EXPECT_EQ(s.order(), 6);
  EXPECT_TRUE(s.adjacent(0, 3) && s.adjacent(0, 4) && s.adjacent(2, 5));
  EXPECT_EQ(complete_bipartite(2, 3).size(), 6);
  EXPECT_EQ(cycle_graph(5).size(), 5);
  EXPECT_THROW(cycle_graph(2), std::invalid_argument);
  EXPECT_EQ(complete_graph(5).size(), 10);
}

TEST(Prufer, DecodesKnownSequences) {
  // sequence (3,3,3) on 5 vertices is the star centred at 3
  Graph star = prufer_decode(std::vector<int>{3, 3, 3}, 5);
  EXPECT_EQ(star.degree(3), 4);
  Graph path = prufer_decode(std::vector<int>{1, 2}, 4);
  EXPECT_TRUE(is_path(path));
  EXPECT_EQ(path.edges(), (std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(Enumeration, TreeCounts) {
  EXPECT_EQ(enumerate_trees(2).size(), 1U);
  EXPECT_EQ(enumerate_trees(3).size(), 3U);
  EXPECT_EQ(enumerate_trees(4).size(), 16U);
  EXPECT_EQ(enumerate_trees(5).size(), 125U);
  EXPECT_EQ(enumerate_trees(9).size(), 4782969U);
  EXPECT_THROW(enumerate_trees(1), FamilyError);
  EXPECT_THROW(enumerate_trees(10), FamilyError);
}

TEST(Enumeration, TreesAreDistinctAndComplete) {
  for (int n = 2; n <= 6; ++n) {
    std::set<std::string> seen;
    auto e = enumerate_trees(n);
    e.for_each([&](const FamilyItem& item) {
      EXPECT_TRUE(is_tree(item.graph));
      seen.insert(encode_graph6(item.graph));
    });
    EXPECT_EQ(seen.size(), e.size());
  }
}

TEST(Enumeration, TreePlusE) {
  auto three = enumerate_tree_plus_e(3);
  std::uint64_t count = 0;
  three.for_each([&](const FamilyItem& item) {
    ++count;
    EXPECT_EQ(item.graph, complete_graph(3));
  });
  EXPECT_EQ(count, 3U);

  auto four = enumerate_tree_plus_e(4);
  EXPECT_EQ(four.size(), 16U * 3U);
  four.for_each([&](const FamilyItem& item) {
    ASSERT_TRUE(item.base && item.added_edge);
    EXPECT_EQ(item.base->with_edge(item.added_edge->first, item.added_edge->second), item.graph);
    EXPECT_EQ(classify(item.graph).kind, GraphKind::Unicyclic);
    EXPECT_NO_THROW(unique_cycle(item.graph));
  });
  EXPECT_THROW(enumerate_tree_plus_e(2), FamilyError);
  EXPECT_THROW(enumerate_tree_plus_e(9), FamilyError);
}

TEST(Enumeration, LabeledConnectedCountsMatchOracle) {
  for (int n = 2; n <= 5; ++n) {
    std::uint64_t count = 0;
    enumerate_labeled_connected(n).for_each([&](const FamilyItem& item) {
      ++count;
      EXPECT_TRUE(oracle::connected(item.graph));
    });
    EXPECT_EQ(count, oracle::connected_labeled_count(n)) << n;
  }
  EXPECT_EQ(oracle::connected_labeled_count(3), 4U);
  EXPECT_EQ(oracle::connected_labeled_count(4), 38U);
  EXPECT_THROW(enumerate_labeled_connected(7), FamilyError);
  EXPECT_NO_THROW(enumerate_labeled_connected(7, {true}));
}

TEST(FamilySpec, Parse) {
  auto s = FamilySpec::parse("sun:n=6,u=1,1,0,1,0,0");
  EXPECT_EQ(s.kind, FamilyKind::PartialSun);
  EXPECT_EQ(s.list("u"), (std::vector<int>{1, 1, 0, 1, 0, 0}));
  EXPECT_EQ(s.value("n"), 6);

  auto r = FamilySpec::parse("prufer-trees:n=2..8");
  EXPECT_EQ(r.range("n"), (std::pair{2, 8}));
  EXPECT_EQ(FamilySpec::parse("comb:k=5").value("k"), 5);
  EXPECT_EQ(FamilySpec::parse("grid:s=3").kind, FamilyKind::Grid);

  EXPECT_THROW(FamilySpec::parse("nope:n=3"), FamilyError);
  EXPECT_THROW(make_enumeration(FamilySpec::parse("comb:k=x")), FamilyError);
  EXPECT_THROW(make_enumeration(FamilySpec::parse("comb:k=5..2")), FamilyError);
  EXPECT_THROW(FamilySpec::parse("comb:k"), FamilyError);
}

TEST(FamilySpec, Generate) {
  EXPECT_EQ(generate(FamilySpec::parse("comb:k=4")), comb(4));
  EXPECT_EQ(generate(FamilySpec::parse("comb-plus-e:k=4")), comb_plus_e(4));
  EXPECT_EQ(generate(FamilySpec::parse("sun:u=1,0,1,0,1,0")), alternating_sun(3));
  EXPECT_EQ(generate(FamilySpec::parse("bipartite:s=2,t=3")), complete_bipartite(2, 3));
  EXPECT_THROW(generate(FamilySpec::parse("comb:k=0")), std::invalid_argument);
  EXPECT_THROW(generate(FamilySpec::parse("sun:n=5,u=1,0")), FamilyError);
  EXPECT_THROW(generate(FamilySpec::parse("prufer-trees:n=4")), FamilyError);
}

TEST(FamilySpec, EnumerationSizes) {
  EXPECT_EQ(make_enumeration(FamilySpec::parse("comb:k=4..6"))->size(), 3U);
  EXPECT_EQ(make_enumeration(FamilySpec::parse("prufer-trees:n=2..5"))->size(), 1U + 3U + 16U + 125U);
  EXPECT_EQ(make_enumeration(FamilySpec::parse("sun:n=3..5"))->size(), 8U + 16U + 32U);
  EXPECT_EQ(make_enumeration(FamilySpec::parse("sun:n=3,max=2"))->size(), 27U);
  EXPECT_EQ(make_enumeration(FamilySpec::parse("bipartite:s=1..2,t=2..3"))->size(), 4U);
  EXPECT_THROW(make_enumeration(FamilySpec::parse("prufer-trees:n=2..10")), FamilyError);
}
