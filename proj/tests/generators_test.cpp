#include <gtest/gtest.h>

#include "dcut/generators.hpp"
#include "dcut/params.hpp"

namespace dcut {
namespace {

TEST(StarForest, Shape) {
  Graph g = star_forest(3, 2);
  EXPECT_EQ(g.n(), 9);
  EXPECT_EQ(g.m(), 3u + 6u);
  EXPECT_EQ(exact_vertex_cover(g).cover.size(), 3u);
  for (Vertex leaf = 3; leaf < 9; ++leaf) {
    ASSERT_EQ(g.degree(leaf), 1);
    EXPECT_EQ(g.neighbors(leaf)[0], (leaf - 3) / 2);
  }
  EXPECT_THROW(star_forest(0, 2), std::invalid_argument);
}

TEST(Compose, GadgetShape) {
  Graph g = compose({clique_graph(3), clique_graph(3)}, 1);
  EXPECT_EQ(g.n(), 8);
  // Two triangles, one gadget edge and two join edges per gadget vertex.
  EXPECT_EQ(g.m(), 3u + 3u + 1u + 4u);
  EXPECT_TRUE(g.has_edge(6, 7));
  for (Vertex c : {6, 7}) {
    EXPECT_TRUE(g.has_edge(c, 0));
    EXPECT_TRUE(g.has_edge(c, 3));
  }
}

TEST(Simple, Families) {
  EXPECT_EQ(path_graph(4).m(), 3u);
  EXPECT_EQ(clique_graph(5).m(), 10u);
  Graph s = star_graph(6);
  EXPECT_EQ(s.n(), 7);
  EXPECT_EQ(s.degree(0), 6);
}

TEST(Random, DeterministicPerSeed) {
  EXPECT_EQ(random_graph(12, 0.3, 5), random_graph(12, 0.3, 5));
  EXPECT_NE(random_graph(12, 0.3, 5), random_graph(12, 0.3, 6));
  EXPECT_EQ(random_graph(6, 0.0, 1).m(), 0u);
  EXPECT_EQ(random_graph(6, 1.0, 1).m(), 15u);
  EXPECT_THROW(random_graph(4, 1.5, 1), std::invalid_argument);
}

TEST(ConnectedGraphs, LabelledCounts) {
  // Connected labelled graphs: 1, 1, 4, 38, 728, 26704.
  const std::vector<std::size_t> expected{1, 1, 4, 38, 728, 26704};
  for (int n = 1; n <= 6; ++n) {
    std::size_t count = 0;
    for_each_connected_graph(n, [&](const Graph& g) {
      EXPECT_TRUE(is_connected(g));
      ++count;
      return true;
    });
    EXPECT_EQ(count, expected[static_cast<std::size_t>(n - 1)]) << n;
  }
}

TEST(Corpus, Composition) {
  auto corpus = verification_corpus(4, 10, 3);
  EXPECT_EQ(corpus.size(), 1u + 1u + 4u + 38u + 10u);
  for (std::size_t i = 44; i < corpus.size(); ++i) {
    EXPECT_GE(corpus[i].graph.n(), 7);
    EXPECT_LE(corpus[i].graph.n(), 8);
  }
  auto again = verification_corpus(4, 10, 3);
  for (std::size_t i = 0; i < corpus.size(); ++i) EXPECT_EQ(corpus[i].graph, again[i].graph);

  auto structured = structured_corpus(20, 14, 9);
  EXPECT_EQ(structured.size(), 20u);
  for (const auto& inst : structured) EXPECT_LE(inst.graph.n(), 14);
}

TEST(Bundle, OutsideVerticesFormTwinClasses) {
  Graph g = random_bundle(3, 9, 4);
  EXPECT_EQ(g.n(), 12);
  auto nd = neighborhood_decomposition(g);
  EXPECT_LE(nd.modules.size(), 3u + 3u);
}

}  // namespace
}  // namespace dcut
