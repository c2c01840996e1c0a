#include <gtest/gtest.h>

#include <functional>

#include "dcut/generators.hpp"
#include "dcut/params.hpp"
#include "support/naive_oracle.hpp"

namespace dcut {
namespace {

using testing::graph;

TEST(ApproxVertexCover, Examples) {
  EXPECT_EQ(approx_vertex_cover(path_graph(2)).cover, (std::vector<Vertex>{0, 1}));
  auto star5 = approx_vertex_cover(star_graph(5));
  EXPECT_EQ(star5.cover, (std::vector<Vertex>{0, 1}));
  EXPECT_FALSE(star5.exact);
  EXPECT_TRUE(approx_vertex_cover(Graph(4)).cover.empty());
}

TEST(ApproxVertexCover, CoversAndStaysWithinFactorTwo) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Graph g = random_graph(10, 0.3, seed);
    auto s = approx_vertex_cover(g);
    EXPECT_NO_THROW(require_cover(g, s.cover));
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : s.cover) in[v] = 1;
    for (const auto& [u, v] : g.edges()) EXPECT_TRUE(in[u] || in[v]);
    EXPECT_LE(s.cover.size(), 2 * exact_vertex_cover(g).cover.size());
  }
}

TEST(ExactVertexCover, SmallCases) {
  EXPECT_EQ(exact_vertex_cover(star_graph(5)).cover, (std::vector<Vertex>{0}));
  EXPECT_EQ(exact_vertex_cover(clique_graph(4)).cover.size(), 3u);
  EXPECT_TRUE(exact_vertex_cover(path_graph(4)).exact);
  EXPECT_THROW(exact_vertex_cover(path_graph(30)), OracleLimitError);
}

TEST(RequireCover, NamesTheUncoveredEdge) {
  try {
    require_cover(path_graph(4), {1});
    FAIL() << "expected a rejection";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("2 3"), std::string::npos);
  }
}

TEST(NeighborhoodDecomposition, Examples) {
  auto star6 = neighborhood_decomposition(star_graph(6));
  ASSERT_EQ(star6.modules.size(), 2u);
  EXPECT_EQ(star6.modules[0].vertices, (std::vector<Vertex>{0}));
  EXPECT_EQ(star6.modules[1].vertices, (std::vector<Vertex>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(star6.modules[1].kind, ModuleKind::independent);

  EXPECT_EQ(neighborhood_decomposition(path_graph(4)).modules.size(), 4u);

  auto k4 = neighborhood_decomposition(clique_graph(4));
  ASSERT_EQ(k4.modules.size(), 1u);
  EXPECT_EQ(k4.modules[0].kind, ModuleKind::clique);
}

TEST(NeighborhoodDecomposition, SingletonsAreIndependent) {
  for (const auto& m : neighborhood_decomposition(path_graph(5)).modules) EXPECT_EQ(m.kind, ModuleKind::independent);
}

// Smallest number of blocks over all set partitions that are neighbourhood
// decompositions, by restricted growth strings.
std::size_t minimum_modules(const Graph& g) {
  const int n = g.n();
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  std::size_t best = static_cast<std::size_t>(n);
  auto valid = [&](int blocks) {
    for (int b = 0; b < blocks; ++b) {
      std::vector<Vertex> members;
      for (Vertex v = 0; v < n; ++v)
        if (label[v] == b) members.push_back(v);
      bool clique = true, independent = true;
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
          (g.has_edge(members[i], members[j]) ? independent : clique) = false;
      if (!clique && !independent) return false;
      for (Vertex x = 0; x < n; ++x) {
        if (label[x] == b) continue;
        for (Vertex v : members)
          if (g.has_edge(x, v) != g.has_edge(x, members[0])) return false;
      }
    }
    return true;
  };
  std::function<void(int, int)> rec = [&](int v, int blocks) {
    if (static_cast<std::size_t>(blocks) >= best) return;
    if (v == n) {
      if (valid(blocks)) best = static_cast<std::size_t>(blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[v] = b;
      rec(v + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return best;
}

TEST(NeighborhoodDecomposition, ValidAndMinimumOnSmallGraphs) {
  std::vector<Graph> corpus;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) corpus.push_back(random_graph(6 + static_cast<int>(seed % 2), 0.5, seed));
  for (std::uint64_t seed = 1; seed <= 25; ++seed) corpus.push_back(random_bundle(3, 4, seed));
  for (const auto& g : corpus) {
    auto nd = neighborhood_decomposition(g);
    EXPECT_NO_THROW(validate_decomposition(g, nd));
    EXPECT_EQ(nd.modules.size(), minimum_modules(g)) << serialize(g);
    for (const auto& m : nd.modules)
      for (Vertex u : m.vertices)
        for (Vertex v : m.vertices)
          for (Vertex x = 0; x < g.n(); ++x)
            if (nd.module_of[x] != nd.module_of[u]) EXPECT_EQ(g.has_edge(x, u), g.has_edge(x, v));
  }
}

TEST(ValidateDecomposition, RejectsBadModules) {
  NeighborhoodDecomposition bad;
  bad.modules = {{{0, 2}, ModuleKind::independent}, {{1}, ModuleKind::independent}, {{3}, ModuleKind::independent}};
  bad.module_of = {0, 1, 0, 2};
  // In P4, vertices 0 and 2 differ on vertex 3.
  EXPECT_THROW(validate_decomposition(path_graph(4), bad), std::invalid_argument);
}

TEST(CliquePartition, ValidationExamples) {
  Graph two_triangles = graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_NO_THROW(validate_clique_partition(two_triangles, {{0, 1, 2}, {3, 4, 5}}));
  EXPECT_NO_THROW(validate_clique_partition(path_graph(3), {{0, 1}, {2}}));
  try {
    validate_clique_partition(path_graph(3), {{0, 2}, {1}});
    FAIL() << "expected a rejection";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("0 and 2"), std::string::npos);
  }
  EXPECT_THROW(validate_clique_partition(path_graph(3), {{0, 1}}), std::invalid_argument);
  EXPECT_THROW(validate_clique_partition(path_graph(3), {{0, 1}, {1, 2}}), std::invalid_argument);
}

TEST(CliquePartition, FileRoundTrip) {
  CliquePartitionWitness cp{{{0, 1}, {2}}};
  EXPECT_EQ(load_partition(serialize_partition(cp)), cp.cliques);
  EXPECT_EQ(load_partition("# blocks\n0 1\n\n2\n"), (std::vector<std::vector<Vertex>>{{0, 1}, {2}}));
  EXPECT_THROW(load_partition("0 x\n"), ParseError);
  EXPECT_THROW(load_partition("0 -1\n"), ParseError);
}

TEST(CliquePartition, GreedyAndExact) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Graph g = random_graph(8, 0.5, seed);
    auto greedy = greedy_clique_partition(g);
    auto exact = exact_clique_partition(g);
    EXPECT_NO_THROW(validate_clique_partition(g, greedy.cliques));
    EXPECT_NO_THROW(validate_clique_partition(g, exact.cliques));
    EXPECT_LE(exact.cliques.size(), greedy.cliques.size());
  }
  EXPECT_EQ(exact_clique_partition(path_graph(4)).cliques.size(), 2u);
  EXPECT_EQ(exact_clique_partition(clique_graph(5)).cliques.size(), 1u);
  EXPECT_THROW(exact_clique_partition(path_graph(25)), OracleLimitError);
}

}  // namespace
}  // namespace dcut
