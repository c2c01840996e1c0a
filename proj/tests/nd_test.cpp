#include <gtest/gtest.h>

#include "dcut/generators.hpp"
#include "dcut/nd.hpp"
#include "dcut/oracle.hpp"
#include "support/naive_oracle.hpp"

namespace dcut {
namespace {

using testing::cut;

NdKernel kernel(const Graph& g, int d) { return mark_nd(g, neighborhood_decomposition(g), d); }

std::vector<EdgeCut> collect(const NdKernel& k, const EdgeCut& f) {
  std::vector<EdgeCut> out;
  enum_nd(k, f, [&](const EdgeCut& c) { out.push_back(c); return true; });
  return out;
}

EdgeCut kernel_cut(const NdKernel& k, std::initializer_list<std::pair<int, int>> g_edges) {
  std::vector<Edge> e;
  for (auto [u, v] : g_edges) e.push_back(make_edge(k.from_g[u], k.from_g[v]));
  return EdgeCut(e);
}

TEST(MarkNd, StarWithSixLeaves) {
  auto k = kernel(star_graph(6), 1);
  EXPECT_EQ(k.h.n(), 9);
  ASSERT_EQ(k.bad.size(), 1u);
  EXPECT_EQ(k.bad[0].kept, (std::vector<Vertex>{1, 2, 3, 4, 5}));
  EXPECT_EQ(k.bad[0].anchors, (std::vector<Vertex>{1}));
  EXPECT_EQ(k.clique_size[1], 3);
  EXPECT_EQ(k.from_g[6], -1);
}

TEST(MarkNd, StarWithFiveLeavesIsKeptWhole) {
  auto k = kernel(star_graph(5), 1);
  EXPECT_EQ(k.h, star_graph(5));
  EXPECT_TRUE(k.cliques.empty());
}

TEST(MarkNd, LargeCliqueModule) {
  auto k = kernel(clique_graph(100), 2);
  EXPECT_EQ(k.h, clique_graph(5));
}

TEST(MarkNd, EdgelessGraphs) {
  EXPECT_EQ(kernel(Graph(6), 1).h, Graph(2));
  EXPECT_EQ(kernel(Graph(1), 1).h, Graph(1));
}

TEST(MarkNd, RejectsInvalidDecomposition) {
  NeighborhoodDecomposition bad;
  bad.modules = {{{0, 1, 2}, ModuleKind::independent}};
  bad.module_of = {0, 0, 0};
  EXPECT_THROW(mark_nd(path_graph(3), bad, 1), std::invalid_argument);
}

TEST(LiftNdMin, StarClasses) {
  Graph g = star_graph(6);
  auto k = kernel(g, 1);
  auto carrier = lift_nd_min(k, kernel_cut(k, {{0, 1}}));
  EXPECT_EQ(carrier, (std::vector<EdgeCut>{cut({{0, 1}}), cut({{0, 6}})}));
  EXPECT_EQ(lift_nd_min(k, kernel_cut(k, {{0, 2}})), std::vector<EdgeCut>{cut({{0, 2}})});

  CutSet lifted;
  for (const auto& f : filter_minimal(enumerate_all_bruteforce(k.h, 1)))
    for (const auto& c : lift_nd_min(k, f)) EXPECT_TRUE(lifted.insert(c).second);
  EXPECT_EQ(lifted, testing::to_cut_set(testing::naive_minimal(testing::naive_d_cuts(g, 1))));
}

TEST(LiftNdMin, DisconnectedInput) {
  Graph g = testing::graph(4, {{0, 1}, {2, 3}});
  auto k = kernel(g, 1);
  EXPECT_EQ(lift_nd_min(k, EdgeCut{}), std::vector<EdgeCut>{EdgeCut{}});
}

TEST(EnumNd, StarMaximalClass) {
  auto k = kernel(star_graph(6), 1);
  EXPECT_EQ(collect(k, kernel_cut(k, {{0, 1}})), (std::vector<EdgeCut>{cut({{0, 1}}), cut({{0, 6}})}));
}

TEST(EnumNd, CutAvoidingBadModulesIsItsOwnClass) {
  // Path 0-1-2 with six leaves on 2: the edge 0-1 lies outside L(Y).
  std::vector<Edge> edges{{0, 1}, {1, 2}};
  for (Vertex v = 3; v < 9; ++v) edges.emplace_back(2, v);
  Graph g = Graph::from_edges(9, edges);
  auto k = kernel(g, 1);
  ASSERT_EQ(k.bad.size(), 1u);
  EXPECT_EQ(collect(k, kernel_cut(k, {{0, 1}})), std::vector<EdgeCut>{cut({{0, 1}})});
}

TEST(EnumNd, StarAllCuts) {
  Graph g = star_graph(6);
  auto k = kernel(g, 1);
  CutSet lifted;
  for (const auto& f : enumerate_all_bruteforce(k.h, 1))
    for (const auto& c : collect(k, f)) EXPECT_TRUE(lifted.insert(c).second);
  EXPECT_EQ(lifted.size(), 6u);
  EXPECT_EQ(lifted, testing::to_cut_set(testing::naive_d_cuts(g, 1)));
}

TEST(EnumNd, PartitionsAllThreeFamiliesOnStructuredGraphs) {
  for (const auto& inst : structured_corpus(80, 15, 53)) {
    const Graph& g = inst.graph;
    for (int d = 1; d <= 2; ++d) {
      auto k = kernel(g, d);
      const auto raw = testing::naive_d_cuts(g, d);
      const CutSet kernel_all = search_d_cuts(k.h, d, 64);

      CutSet all, max, min;
      for (const auto& f : kernel_all)
        for (const auto& c : collect(k, f)) EXPECT_TRUE(all.insert(c).second) << inst.name;
      for (const auto& f : filter_maximal(kernel_all))
        for (const auto& c : collect(k, f)) EXPECT_TRUE(max.insert(c).second) << inst.name;
      for (const auto& f : filter_minimal(kernel_all))
        for (const auto& c : lift_nd_min(k, f)) EXPECT_TRUE(min.insert(c).second) << inst.name;
      EXPECT_EQ(all, testing::to_cut_set(raw)) << inst.name << " d=" << d;
      EXPECT_EQ(max, testing::to_cut_set(testing::naive_maximal(raw))) << inst.name << " d=" << d;
      EXPECT_EQ(min, testing::to_cut_set(testing::naive_minimal(raw))) << inst.name << " d=" << d;
    }
  }
}

TEST(MarkNd, MinimalCutsMeetingBadModulesStayInside) {
  for (const auto& inst : structured_corpus(80, 15, 59)) {
    for (int d = 1; d <= 2; ++d) {
      auto k = kernel(inst.graph, d);
      for (const auto& f : filter_minimal(search_d_cuts(k.h, d, 64))) {
        EXPECT_FALSE(touches_cliques(k, f));
        const EdgeCut fg = translate(f, k.to_g);
        bool any_bad = false, any_good = false;
        for (const auto& [u, v] : fg.edges) (k.bad_of[u] >= 0 || k.bad_of[v] >= 0 ? any_bad : any_good) = true;
        EXPECT_FALSE(any_bad && any_good) << inst.name << ' ' << fg;
      }
    }
  }
}

TEST(MarkNd, SizeAndModuleBounds) {
  for (const auto& inst : structured_corpus(80, 18, 61)) {
    for (int d = 1; d <= 2; ++d) {
      const auto nd = neighborhood_decomposition(inst.graph);
      auto k = mark_nd(inst.graph, nd, d);
      EXPECT_LE(static_cast<std::size_t>(k.h.n()), nd_size_bound(nd.modules.size(), d)) << inst.name;
      EXPECT_LE(neighborhood_decomposition(k.h).modules.size(), static_cast<std::size_t>(2 * d + 1) * nd.modules.size());
    }
  }
}

}  // namespace
}  // namespace dcut
