#include <gtest/gtest.h>

#include "dcut/generators.hpp"
#include "dcut/oracle.hpp"
#include "dcut/params.hpp"
#include "dcut/vc_all.hpp"
#include "support/naive_oracle.hpp"

namespace dcut {
namespace {

using testing::cut;
using testing::graph;

std::vector<EdgeCut> collect_lift(const VcAllKernel& k, const EdgeCut& f, bool canonical, StreamStats* stats = nullptr) {
  std::vector<EdgeCut> out;
  lift_vc_all(k, f, canonical, [&](const EdgeCut& c) { out.push_back(c); return true; }, stats);
  return out;
}

// Union of every class, failing on any repeat.
CutSet lift_everything(const VcAllKernel& k) {
  CutSet out;
  bool first = true;
  for (const auto& f : enumerate_all_bruteforce(k.h, k.d)) {
    for (const auto& c : collect_lift(k, f, first)) EXPECT_TRUE(out.insert(c).second) << "duplicate " << c;
    first = false;
  }
  return out;
}

TEST(KernelizeVcAll, StarKeepsOneEdge) {
  auto k = kernelize_vc_all(star_graph(3), {{0}, false}, 1);
  EXPECT_EQ(k.h, path_graph(2));
  EXPECT_EQ(k.to_g, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(k.outside_low, (std::vector<Vertex>{2, 3}));
}

TEST(KernelizeVcAll, PairQuota) {
  std::vector<Edge> edges;
  for (Vertex v = 2; v < 7; ++v) {
    edges.emplace_back(0, v);
    edges.emplace_back(1, v);
  }
  auto k = kernelize_vc_all(Graph::from_edges(7, edges), {{0, 1}, false}, 1);
  EXPECT_EQ(k.marked, (std::vector<Vertex>{2, 3, 4}));
}

TEST(KernelizeVcAll, EdgelessGraphKeepsItsEmptyCut) {
  auto k = kernelize_vc_all(Graph(2), {{}, false}, 1);
  EXPECT_EQ(k.h, Graph(2));
  EXPECT_EQ(lift_everything(k), CutSet{EdgeCut{}});
  auto k5 = kernelize_vc_all(Graph(5), {{}, false}, 1);
  EXPECT_EQ(k5.h.n(), 2);
}

TEST(KernelizeVcAll, OneIsolatedVertexWhenThereAreEdges) {
  Graph g = graph(5, {{0, 1}});
  auto k = kernelize_vc_all(g, {{0}, false}, 1);
  int isolated = 0;
  for (Vertex v = 0; v < k.h.n(); ++v) isolated += k.h.degree(v) == 0;
  EXPECT_EQ(isolated, 1);
}

TEST(LegalPair, Conditions) {
  auto k = kernelize_vc_all(star_graph(3), {{0}, false}, 1);
  auto ctx = legal_context(k, cut({{0, 1}}));
  EXPECT_TRUE(is_legal_pair(k, ctx, {}, {}));
  const auto& pool = ctx.h_side[0] == 0 ? ctx.j_a : ctx.j_b;
  EXPECT_EQ(pool, (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(ctx.load.at(0), 1);
  if (ctx.h_side[0] == 0) EXPECT_FALSE(is_legal_pair(k, ctx, {}, {2}));
  else EXPECT_FALSE(is_legal_pair(k, ctx, {2}, {}));
}

TEST(LegalPair, RejectsVertexWithTooManyNeighbours) {
  // Vertices 4..7 see both cover vertices; the pair quota keeps 4, 5, 6 and
  // the unmarked vertex 7 has two neighbours on its side, too many for d=1.
  Graph g = graph(8, {{0, 1}, {0, 2}, {1, 3}, {0, 4}, {1, 4}, {0, 5}, {1, 5}, {0, 6}, {1, 6}, {0, 7}, {1, 7}});
  auto k = kernelize_vc_all(g, {{0, 1}, false}, 1);
  ASSERT_LT(k.from_g[7], 0);
  for (const auto& f : enumerate_all_bruteforce(k.h, 1)) {
    auto ctx = legal_context(k, f);
    const bool in_a = std::binary_search(ctx.j_a.begin(), ctx.j_a.end(), 7);
    EXPECT_FALSE(in_a ? is_legal_pair(k, ctx, {}, {7}) : is_legal_pair(k, ctx, {7}, {}));
  }
}

TEST(EnumLegalExtensions, StarYieldsOnlyTheKernelCut) {
  auto k = kernelize_vc_all(star_graph(3), {{0}, false}, 1);
  std::vector<EdgeCut> out;
  enum_legal_extensions(k, cut({{0, 1}}), [&](const EdgeCut& c) { out.push_back(c); return true; });
  EXPECT_EQ(out, std::vector<EdgeCut>{cut({{0, 1}})});
}

TEST(EnumLegalExtensions, IdentityKernelYieldsItself) {
  Graph g = path_graph(4);
  auto k = kernelize_vc_all(g, approx_vertex_cover(g), 1);
  ASSERT_EQ(k.h, g);
  for (const auto& f : enumerate_all_bruteforce(g, 1)) {
    std::vector<EdgeCut> out;
    enum_legal_extensions(k, f, [&](const EdgeCut& c) { out.push_back(c); return true; });
    EXPECT_EQ(out, std::vector<EdgeCut>{f});
  }
}

TEST(EnumLegalExtensions, TwoCoverVerticesWithExtraPendant) {
  // x=0, y=1 nonadjacent; p_x=2, p_y=3 marked; q_x=4 unmarked.
  Graph g = graph(5, {{0, 2}, {1, 3}, {0, 4}});
  auto k = kernelize_vc_all(g, {{0, 1}, false}, 1);
  EXPECT_EQ(k.outside_low, (std::vector<Vertex>{4}));
  EXPECT_EQ(lift_everything(k), testing::to_cut_set(testing::naive_d_cuts(g, 1)));
}

TEST(LiftVcAll, StarCanonicalClassHasAllThreeCuts) {
  Graph g = star_graph(3);
  const CutSet expected{cut({{0, 1}}), cut({{0, 2}}), cut({{0, 3}})};
  ASSERT_EQ(testing::to_cut_set(testing::naive_d_cuts(g, 1)), expected);
  auto k = kernelize_vc_all(g, {{0}, false}, 1);
  auto canonical = collect_lift(k, cut({{0, 1}}), true);
  EXPECT_EQ(CutSet(canonical.begin(), canonical.end()), expected);
  EXPECT_EQ(collect_lift(k, cut({{0, 1}}), false), std::vector<EdgeCut>{cut({{0, 1}})});
}

TEST(LiftVcAll, DisconnectedInput) {
  Graph g = graph(5, {{2, 3}, {2, 4}});
  for (int d = 1; d <= 2; ++d) {
    auto k = kernelize_vc_all(g, approx_vertex_cover(g), d);
    EXPECT_EQ(lift_everything(k), testing::to_cut_set(testing::naive_d_cuts(g, d)));
  }
}

TEST(LiftVcAll, StopsWhenTheSinkDeclines) {
  Graph g = star_graph(30);
  auto k = kernelize_vc_all(g, {{0}, false}, 1);
  int seen = 0;
  lift_vc_all(k, cut({{0, 1}}), true, [&](const EdgeCut&) { return ++seen < 5; });
  EXPECT_EQ(seen, 5);
}

TEST(LiftVcAll, PartitionsEveryBundleInstance) {
  for (const auto& inst : structured_corpus(80, 14, 17)) {
    const Graph& g = inst.graph;
    for (int d = 1; d <= 2; ++d) {
      auto k = kernelize_vc_all(g, approx_vertex_cover(g), d);
      EXPECT_EQ(lift_everything(k), testing::to_cut_set(testing::naive_d_cuts(g, d))) << inst.name << " d=" << d;
    }
  }
}

TEST(LiftVcAll, ExtensionsAddOnlyEdgesOutsideTheKernel) {
  for (const auto& inst : structured_corpus(60, 14, 23)) {
    const Graph& g = inst.graph;
    for (int d = 1; d <= 2; ++d) {
      auto k = kernelize_vc_all(g, approx_vertex_cover(g), d);
      for (const auto& f : enumerate_all_bruteforce(k.h, d)) {
        const EdgeCut base = translate(f, k.to_g);
        std::vector<EdgeCut> out;
        enum_legal_extensions(k, f, [&](const EdgeCut& c) { out.push_back(c); return true; });
        for (const auto& c : out) {
          EXPECT_TRUE(is_d_cut(g, d, c));
          EXPECT_TRUE(base.is_subset_of(c));
          for (const auto& [u, v] : c.edges)
            if (!base.contains({u, v})) EXPECT_TRUE(k.from_g[u] < 0 || k.from_g[v] < 0);
        }
      }
    }
  }
}

TEST(LiftVcAll, NodesBetweenOutputsAtMostN) {
  for (const auto& inst : structured_corpus(60, 16, 29)) {
    const Graph& g = inst.graph;
    for (int d = 1; d <= 2; ++d) {
      auto k = kernelize_vc_all(g, approx_vertex_cover(g), d);
      bool first = true;
      for (const auto& f : enumerate_all_bruteforce(k.h, d)) {
        StreamStats stats;
        collect_lift(k, f, first, &stats);
        first = false;
        EXPECT_LE(stats.max_nodes_between_yields, static_cast<std::uint64_t>(g.n())) << inst.name;
      }
    }
  }
}

TEST(KernelizeVcAll, SizeBoundAndIsolatedVertices) {
  for (const auto& inst : structured_corpus(80, 18, 31)) {
    const Graph& g = inst.graph;
    if (g.m() == 0) continue;
    for (int d = 1; d <= 2; ++d) {
      auto s = approx_vertex_cover(g);
      auto k = kernelize_vc_all(g, s, d);
      EXPECT_LE(static_cast<std::size_t>(k.h.n()), vc_all_size_bound(s.cover.size(), d)) << inst.name;
      int isolated = 0;
      for (Vertex v = 0; v < k.h.n(); ++v) isolated += k.h.degree(v) == 0;
      EXPECT_LE(isolated, 1);
    }
  }
}

}  // namespace
}  // namespace dcut
