#include "dcut/nd.hpp"

#include <algorithm>
#include <optional>

#include "equivalence.hpp"

namespace dcut {

std::size_t nd_size_bound(std::size_t modules, int d) {
  const std::size_t dd = static_cast<std::size_t>(d);
  return (3 * dd * dd + 3 * dd + 2) * modules;
}

NdKernel mark_nd(const Graph& g, const NeighborhoodDecomposition& nd, int d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  validate_decomposition(g, nd);
  NdKernel k;
  k.g = std::make_shared<const Graph>(g);
  k.nd = nd;
  k.d = d;
  const std::size_t n = static_cast<std::size_t>(g.n());
  k.clique_size.assign(n, 0);
  k.bad_of.assign(n, -1);
  std::vector<char> keep_flag(n, 0);
  std::vector<std::pair<Vertex, int>> to_attach;
  const std::size_t nice_quota = static_cast<std::size_t>(3 * d + 2);
  const std::size_t other_quota = static_cast<std::size_t>(2 * d + 1);
  for (std::size_t i = 0; i < nd.modules.size(); ++i) {
    const auto& x = nd.modules[i];
    std::vector<Vertex> t;
    for (Vertex w : g.neighbors(x.vertices.front()))
      if (nd.module_of[static_cast<std::size_t>(w)] != static_cast<int>(i)) t.push_back(w);
    const bool independent = x.kind == ModuleKind::independent;
    std::size_t quota = other_quota;
    if (independent && t.empty()) {
      // The whole graph is one edgeless module: two vertices keep its empty cut.
      quota = nd.modules.size() == 1 ? 2 : 1;
    } else if (independent && t.size() <= static_cast<std::size_t>(d)) {
      quota = nice_quota;
      if (x.vertices.size() >= nice_quota) {
        NdKernel::BadModule b;
        b.module = static_cast<int>(i);
        b.t = t;
        b.members = x.vertices;
        b.kept.assign(x.vertices.begin(), x.vertices.begin() + static_cast<std::ptrdiff_t>(nice_quota));
        if (x.vertices.size() > nice_quota)
          for (int j = 1; j <= d; ++j) {
            b.anchors.push_back(x.vertices[static_cast<std::size_t>(j - 1)]);
            to_attach.emplace_back(x.vertices[static_cast<std::size_t>(j - 1)], 2 * d + j);
          }
        for (Vertex v : x.vertices) k.bad_of[static_cast<std::size_t>(v)] = static_cast<int>(k.bad.size());
        k.bad.push_back(std::move(b));
      }
    }
    for (std::size_t j = 0; j < std::min(quota, x.vertices.size()); ++j)
      keep_flag[static_cast<std::size_t>(x.vertices[j])] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.n(); ++v)
    if (keep_flag[static_cast<std::size_t>(v)]) keep.push_back(v);
  auto sub = induced_subgraph(g, keep);
  k.h = std::move(sub.graph);
  k.to_g = std::move(sub.to_parent);
  k.from_g = std::move(sub.from_parent);
  for (auto [anchor, size] : to_attach) {
    auto [next, members] = attach_pendant_clique(k.h, k.from_g[static_cast<std::size_t>(anchor)], size);
    k.h = std::move(next);
    k.cliques.push_back({anchor, members});
    k.clique_size[static_cast<std::size_t>(anchor)] = size;
  }
  k.to_g.resize(static_cast<std::size_t>(k.h.n()), -1);
  k.in_clique.assign(static_cast<std::size_t>(k.h.n()), 0);
  for (const auto& c : k.cliques)
    for (Vertex v : c.members) k.in_clique[static_cast<std::size_t>(v)] = 1;
  return k;
}

bool touches_cliques(const NdKernel& k, const EdgeCut& f) {
  return std::any_of(f.edges.begin(), f.edges.end(), [&](const Edge& e) {
    return k.in_clique[static_cast<std::size_t>(e.first)] || k.in_clique[static_cast<std::size_t>(e.second)];
  });
}

namespace {

int owner(const NdKernel& k, const Edge& e) {
  int a = k.bad_of[static_cast<std::size_t>(e.first)];
  return a >= 0 ? a : k.bad_of[static_cast<std::size_t>(e.second)];
}

EdgeCut joins(const std::vector<Vertex>& t, Vertex u) {
  std::vector<Edge> out;
  for (Vertex x : t) out.push_back(make_edge(u, x));
  return EdgeCut(std::move(out));
}

// Kept members of X whose whole star to T_X lies in f (ids in G), or nullopt
// when some member is cut only partially.
std::optional<std::vector<Vertex>> cut_members(const NdKernel::BadModule& b, const EdgeCut& fg) {
  std::vector<Vertex> out;
  for (Vertex u : b.kept) {
    std::size_t c = 0;
    for (Vertex x : b.t)
      if (fg.contains(make_edge(u, x))) ++c;
    if (c == b.t.size()) out.push_back(u);
    else if (c != 0) return std::nullopt;
  }
  return out;
}

}  // namespace

std::vector<EdgeCut> lift_nd_min(const NdKernel& k, const EdgeCut& f) {
  if (touches_cliques(k, f)) throw InvariantViolation("kernel cut contains an edge of a pendant clique");
  EdgeCut fg = translate(f, k.to_g);
  if (fg.empty()) return {fg};
  int b = -1;
  for (const auto& e : fg.edges) {
    int o = owner(k, e);
    if (o >= 0) b = o;
  }
  if (b < 0) return {fg};
  const auto& bm = k.bad[static_cast<std::size_t>(b)];
  auto p = cut_members(bm, fg);
  if (!p || p->size() != 1 || fg != joins(bm.t, p->front()))
    throw InvariantViolation("minimal kernel cut meeting L(Y) is not a single star into T_X");
  std::vector<EdgeCut> out{fg};
  if (k.clique_size[static_cast<std::size_t>(p->front())] != 2 * k.d + 1) return out;
  for (Vertex w : bm.members)
    if (!std::binary_search(bm.kept.begin(), bm.kept.end(), w)) out.push_back(joins(bm.t, w));
  return out;
}

void enum_nd(const NdKernel& k, const EdgeCut& f, const CutSink& sink, StreamStats* stats) {
  if (touches_cliques(k, f)) throw InvariantViolation("kernel cut contains an edge of a pendant clique");
  EdgeCut fg = translate(f, k.to_g);
  Emitter out(sink, stats);
  std::vector<char> replaced(k.bad.size(), 0);
  std::vector<detail::Choice> choices;
  for (std::size_t i = 0; i < k.bad.size(); ++i) {
    const auto& b = k.bad[i];
    auto p = cut_members(b, fg);
    if (!p || p->empty()) continue;
    std::vector<int> sizes;
    for (Vertex u : *p) sizes.push_back(k.clique_size[static_cast<std::size_t>(u)]);
    if (!detail::sizes_are_consecutive(sizes, k.d)) continue;
    replaced[i] = 1;
    choices.push_back({&b.members, &b.kept, &b.t, *p});
  }
  std::vector<Edge> base;
  for (const auto& e : fg.edges) {
    int o = owner(k, e);
    if (o < 0 || !replaced[static_cast<std::size_t>(o)]) base.push_back(e);
  }
  detail::EqvEnumerator(std::move(base), std::move(choices), out).run();
}

}  // namespace dcut
