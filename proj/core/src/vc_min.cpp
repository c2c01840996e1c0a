#include "dcut/vc_min.hpp"

#include <algorithm>

namespace dcut {

namespace {

std::vector<Vertex> pair_common(const Graph& g, Vertex x, Vertex y, const std::vector<char>& in_cover) {
  std::vector<Vertex> out;
  std::set_intersection(g.neighbors(x).begin(), g.neighbors(x).end(), g.neighbors(y).begin(), g.neighbors(y).end(),
                        std::back_inserter(out));
  std::erase_if(out, [&](Vertex v) { return in_cover[static_cast<std::size_t>(v)]; });
  return out;
}

}  // namespace

std::size_t vc_min_size_bound(std::size_t s, int d) {
  const std::size_t dd = static_cast<std::size_t>(d);
  return s + (2 * dd + 1) * (s * (s > 0 ? s - 1 : 0) / 2) + s + 1 + (2 * dd + 2);
}

VcMinKernel kernelize_vc_min(const Graph& g, const VertexCoverWitness& s, int d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  require_cover(g, s.cover);
  VcMinKernel k;
  k.g = std::make_shared<const Graph>(g);
  k.cover = s.cover;
  std::sort(k.cover.begin(), k.cover.end());
  k.d = d;
  if (!is_connected(g)) {
    k.disconnected = true;
    k.h = Graph(2);
    k.to_g = {-1, -1};
    return k;
  }
  if (g.n() <= 1) {
    k.h = g;
    k.to_g.resize(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) k.to_g[static_cast<std::size_t>(v)] = v;
    return k;
  }

  std::vector<char> in_cover(static_cast<std::size_t>(g.n()), 0), in_z(static_cast<std::size_t>(g.n()), 0);
  for (Vertex x : k.cover) in_cover[static_cast<std::size_t>(x)] = 1;
  for (Vertex x : k.cover)
    for (Vertex v : g.neighbors(x))
      if (!in_cover[static_cast<std::size_t>(v)] && g.degree(v) == 1) {
        in_z[static_cast<std::size_t>(v)] = 1;
        break;
      }
  const std::size_t quota = static_cast<std::size_t>(2 * d + 1);
  for (std::size_t i = 0; i < k.cover.size(); ++i)
    for (std::size_t j = i + 1; j < k.cover.size(); ++j) {
      auto common = pair_common(g, k.cover[i], k.cover[j], in_cover);
      for (std::size_t t = 0; t < std::min(quota, common.size()); ++t) in_z[static_cast<std::size_t>(common[t])] = 1;
    }

  std::vector<Vertex> keep;
  std::optional<Vertex> unmarked_low;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (in_cover[static_cast<std::size_t>(v)] || in_z[static_cast<std::size_t>(v)]) keep.push_back(v);
    if (!in_cover[static_cast<std::size_t>(v)]) {
      if (in_z[static_cast<std::size_t>(v)]) k.marked.push_back(v);
      else if (g.degree(v) <= d) {
        k.outside_low.push_back(v);
        if (!unmarked_low) unmarked_low = v;
      }
    }
  }
  auto base = induced_subgraph(g, keep);
  k.h = base.graph;
  k.to_g = base.to_parent;
  if (!unmarked_low) return k;

  // The anchor's star must be a minimal cut of H, so it may not separate H.
  std::optional<Vertex> anchor;
  for (Vertex u : k.marked) {
    if (g.degree(u) > d) continue;
    std::vector<Vertex> rest;
    for (Vertex v : keep)
      if (v != u) rest.push_back(v);
    if (g.degree(u) == 1 || is_connected(induced_subgraph(g, rest).graph)) {
      anchor = base.from_parent[static_cast<std::size_t>(u)];
      break;
    }
  }
  bool synthetic = false;
  if (!anchor) {
    Vertex x = g.neighbors(*unmarked_low).front();
    auto [with_pendant, added] = attach_pendant_clique(k.h, base.from_parent[static_cast<std::size_t>(x)], 1);
    k.h = std::move(with_pendant);
    k.to_g.push_back(-1);
    anchor = added.front();
    synthetic = true;
  }
  auto [with_clique, clique] = attach_pendant_clique(k.h, *anchor, 2 * d + 2);
  k.h = std::move(with_clique);
  k.to_g.resize(static_cast<std::size_t>(k.h.n()), -1);
  k.attached = VcMinKernel::AttachedClique{*anchor, synthetic, clique};
  return k;
}

bool is_distinguished(const VcMinKernel& k, const EdgeCut& f) {
  if (!k.attached) return false;
  const auto& c = *k.attached;
  std::vector<Edge> expected;
  for (Vertex w : k.h.neighbors(c.anchor))
    if (!std::binary_search(c.clique.begin(), c.clique.end(), w)) expected.push_back(make_edge(c.anchor, w));
  return f == EdgeCut(std::move(expected));
}

std::vector<EdgeCut> lift_vc_min(const VcMinKernel& k, const EdgeCut& f) {
  if (k.disconnected) {
    if (!f.empty()) throw InvariantViolation("the disconnected kernel has only the empty minimal cut");
    return {EdgeCut{}};
  }
  if (!is_distinguished(k, f)) {
    try {
      return {translate(f, k.to_g)};
    } catch (const std::invalid_argument&) {
      throw InvariantViolation("a non-distinguished minimal cut touches the attached clique");
    }
  }
  std::vector<EdgeCut> out;
  if (!k.attached->synthetic_anchor) out.push_back(translate(f, k.to_g));
  for (Vertex u : k.outside_low) out.push_back(star(*k.g, u));
  return out;
}

}  // namespace dcut
