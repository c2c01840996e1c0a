#include "dcut/vc_max.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "dcut/oracle.hpp"
#include "equivalence.hpp"

namespace dcut {

double vc_max_size_bound(std::size_t s, int d) {
  return 18.0 * std::pow(d, 3) * std::pow(static_cast<double>(s), d + 1);
}

namespace {

void for_each_subset(const std::vector<Vertex>& pool, std::size_t r, const std::function<void(const std::vector<Vertex>&)>& fn) {
  std::vector<Vertex> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == r) {
      fn(cur);
      return;
    }
    for (std::size_t i = start; i + (r - cur.size()) <= pool.size(); ++i) {
      cur.push_back(pool[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

VcMaxKernel mark_vc(const Graph& g, const VertexCoverWitness& s, int d, MarkVcOptions opts) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  require_cover(g, s.cover);
  VcMaxKernel k;
  k.g = std::make_shared<const Graph>(g);
  k.cover = s.cover;
  std::sort(k.cover.begin(), k.cover.end());
  k.d = d;
  const std::size_t n = static_cast<std::size_t>(g.n());
  k.clique_size.assign(n, 0);
  k.bad_of.assign(n, -1);

  if (opts.small_input_identity && static_cast<double>(g.n()) <= std::pow(static_cast<double>(k.cover.size()), d + 1)) {
    k.identity = true;
    k.h = g;
    k.to_g.resize(n);
    k.from_g.resize(n);
    for (Vertex v = 0; v < g.n(); ++v) k.to_g[static_cast<std::size_t>(v)] = k.from_g[static_cast<std::size_t>(v)] = v;
    k.in_clique.assign(n, 0);
    return k;
  }

  if (n == 1) {
    // A single vertex has no d-cut, so the empty kernel lifts to the same empty family.
    k.from_g.assign(1, -1);
    return k;
  }

  std::vector<char> in_cover(n, 0), in_z(n, 0);
  for (Vertex x : k.cover) in_cover[static_cast<std::size_t>(x)] = 1;
  std::size_t isolated_quota = k.cover.empty() ? 2 : 1;
  std::map<std::vector<Vertex>, std::vector<Vertex>> low_groups, high_groups;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (in_cover[static_cast<std::size_t>(u)]) continue;
    int deg = g.degree(u);
    if (deg == 0) {
      if (isolated_quota > 0) {
        in_z[static_cast<std::size_t>(u)] = 1;
        --isolated_quota;
      }
    } else if (deg <= d) {
      low_groups[g.neighbors(u)].push_back(u);
    } else {
      for_each_subset(g.neighbors(u), static_cast<std::size_t>(d + 1),
                      [&](const std::vector<Vertex>& t) { high_groups[t].push_back(u); });
    }
  }

  const std::size_t low_quota = static_cast<std::size_t>(2 * d + 2);
  std::vector<std::pair<Vertex, int>> to_attach;
  for (auto& [t, members] : low_groups) {
    std::size_t keep = std::min(low_quota, members.size());
    for (std::size_t i = 0; i < keep; ++i) in_z[static_cast<std::size_t>(members[i])] = 1;
    if (members.size() < low_quota) continue;
    VcMaxKernel::BadSet b;
    b.t = t;
    b.members = members;
    b.marked_members.assign(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(keep));
    if (members.size() > low_quota)
      for (int i = 1; i <= d; ++i) to_attach.emplace_back(members[static_cast<std::size_t>(i - 1)], 2 * d + i);
    for (Vertex u : members) k.bad_of[static_cast<std::size_t>(u)] = static_cast<int>(k.bad.size());
    k.bad.push_back(std::move(b));
  }
  const std::size_t high_quota = static_cast<std::size_t>(2 * d + 1);
  for (auto& [t, members] : high_groups)
    for (std::size_t i = 0; i < std::min(high_quota, members.size()); ++i) in_z[static_cast<std::size_t>(members[i])] = 1;

  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (in_cover[static_cast<std::size_t>(v)] || in_z[static_cast<std::size_t>(v)]) keep.push_back(v);
    if (!in_cover[static_cast<std::size_t>(v)] && in_z[static_cast<std::size_t>(v)]) k.marked.push_back(v);
  }
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

namespace {

// Index of the bad set owning an edge of G, or -1 when the edge is outside L(Y).
int owner(const VcMaxKernel& k, const Edge& e) {
  int a = k.bad_of[static_cast<std::size_t>(e.first)];
  return a >= 0 ? a : k.bad_of[static_cast<std::size_t>(e.second)];
}

struct Profile {
  std::vector<Edge> rest;
  std::vector<std::size_t> counts;
  std::vector<char> occupied;
};

Profile profile(const VcMaxKernel& k, const EdgeCut& f) {
  Profile p;
  p.counts.assign(k.bad.size(), 0);
  p.occupied.assign(k.bad.size(), 1);
  std::map<Vertex, std::size_t> per_member;
  for (const auto& e : f.edges) {
    int b = owner(k, e);
    if (b < 0) {
      p.rest.push_back(e);
      continue;
    }
    ++p.counts[static_cast<std::size_t>(b)];
    Vertex u = k.bad_of[static_cast<std::size_t>(e.first)] >= 0 ? e.first : e.second;
    ++per_member[u];
  }
  for (auto [u, c] : per_member) {
    int b = k.bad_of[static_cast<std::size_t>(u)];
    if (c != k.bad[static_cast<std::size_t>(b)].t.size()) p.occupied[static_cast<std::size_t>(b)] = 0;
  }
  return p;
}

}  // namespace

bool equivalent_edge_sets(const VcMaxKernel& k, const EdgeCut& f1, const EdgeCut& f2) {
  auto a = profile(k, f1);
  auto b = profile(k, f2);
  return a.rest == b.rest && a.counts == b.counts && a.occupied == b.occupied;
}

bool touches_cliques(const VcMaxKernel& k, const EdgeCut& f) {
  return std::any_of(f.edges.begin(), f.edges.end(), [&](const Edge& e) {
    return k.in_clique[static_cast<std::size_t>(e.first)] || k.in_clique[static_cast<std::size_t>(e.second)];
  });
}

namespace {

// Marked members of T whose edges to T lie in f, or nullopt when some member is
// only partially cut.
std::optional<std::vector<Vertex>> cut_members(const VcMaxKernel& k, const EdgeCut& f, const VcMaxKernel::BadSet& b) {
  std::vector<Vertex> out;
  for (Vertex u : b.marked_members) {
    Vertex hu = k.from_g[static_cast<std::size_t>(u)];
    std::size_t c = 0;
    for (Vertex x : b.t)
      if (f.contains(make_edge(hu, k.from_g[static_cast<std::size_t>(x)]))) ++c;
    if (c == b.t.size()) out.push_back(u);
    else if (c != 0) return std::nullopt;
  }
  return out;
}

}  // namespace

std::optional<int> r_suitability(const VcMaxKernel& k, const EdgeCut& f, std::size_t bad_index) {
  const auto& b = k.bad.at(bad_index);
  auto p = cut_members(k, f, b);
  if (!p || p->empty()) return std::nullopt;
  std::vector<int> sizes;
  for (Vertex u : *p) sizes.push_back(k.clique_size[static_cast<std::size_t>(u)]);
  if (!detail::sizes_are_consecutive(sizes, k.d)) return std::nullopt;
  return static_cast<int>(p->size());
}

void enum_equivalent_max(const VcMaxKernel& k, const EdgeCut& f, const CutSink& sink, StreamStats* stats) {
  if (touches_cliques(k, f)) throw InvariantViolation("kernel cut contains an edge of a pendant clique");
  Emitter out(sink, stats);
  if (f.empty() || k.bad.empty()) {
    out.node();
    out.emit(translate(f, k.to_g));
    return;
  }
  EdgeCut fg = translate(f, k.to_g);
  std::vector<detail::Choice> choices;
  std::vector<char> replaced(k.bad.size(), 0);
  for (std::size_t i = 0; i < k.bad.size(); ++i) {
    auto r = r_suitability(k, f, i);
    if (!r) continue;
    replaced[i] = 1;
    const auto& b = k.bad[i];
    choices.push_back({&b.members, &b.marked_members, &b.t, *cut_members(k, f, b)});
  }
  std::vector<Edge> base;
  for (const auto& e : fg.edges) {
    int b = owner(k, e);
    if (b < 0 || !replaced[static_cast<std::size_t>(b)]) base.push_back(e);
  }
  detail::EqvEnumerator(std::move(base), std::move(choices), out).run();
}

}  // namespace dcut
