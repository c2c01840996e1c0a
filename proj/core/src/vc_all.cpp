#include "dcut/vc_all.hpp"

#include <algorithm>

#include "dcut/oracle.hpp"

namespace dcut {

std::size_t vc_all_size_bound(std::size_t s, int d) {
  const std::size_t dd = static_cast<std::size_t>(d);
  return s + (2 * dd + 1) * (s * (s > 0 ? s - 1 : 0) / 2) + s + 1;
}

namespace {

void make_identity(VcAllKernel& k, const Graph& g) {
  k.h = g;
  k.to_g.resize(static_cast<std::size_t>(g.n()));
  k.from_g.resize(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) k.to_g[static_cast<std::size_t>(v)] = k.from_g[static_cast<std::size_t>(v)] = v;
  k.outside_low.clear();
}

}  // namespace

VcAllKernel kernelize_vc_all(const Graph& g, const VertexCoverWitness& s, int d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  require_cover(g, s.cover);
  VcAllKernel k;
  k.g = std::make_shared<const Graph>(g);
  k.cover = s.cover;
  std::sort(k.cover.begin(), k.cover.end());
  k.d = d;
  const std::size_t n = static_cast<std::size_t>(g.n());
  std::vector<char> in_cover(n, 0), in_z(n, 0);
  for (Vertex x : k.cover) in_cover[static_cast<std::size_t>(x)] = 1;

  // An edgeless graph needs two isolated vertices to keep its empty cut.
  std::size_t isolated_quota = k.cover.empty() ? 2 : 1;
  for (Vertex v = 0; v < g.n() && isolated_quota > 0; ++v)
    if (g.degree(v) == 0) {
      in_z[static_cast<std::size_t>(v)] = 1;
      --isolated_quota;
    }
  for (Vertex x : k.cover)
    for (Vertex v : g.neighbors(x))
      if (!in_cover[static_cast<std::size_t>(v)] && g.degree(v) == 1) {
        in_z[static_cast<std::size_t>(v)] = 1;
        break;
      }
  const std::size_t quota = static_cast<std::size_t>(2 * d + 1);
  for (std::size_t i = 0; i < k.cover.size(); ++i)
    for (std::size_t j = i + 1; j < k.cover.size(); ++j) {
      const auto& a = g.neighbors(k.cover[i]);
      const auto& b = g.neighbors(k.cover[j]);
      std::size_t taken = 0;
      for (auto p = a.begin(), q = b.begin(); p != a.end() && q != b.end() && taken < quota;) {
        if (*p < *q) ++p;
        else if (*q < *p) ++q;
        else {
          if (!in_cover[static_cast<std::size_t>(*p)]) {
            in_z[static_cast<std::size_t>(*p)] = 1;
            ++taken;
          }
          ++p;
          ++q;
        }
      }
    }

  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (in_cover[static_cast<std::size_t>(v)] || in_z[static_cast<std::size_t>(v)]) keep.push_back(v);
    if (!in_cover[static_cast<std::size_t>(v)]) {
      if (in_z[static_cast<std::size_t>(v)]) k.marked.push_back(v);
      else if (g.degree(v) >= 1 && g.degree(v) <= d) k.outside_low.push_back(v);
    }
  }
  auto sub = induced_subgraph(g, keep);
  k.h = std::move(sub.graph);
  k.to_g = std::move(sub.to_parent);
  k.from_g = std::move(sub.from_parent);

  if (!k.outside_low.empty() && !has_d_cut(k.h, d)) {
    k.identity_fallback = true;
    k.warning = "kernel has no d-cut while the input has a cut with a side outside the kernel; using the identity kernel";
    make_identity(k, g);
  }
  return k;
}

LegalContext legal_context(const VcAllKernel& k, const EdgeCut& f) {
  auto side = realize_cut(k.h, f);
  if (!side) throw std::invalid_argument("kernel edge set is not a cut of H");
  LegalContext ctx;
  ctx.f = f;
  ctx.h_side = std::move(*side);
  for (Vertex x : k.cover) ctx.load[x] = 0;
  for (auto [u, v] : f.edges) {
    ++ctx.load[k.to_g[static_cast<std::size_t>(u)]];
    ++ctx.load[k.to_g[static_cast<std::size_t>(v)]];
  }
  const Graph& g = *k.g;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (k.from_g[static_cast<std::size_t>(u)] >= 0 || g.degree(u) == 0) continue;
    std::uint8_t first = ctx.h_side[static_cast<std::size_t>(k.from_g[static_cast<std::size_t>(g.neighbors(u).front())])];
    for (Vertex x : g.neighbors(u))
      if (ctx.h_side[static_cast<std::size_t>(k.from_g[static_cast<std::size_t>(x)])] != first)
        throw InvariantViolation("neighbourhood of a vertex outside the kernel is split by a kernel cut");
    (first == 0 ? ctx.j_a : ctx.j_b).push_back(u);
  }
  return ctx;
}

bool is_legal_pair(const VcAllKernel& k, const LegalContext& ctx, const std::vector<Vertex>& p,
                   const std::vector<Vertex>& q) {
  const Graph& g = *k.g;
  std::map<Vertex, int> load = ctx.load;
  auto visit = [&](const std::vector<Vertex>& movers, const std::vector<Vertex>& pool) {
    for (Vertex u : movers) {
      if (!std::binary_search(pool.begin(), pool.end(), u)) return false;
      if (g.degree(u) > k.d) return false;
      for (Vertex x : g.neighbors(u))
        if (++load[x] > k.d) return false;
    }
    return true;
  };
  return visit(p, ctx.j_b) && visit(q, ctx.j_a);
}

namespace {

// Subsets M of candidates in ascending order, each emitted as base + stars(M)
// while every cover vertex keeps at most d crossing edges.
class StarExtender {
 public:
  StarExtender(const Graph& g, int d, std::vector<Vertex> candidates, std::map<Vertex, int> load, Emitter& out)
      : g_(g), d_(d), candidates_(std::move(candidates)), load_(std::move(load)), out_(out) {}

  void run(const std::vector<Edge>& base, bool emit_root) {
    edges_ = base;
    if (emit_root) {
      out_.node();
      if (!out_.emit(EdgeCut(edges_))) return;
    }
    descend(0);
  }

 private:
  bool fits(Vertex u) const {
    for (Vertex x : g_.neighbors(u)) {
      auto it = load_.find(x);
      if ((it == load_.end() ? 0 : it->second) + 1 > d_) return false;
    }
    return true;
  }

  void descend(std::size_t start) {
    for (std::size_t i = start; i < candidates_.size() && !out_.stopped(); ++i) {
      Vertex u = candidates_[i];
      if (!fits(u)) continue;
      out_.node();
      for (Vertex x : g_.neighbors(u)) {
        ++load_[x];
        edges_.push_back(make_edge(u, x));
      }
      if (!out_.emit(EdgeCut(edges_))) return;
      descend(i + 1);
      for (Vertex x : g_.neighbors(u)) {
        --load_[x];
        edges_.pop_back();
      }
    }
  }

  const Graph& g_;
  int d_;
  std::vector<Vertex> candidates_;
  std::map<Vertex, int> load_;
  Emitter& out_;
  std::vector<Edge> edges_;
};

}  // namespace

void enum_legal_extensions(const VcAllKernel& k, const EdgeCut& f, const CutSink& sink, StreamStats* stats) {
  auto ctx = legal_context(k, f);
  std::vector<Vertex> movers;
  std::merge(ctx.j_a.begin(), ctx.j_a.end(), ctx.j_b.begin(), ctx.j_b.end(), std::back_inserter(movers));
  std::erase_if(movers, [&](Vertex u) { return k.g->degree(u) > k.d; });
  Emitter out(sink, stats);
  StarExtender(*k.g, k.d, std::move(movers), ctx.load, out).run(translate(f, k.to_g).edges, true);
}

void lift_vc_all(const VcAllKernel& k, const EdgeCut& f, bool is_canonical, const CutSink& sink, StreamStats* stats) {
  bool more = true;
  CutSink gate = [&](const EdgeCut& c) { return more = sink(c); };
  enum_legal_extensions(k, f, gate, stats);
  if (!more || !is_canonical || !is_connected(k.h) || k.outside_low.empty()) return;
  Emitter out(sink, stats);
  StarExtender(*k.g, k.d, k.outside_low, {}, out).run({}, false);
}

}  // namespace dcut
