#include "dcut/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace dcut {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::vector<std::vector<Vertex>> components(const Graph& g) {
  int c = 0;
  auto label = component_labels(g, &c);
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(c));
  for (Vertex v = 0; v < g.n(); ++v) out[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])].push_back(v);
  return out;
}

// Every d-cut of g restricted to a component is empty or a d-cut of that
// component, so the cut family is a product over components.
CutSet combine_components(const std::vector<CutSet>& per_component, bool connected) {
  if (connected) return per_component.empty() ? CutSet{} : per_component.front();
  std::vector<EdgeCut> acc{EdgeCut{}};
  for (const auto& cuts : per_component) {
    std::vector<EdgeCut> next;
    next.reserve(acc.size() * (cuts.size() + 1));
    for (const auto& a : acc) {
      next.push_back(a);
      for (const auto& c : cuts) next.push_back(cut_union(a, c));
    }
    acc = std::move(next);
  }
  return CutSet(acc.begin(), acc.end());
}

void check_d(int d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
}

}  // namespace

std::optional<std::vector<std::uint8_t>> realize_cut(const Graph& g, const EdgeCut& f) {
  UnionFind uf(g.n());
  for (auto e : g.edges())
    if (!f.contains(e)) uf.unite(e.first, e.second);
  std::vector<std::vector<int>> across(static_cast<std::size_t>(g.n()));
  for (auto [u, v] : f.edges) {
    if (!g.has_edge(u, v))
      throw std::invalid_argument("not an edge: " + std::to_string(u) + " " + std::to_string(v));
    int a = uf.find(u), b = uf.find(v);
    if (a == b) return std::nullopt;
    across[static_cast<std::size_t>(a)].push_back(b);
    across[static_cast<std::size_t>(b)].push_back(a);
  }
  // Colour the component graph; with f empty, split off the first component.
  std::vector<int> colour(static_cast<std::size_t>(g.n()), -1);
  bool split = false;
  for (Vertex v = 0; v < g.n(); ++v) {
    int root = uf.find(v);
    if (colour[static_cast<std::size_t>(root)] >= 0) continue;
    int start = (f.empty() && root != uf.find(0)) ? 1 : 0;
    colour[static_cast<std::size_t>(root)] = start;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : across[static_cast<std::size_t>(x)]) {
        if (colour[static_cast<std::size_t>(y)] < 0) {
          colour[static_cast<std::size_t>(y)] = 1 - colour[static_cast<std::size_t>(x)];
          stack.push_back(y);
        } else if (colour[static_cast<std::size_t>(y)] == colour[static_cast<std::size_t>(x)]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<std::uint8_t> side(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) {
    side[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(colour[static_cast<std::size_t>(uf.find(v))]);
    split = split || side[static_cast<std::size_t>(v)] != side[0];
  }
  if (!split) return std::nullopt;
  return side;
}

bool is_d_cut(const Graph& g, int d, const EdgeCut& f) {
  check_d(d);
  std::vector<int> load(static_cast<std::size_t>(g.n()), 0);
  for (auto [u, v] : f.edges) {
    if (!g.has_edge(u, v))
      throw std::invalid_argument("not an edge: " + std::to_string(u) + " " + std::to_string(v));
    if (++load[static_cast<std::size_t>(u)] > d || ++load[static_cast<std::size_t>(v)] > d) return false;
  }
  return realize_cut(g, f).has_value();
}

CutSet enumerate_all_bruteforce(const Graph& g, int d, int limit) {
  check_d(d);
  auto comps = components(g);
  for (const auto& c : comps)
    if (static_cast<int>(c.size()) > limit)
      throw OracleLimitError("component of " + std::to_string(c.size()) + " vertices exceeds oracle limit " +
                             std::to_string(limit));
  std::vector<CutSet> per;
  std::vector<std::uint8_t> side(static_cast<std::size_t>(g.n()), 0);
  std::vector<int> load(static_cast<std::size_t>(g.n()), 0);
  for (const auto& c : comps) {
    CutSet cuts;
    const std::size_t k = c.size();
    if (k >= 2) {
      const std::uint64_t total = std::uint64_t{1} << (k - 1);
      for (std::uint64_t mask = 1; mask < total; ++mask) {
        for (std::size_t i = 0; i < k; ++i) side[static_cast<std::size_t>(c[i])] = i > 0 && ((mask >> (i - 1)) & 1U);
        bool ok = true;
        for (Vertex u : c) load[static_cast<std::size_t>(u)] = 0;
        std::vector<Edge> cut;
        for (Vertex u : c) {
          for (Vertex v : g.neighbors(u))
            if (u < v && side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)]) {
              cut.emplace_back(u, v);
              if (++load[static_cast<std::size_t>(u)] > d || ++load[static_cast<std::size_t>(v)] > d) ok = false;
            }
          if (!ok) break;
        }
        if (ok) cuts.insert(EdgeCut(std::move(cut)));
      }
    }
    per.push_back(std::move(cuts));
  }
  return combine_components(per, comps.size() <= 1);
}

CutSet filter_minimal(const CutSet& cuts) {
  std::vector<const EdgeCut*> by_size;
  for (const auto& c : cuts) by_size.push_back(&c);
  std::stable_sort(by_size.begin(), by_size.end(), [](auto* a, auto* b) { return a->size() < b->size(); });
  CutSet out;
  std::vector<const EdgeCut*> kept;
  for (auto* c : by_size) {
    bool minimal = std::none_of(kept.begin(), kept.end(),
                                [&](auto* k) { return k->size() < c->size() && k->is_subset_of(*c); });
    if (minimal) {
      kept.push_back(c);
      out.insert(*c);
    }
  }
  return out;
}

CutSet filter_maximal(const CutSet& cuts) {
  std::vector<const EdgeCut*> by_size;
  for (const auto& c : cuts) by_size.push_back(&c);
  std::stable_sort(by_size.begin(), by_size.end(), [](auto* a, auto* b) { return a->size() > b->size(); });
  CutSet out;
  std::vector<const EdgeCut*> kept;
  for (auto* c : by_size) {
    bool maximal = std::none_of(kept.begin(), kept.end(),
                                [&](auto* k) { return k->size() > c->size() && c->is_subset_of(*k); });
    if (maximal) {
      kept.push_back(c);
      out.insert(*c);
    }
  }
  return out;
}

MonoPartition monochromatic_partition(const Graph& g, int d, const std::vector<std::vector<Vertex>>& cliques) {
  check_d(d);
  const int n = g.n();
  const std::size_t big = static_cast<std::size_t>(2 * d + 1);
  UnionFind uf(n);
  auto merge_all = [&](const std::vector<Vertex>& xs) {
    for (std::size_t i = 1; i < xs.size(); ++i) uf.unite(xs[0], xs[i]);
  };
  for (const auto& c : cliques) {
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (!g.has_edge(c[i], c[j])) throw std::invalid_argument("seed set is not a clique");
    if (c.size() >= big) merge_all(c);
  }
  for (auto [u, v] : g.edges()) {
    std::vector<Vertex> common;
    std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(), g.neighbors(v).begin(),
                          g.neighbors(v).end(), std::back_inserter(common));
    if (common.size() + 2 < big) continue;
    std::vector<Vertex> clique{u, v};
    for (Vertex w : common)
      if (std::all_of(clique.begin() + 2, clique.end(), [&](Vertex x) { return g.has_edge(w, x); }))
        clique.push_back(w);
    if (clique.size() >= big) merge_all(clique);
  }
  std::vector<Vertex> heavy;
  for (Vertex v = 0; v < n; ++v)
    if (static_cast<std::size_t>(g.degree(v)) >= big) heavy.push_back(v);
  for (std::size_t i = 0; i < heavy.size(); ++i)
    for (std::size_t j = i + 1; j < heavy.size(); ++j) {
      const auto& a = g.neighbors(heavy[i]);
      const auto& b = g.neighbors(heavy[j]);
      std::size_t common = 0;
      for (auto p = a.begin(), q = b.begin(); p != a.end() && q != b.end();) {
        if (*p < *q) ++p;
        else if (*q < *p) ++q;
        else { ++common; ++p; ++q; }
      }
      if (common >= big) uf.unite(heavy[i], heavy[j]);
    }
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      std::map<int, int> count;
      for (Vertex w : g.neighbors(v)) ++count[uf.find(w)];
      for (auto [root, c] : count)
        if (c > d && uf.find(v) != uf.find(root)) {
          uf.unite(v, root);
          changed = true;
        }
    }
  }
  MonoPartition out;
  out.block_of.assign(static_cast<std::size_t>(n), -1);
  std::map<int, int> index;
  for (Vertex v = 0; v < n; ++v) {
    int r = uf.find(v);
    auto [it, fresh] = index.emplace(r, static_cast<int>(out.blocks.size()));
    if (fresh) out.blocks.emplace_back();
    out.blocks[static_cast<std::size_t>(it->second)].push_back(v);
    out.block_of[static_cast<std::size_t>(v)] = it->second;
  }
  return out;
}

std::uint64_t count_maximal_family(int k, int m, int d) {
  check_d(d);
  if (k <= 2 * d) throw std::invalid_argument("clique of the family must exceed 2d vertices");
  if (m < 0) throw std::invalid_argument("negative leaf count");
  std::uint64_t binom = 1;
  for (int i = 1; i <= d; ++i) binom = binom * static_cast<std::uint64_t>(m - d + i) / static_cast<std::uint64_t>(i);
  if (m < d) binom = 0;
  std::uint64_t out = 1;
  for (int i = 0; i < k; ++i) {
    if (binom != 0 && out > UINT64_MAX / binom) throw std::overflow_error("family count overflows 64 bits");
    out *= binom;
  }
  return out;
}

namespace {

class BlockSearch {
 public:
  BlockSearch(const Graph& g, int d, const MonoPartition& mono, const std::vector<Vertex>& comp)
      : g_(g), d_(d), mono_(mono), side_(static_cast<std::size_t>(g.n()), -1), load_(static_cast<std::size_t>(g.n()), 0) {
    std::vector<char> seen(mono.blocks.size(), 0);
    int first = mono.block_of[static_cast<std::size_t>(comp.front())];
    order_.push_back(first);
    seen[static_cast<std::size_t>(first)] = 1;
    for (std::size_t i = 0; i < order_.size(); ++i)
      for (Vertex u : mono.blocks[static_cast<std::size_t>(order_[i])])
        for (Vertex w : g.neighbors(u)) {
          int b = mono.block_of[static_cast<std::size_t>(w)];
          if (!seen[static_cast<std::size_t>(b)]) {
            seen[static_cast<std::size_t>(b)] = 1;
            order_.push_back(b);
          }
        }
  }

  // Stops early once `stop_after` cuts are collected.
  CutSet run(std::size_t stop_after) {
    stop_after_ = stop_after;
    assign(0, 0, false);
    return std::move(found_);
  }

 private:
  bool place(int block, int s, std::vector<Vertex>& touched) {
    bool ok = true;
    for (Vertex u : mono_.blocks[static_cast<std::size_t>(block)]) side_[static_cast<std::size_t>(u)] = s;
    for (Vertex u : mono_.blocks[static_cast<std::size_t>(block)])
      for (Vertex w : g_.neighbors(u)) {
        int sw = side_[static_cast<std::size_t>(w)];
        if (sw >= 0 && sw != s) {
          touched.push_back(u);
          touched.push_back(w);
          if (++load_[static_cast<std::size_t>(u)] > d_) ok = false;
          if (++load_[static_cast<std::size_t>(w)] > d_) ok = false;
        }
      }
    return ok;
  }

  void unplace(int block, const std::vector<Vertex>& touched) {
    for (Vertex x : touched) --load_[static_cast<std::size_t>(x)];
    for (Vertex u : mono_.blocks[static_cast<std::size_t>(block)]) side_[static_cast<std::size_t>(u)] = -1;
  }

  void assign(std::size_t i, int fixed_side, bool used_second) {
    if (found_.size() >= stop_after_) return;
    if (i == order_.size()) {
      if (!used_second) return;
      std::vector<Edge> cut;
      for (int b : order_)
        for (Vertex u : mono_.blocks[static_cast<std::size_t>(b)])
          for (Vertex w : g_.neighbors(u))
            if (u < w && side_[static_cast<std::size_t>(u)] != side_[static_cast<std::size_t>(w)]) cut.emplace_back(u, w);
      found_.insert(EdgeCut(std::move(cut)));
      return;
    }
    for (int s = 0; s < 2; ++s) {
      if (i == 0 && s != fixed_side) continue;
      std::vector<Vertex> touched;
      if (place(order_[i], s, touched)) assign(i + 1, fixed_side, used_second || s == 1);
      unplace(order_[i], touched);
    }
  }

  const Graph& g_;
  int d_;
  const MonoPartition& mono_;
  std::vector<int> order_;
  std::vector<int> side_;
  std::vector<int> load_;
  CutSet found_;
  std::size_t stop_after_ = 0;
};

CutSet search_impl(const Graph& g, int d, std::size_t stop_after) {
  auto mono = monochromatic_partition(g, d);
  auto comps = components(g);
  std::vector<CutSet> per;
  for (const auto& c : comps) {
    if (c.size() < 2) {
      per.emplace_back();
      continue;
    }
    BlockSearch search(g, d, mono, c);
    per.push_back(search.run(stop_after));
  }
  return combine_components(per, comps.size() <= 1);
}

}  // namespace

CutSet search_d_cuts(const Graph& g, int d, int limit) {
  check_d(d);
  if (g.n() > limit)
    throw OracleLimitError("graph of " + std::to_string(g.n()) + " vertices exceeds kernel limit " +
                           std::to_string(limit));
  return search_impl(g, d, SIZE_MAX);
}

bool has_d_cut(const Graph& g, int d) {
  check_d(d);
  if (!is_connected(g)) return true;
  return !search_impl(g, d, 1).empty();
}

}  // namespace dcut
