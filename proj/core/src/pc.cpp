#include "dcut/pc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "dcut/oracle.hpp"

namespace dcut {

double pc_block_bound(std::size_t blocks, int d) {
  double total = 0;
  for (int i = 1; i <= d + 1; ++i) {
    double binom = 1;
    for (int j = 0; j < i; ++j) binom = binom * (static_cast<double>(blocks) - j) / (j + 1);
    total += d * std::max(binom, 0.0);
  }
  return total + 2 * d + 1;
}

CliquePartitionWitness split_small_cliques(const Graph& g, const CliquePartitionWitness& cp, int d) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& b : cp.cliques) {
    if (static_cast<int>(b.size()) <= 2 * d)
      for (Vertex v : b) out.push_back({v});
    else
      out.push_back(b);
  }
  return validate_clique_partition(g, std::move(out));
}

MergeResult merge_cliques(const Graph& g, const std::vector<std::vector<Vertex>>& blocks, int d) {
  std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(g.n()));
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)].insert(v);
    adj[static_cast<std::size_t>(v)].insert(u);
  }
  std::vector<std::vector<Vertex>> cur = blocks;
  std::vector<Edge> added;
  auto heavy = [&](const std::vector<Vertex>& from, const std::vector<Vertex>& into) {
    for (Vertex u : from) {
      int c = 0;
      for (Vertex v : into)
        if (adj[static_cast<std::size_t>(u)].count(v)) ++c;
      if (c > d) return true;
    }
    return false;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < cur.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < cur.size() && !changed; ++j) {
        if (!heavy(cur[i], cur[j]) && !heavy(cur[j], cur[i])) continue;
        for (Vertex u : cur[i])
          for (Vertex v : cur[j])
            if (adj[static_cast<std::size_t>(u)].insert(v).second) {
              adj[static_cast<std::size_t>(v)].insert(u);
              added.push_back(make_edge(u, v));
            }
        cur[i].insert(cur[i].end(), cur[j].begin(), cur[j].end());
        std::sort(cur[i].begin(), cur[i].end());
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      }
  }
  std::vector<Edge> all = g.edges();
  all.insert(all.end(), added.begin(), added.end());
  return {Graph::from_edges(g.n(), all), std::move(cur), EdgeCut(std::move(added))};
}

namespace {

using Config = std::pair<int, std::vector<int>>;  // (own block, neighbour blocks)

// Neighbour-block sets D of u whose total exceeds d while D minus its largest
// member stays within d; each lists only blocks u actually touches.
void exceeding_sets(const std::map<int, int>& counts, int d, const std::function<void(std::vector<int>)>& fn) {
  std::vector<std::pair<int, int>> items(counts.begin(), counts.end());
  std::vector<int> rest;
  std::function<void(std::size_t, int)> grow = [&](std::size_t start, int sum) {
    // rest has total sum <= d; close it with a block at least as heavy as any in rest.
    int heaviest = 0;
    for (int b : rest) heaviest = std::max(heaviest, counts.at(b));
    for (const auto& [b, c] : items) {
      if (std::find(rest.begin(), rest.end(), b) != rest.end()) continue;
      if (c < heaviest || sum + c <= d) continue;
      // Ties are emitted once: the closing block must be last among equal-count blocks.
      bool tie_before = std::any_of(rest.begin(), rest.end(), [&](int r) { return counts.at(r) == c && r > b; });
      if (tie_before) continue;
      std::vector<int> set = rest;
      set.push_back(b);
      std::sort(set.begin(), set.end());
      fn(std::move(set));
    }
    for (std::size_t i = start; i < items.size(); ++i) {
      if (sum + items[i].second > d) continue;
      rest.push_back(items[i].first);
      grow(i + 1, sum + items[i].second);
      rest.pop_back();
    }
  };
  grow(0, 0);
}

}  // namespace

PcKernel mark_cp_and_trim(const Graph& g, const MergeResult& merged, int d, MarkScope scope) {
  PcKernel k;
  k.g = std::make_shared<const Graph>(g);
  k.g1 = merged.g1;
  k.c1 = merged.blocks;
  k.added_edges = merged.added_edges;
  k.d = d;
  const Graph& g1 = k.g1;
  const std::size_t n = static_cast<std::size_t>(g1.n());
  k.block_of_g1.assign(n, -1);
  for (std::size_t i = 0; i < k.c1.size(); ++i)
    for (Vertex v : k.c1[i]) k.block_of_g1[static_cast<std::size_t>(v)] = static_cast<int>(i);
  auto large = [&](int b) { return static_cast<int>(k.c1[static_cast<std::size_t>(b)].size()) >= 2 * d + 1; };
  const bool any_large = std::any_of(k.c1.begin(), k.c1.end(), [&](const auto& b) { return static_cast<int>(b.size()) >= 2 * d + 1; });

  std::vector<char> marked(n, 0);
  std::set<Config> witnessed;
  for (Vertex u = 0; any_large && u < g1.n(); ++u) {
    const int own = k.block_of_g1[static_cast<std::size_t>(u)];
    std::map<int, int> counts;
    int outside = 0;
    for (Vertex v : g1.neighbors(u)) {
      int b = k.block_of_g1[static_cast<std::size_t>(v)];
      if (b == own) continue;
      ++outside;
      if (scope == MarkScope::all_blocks || large(b)) ++counts[b];
    }
    if (counts.empty()) continue;
    auto claim = [&](std::vector<int> blocks) {
      if (!large(own) && std::none_of(blocks.begin(), blocks.end(), large)) return;
      if (!witnessed.insert({own, blocks}).second) return;
      marked[static_cast<std::size_t>(u)] = 1;
      for (Vertex v : g1.neighbors(u))
        if (std::binary_search(blocks.begin(), blocks.end(), k.block_of_g1[static_cast<std::size_t>(v)]))
          marked[static_cast<std::size_t>(v)] = 1;
    };
    if (outside <= d) {
      if (scope == MarkScope::large_blocks && static_cast<int>(counts.size()) != 0) {
        int in_large = 0;
        for (auto [b, c] : counts) in_large += c;
        if (in_large != outside) continue;
      }
      std::vector<int> blocks;
      for (auto [b, c] : counts) blocks.push_back(b);
      claim(std::move(blocks));
    } else {
      exceeding_sets(counts, d, claim);
    }
  }
  for (Vertex v = 0; v < g1.n(); ++v)
    if (marked[static_cast<std::size_t>(v)]) k.marked.push_back(v);

  std::vector<char> removed(n, 0);
  for (const auto& block : k.c1) {
    if (static_cast<int>(block.size()) < 2 * d + 1) continue;
    std::size_t budget = block.size() - static_cast<std::size_t>(2 * d + 1);
    for (Vertex v : block) {
      if (budget == 0) break;
      if (!marked[static_cast<std::size_t>(v)]) {
        removed[static_cast<std::size_t>(v)] = 1;
        --budget;
      }
    }
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g1.n(); ++v)
    if (!removed[static_cast<std::size_t>(v)]) keep.push_back(v);
  auto sub = induced_subgraph(g1, keep);
  k.gprime = std::move(sub.graph);
  k.to_g1 = std::move(sub.to_parent);
  k.cprime.resize(k.c1.size());
  for (std::size_t i = 0; i < k.c1.size(); ++i)
    for (Vertex v : k.c1[i])
      if (sub.from_parent[static_cast<std::size_t>(v)] >= 0) k.cprime[i].push_back(sub.from_parent[static_cast<std::size_t>(v)]);
  return k;
}

PcKernel kernelize_pc(const Graph& g, const CliquePartitionWitness& cp, int d, MarkScope scope) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  auto valid = validate_clique_partition(g, cp.cliques);
  auto split = split_small_cliques(g, valid, d);
  return mark_cp_and_trim(g, merge_cliques(g, split.cliques, d), d, scope);
}

EdgeCut lift_pc(const PcKernel& k, const EdgeCut& f) {
  auto side = realize_cut(k.gprime, f);
  if (!side) throw InvariantViolation("kernel edge set is not a cut of G'");
  std::vector<int> block_side(k.c1.size(), -1);
  for (std::size_t i = 0; i < k.cprime.size(); ++i)
    for (Vertex v : k.cprime[i]) {
      int s = (*side)[static_cast<std::size_t>(v)];
      if (block_side[i] >= 0 && block_side[i] != s) throw InvariantViolation("kernel cut splits a block of G'");
      block_side[i] = s;
    }
  std::vector<std::uint8_t> g1_side(static_cast<std::size_t>(k.g1.n()));
  for (Vertex v = 0; v < k.g1.n(); ++v)
    g1_side[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(block_side[static_cast<std::size_t>(k.block_of_g1[static_cast<std::size_t>(v)])]);
  EdgeCut lifted = edge_cut_of_sides(k.g1, g1_side);
  for (const auto& e : k.added_edges.edges)
    if (lifted.contains(e)) throw InvariantViolation("a Rule 2 edge crosses a lifted cut");
  return lifted;
}

}  // namespace dcut
