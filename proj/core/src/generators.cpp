#include "dcut/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace dcut {

Graph star_forest(int k, int m) {
  if (k < 1 || m < 0) throw std::invalid_argument("star-forest needs k >= 1 and m >= 0");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m; ++j) edges.emplace_back(i, k + i * m + j);
  return Graph::from_edges(k + k * m, edges);
}

Graph compose(const std::vector<Graph>& graphs, int d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  std::vector<Edge> edges;
  std::vector<Vertex> chosen;
  int offset = 0;
  for (const auto& g : graphs) {
    if (g.n() == 0) throw std::invalid_argument("cannot compose an empty graph");
    for (auto [u, v] : g.edges()) edges.emplace_back(u + offset, v + offset);
    chosen.push_back(offset);
    offset += g.n();
  }
  for (int i = 0; i < 2 * d; ++i) {
    for (int j = i + 1; j < 2 * d; ++j) edges.emplace_back(offset + i, offset + j);
    for (Vertex c : chosen) edges.emplace_back(offset + i, c);
  }
  return Graph::from_edges(offset + 2 * d, edges);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0 || p < 0 || p > 1) throw std::invalid_argument("random graph needs n >= 0 and 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) edges.emplace_back(u, v);
    }
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  if (n < 0) throw std::invalid_argument("negative path length");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph clique_graph(int n) {
  if (n < 0) throw std::invalid_argument("negative clique size");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph star_graph(int n) {
  if (n < 0) throw std::invalid_argument("negative leaf count");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(n + 1, edges);
}

void for_each_connected_graph(int n, const std::function<bool(const Graph&)>& fn) {
  if (n < 1 || n > 8) throw std::invalid_argument("exhaustive graph listing supports 1..8 vertices");
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1U) edges.push_back(slots[i]);
    if (static_cast<int>(edges.size()) < n - 1) continue;
    Graph g = Graph::from_edges(n, edges);
    if (is_connected(g) && !fn(g)) return;
  }
}

std::vector<NamedGraph> verification_corpus(int exhaustive_n, int random_count, std::uint64_t seed) {
  std::vector<NamedGraph> out;
  for (int n = 1; n <= exhaustive_n; ++n) {
    int index = 0;
    for_each_connected_graph(n, [&](const Graph& g) {
      out.push_back({"connected-" + std::to_string(n) + "-" + std::to_string(index++), g});
      return true;
    });
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> density(0.15, 0.75);
  for (int i = 0; i < random_count; ++i) {
    const int n = 7 + static_cast<int>(rng() % 2);
    const double p = density(rng);
    const std::uint64_t graph_seed = rng();
    out.push_back({"random-" + std::to_string(n) + "-" + std::to_string(i), random_graph(n, p, graph_seed)});
  }
  return out;
}

Graph random_bundle(int core, int extra, std::uint64_t seed) {
  if (core < 1 || extra < 0) throw std::invalid_argument("bundle needs a nonempty core");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < core; ++u)
    for (int v = u + 1; v < core; ++v)
      if (rng() % 2) edges.emplace_back(u, v);
  const int pool_size = 1 + static_cast<int>(rng() % 3);
  std::vector<std::vector<Vertex>> pool;
  for (int i = 0; i < pool_size; ++i) {
    std::vector<Vertex> subset;
    for (int v = 0; v < core; ++v)
      if (rng() % 3 == 0) subset.push_back(v);
    if (subset.empty()) subset.push_back(static_cast<Vertex>(rng() % core));
    pool.push_back(subset);
  }
  for (int x = core; x < core + extra; ++x)
    for (Vertex v : pool[rng() % pool.size()]) edges.emplace_back(v, x);
  return Graph::from_edges(core + extra, edges);
}

Graph random_clique_cluster(int k, int max_size, double p, std::uint64_t seed) {
  if (k < 1 || max_size < 1) throw std::invalid_argument("cluster needs k >= 1 and max_size >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<int> owner;
  std::vector<Edge> edges;
  for (int c = 0; c < k; ++c) {
    const int size = 1 + static_cast<int>(rng() % max_size);
    const int first = static_cast<int>(owner.size());
    for (int i = 0; i < size; ++i) {
      for (int j = first; j < first + i; ++j) edges.emplace_back(j, first + i);
      owner.push_back(c);
    }
  }
  const int n = static_cast<int>(owner.size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (owner[u] != owner[v] && coin(rng) < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

std::vector<NamedGraph> structured_corpus(int count, int max_n, std::uint64_t seed) {
  if (max_n < 6) throw std::invalid_argument("structured corpus needs max_n >= 6");
  std::mt19937_64 rng(seed);
  std::vector<NamedGraph> out;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = rng();
    if (i % 2 == 0) {
      const int core = 2 + static_cast<int>(rng() % 3);
      const int extra = 3 + static_cast<int>(rng() % (max_n - core - 2));
      out.push_back({"bundle-" + std::to_string(i), random_bundle(core, extra, s)});
    } else {
      const int k = 2 + static_cast<int>(rng() % 3);
      const int size = std::max(1, std::min(7, max_n / k));
      const double p = 0.05 + 0.1 * static_cast<double>(rng() % 3);
      out.push_back({"cluster-" + std::to_string(i), random_clique_cluster(k, size, p, s)});
    }
  }
  return out;
}

}  // namespace dcut
