#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dcut/graph.hpp"

namespace dcut {

// Clique on k vertices 0..k-1; clique vertex i owns leaves k+i*m .. k+i*m+m-1.
Graph star_forest(int k, int m);
// Disjoint union of the inputs plus a fresh 2d-clique joined to vertex 0 of each input.
Graph compose(const std::vector<Graph>& graphs, int d);
// Erdős–Rényi G(n,p); identical output for identical seeds on every platform.
Graph random_graph(int n, double p, std::uint64_t seed);
Graph path_graph(int n);
Graph clique_graph(int n);
// K_{1,n}: centre 0 and leaves 1..n.
Graph star_graph(int n);

// Calls fn on every connected labelled graph on n vertices; fn returns false to stop.
void for_each_connected_graph(int n, const std::function<bool(const Graph&)>& fn);

}  // namespace dcut

namespace dcut {

struct NamedGraph {
  std::string name;
  Graph graph;
};

// Every connected labelled graph on 1..exhaustive_n vertices followed by
// random_count seeded G(n,p) instances on 7 or 8 vertices.
std::vector<NamedGraph> verification_corpus(int exhaustive_n, int random_count, std::uint64_t seed);

// A random core on `core` vertices plus `extra` vertices, each adjacent to one
// of a few random core subsets, so that twins and pendant bundles are common.
Graph random_bundle(int core, int extra, std::uint64_t seed);
// k disjoint cliques of sizes in [1, max_size] joined by sparse random edges.
Graph random_clique_cluster(int k, int max_size, double p, std::uint64_t seed);
// Seeded bundles and clique clusters on at most max_n vertices, in which the
// kernels actually discard vertices.
std::vector<NamedGraph> structured_corpus(int count, int max_n, std::uint64_t seed);

}  // namespace dcut
