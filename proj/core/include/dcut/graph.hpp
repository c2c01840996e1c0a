#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dcut {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A proven structural guarantee failed at runtime; always indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

  // Self-loops and out-of-range endpoints throw std::invalid_argument;
  // duplicate edges are collapsed.
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  std::size_t m() const { return m_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

// Canonical edge cut: sorted, duplicate-free (min,max) pairs.
struct EdgeCut {
  std::vector<Edge> edges;

  EdgeCut() = default;
  explicit EdgeCut(std::vector<Edge> e);

  bool empty() const { return edges.empty(); }
  std::size_t size() const { return edges.size(); }
  bool contains(const Edge& e) const;
  bool is_subset_of(const EdgeCut& other) const;

  friend bool operator==(const EdgeCut&, const EdgeCut&) = default;
  friend auto operator<=>(const EdgeCut&, const EdgeCut&) = default;
};

struct EdgeCutHash {
  std::size_t operator()(const EdgeCut& c) const;
};

struct Bipartition {
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
};

Graph load_graph(std::string_view text);
Graph load_graph_file(const std::string& path);
std::string serialize(const Graph& g);

// Adds r fresh vertices forming a clique, each also adjacent to anchor.
// Returns the new graph and the ids of the clique vertices.
std::pair<Graph, std::vector<Vertex>> attach_pendant_clique(const Graph& g, Vertex anchor, int r);

EdgeCut edge_cut_of(const Graph& g, const Bipartition& p);
// side[v] != 0 marks membership of the second side.
EdgeCut edge_cut_of_sides(const Graph& g, const std::vector<std::uint8_t>& side);

// id_map[new] = old; keep is deduplicated and sorted first.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
  std::vector<Vertex> from_parent;  // -1 where the vertex was dropped
};
InducedSubgraph induced_subgraph(const Graph& g, std::vector<Vertex> keep);

std::vector<int> component_labels(const Graph& g, int* count = nullptr);
bool is_connected(const Graph& g);

// Relabels a cut through a vertex map; edges with an unmapped endpoint throw.
EdgeCut translate(const EdgeCut& f, const std::vector<Vertex>& map);

EdgeCut star(const Graph& g, Vertex u);
EdgeCut cut_union(const EdgeCut& a, const EdgeCut& b);

std::string to_json(const EdgeCut& f);
std::ostream& operator<<(std::ostream& os, const EdgeCut& f);

}  // namespace dcut
