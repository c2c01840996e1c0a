#include "dcut/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dcut {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  std::size_t total = 0;
  for (auto& row : g.adj_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    total += row.size();
  }
  g.m_ = total / 2;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
  const auto& a = neighbors(u).size() <= neighbors(v).size() ? neighbors(u) : neighbors(v);
  Vertex other = &a == &neighbors(u) ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

EdgeCut::EdgeCut(std::vector<Edge> e) : edges(std::move(e)) {
  for (auto& p : edges) p = make_edge(p.first, p.second);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool EdgeCut::contains(const Edge& e) const {
  return std::binary_search(edges.begin(), edges.end(), make_edge(e.first, e.second));
}

bool EdgeCut::is_subset_of(const EdgeCut& other) const {
  return std::includes(other.edges.begin(), other.edges.end(), edges.begin(), edges.end());
}

std::size_t EdgeCutHash::operator()(const EdgeCut& c) const {
  std::size_t h = c.edges.size();
  for (auto [u, v] : c.edges) {
    std::size_t x = (static_cast<std::size_t>(u) << 32) ^ static_cast<std::size_t>(v);
    h ^= std::hash<std::size_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

bool is_blank_or_comment(std::string_view line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '#';
}

bool parse_two(std::string_view line, long long& a, long long& b) {
  std::istringstream in{std::string(line)};
  std::string rest;
  if (!(in >> a >> b)) return false;
  return !(in >> rest);
}

}  // namespace

Graph load_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Edge> edges;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (is_blank_or_comment(line)) {
      if (end == text.size()) break;
      continue;
    }
    long long a = 0, b = 0;
    if (!parse_two(line, a, b)) throw ParseError(line_no, "expected two integers");
    if (!have_header) {
      if (a < 0 || b < 0) throw ParseError(line_no, "negative count in header");
      n = a;
      m = b;
      have_header = true;
    } else {
      if (static_cast<long long>(edges.size()) >= m) throw ParseError(line_no, "more edge lines than declared");
      if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError(line_no, "vertex id out of range");
      if (a == b) throw ParseError(line_no, "self-loop");
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "missing header line");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(line_no, "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_graph(buf.str());
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::pair<Graph, std::vector<Vertex>> attach_pendant_clique(const Graph& g, Vertex anchor, int r) {
  if (anchor < 0 || anchor >= g.n()) throw std::invalid_argument("anchor out of range");
  if (r < 1) throw std::invalid_argument("clique size must be positive");
  auto edges = g.edges();
  std::vector<Vertex> clique(static_cast<std::size_t>(r));
  std::iota(clique.begin(), clique.end(), g.n());
  for (std::size_t i = 0; i < clique.size(); ++i) {
    edges.emplace_back(anchor, clique[i]);
    for (std::size_t j = i + 1; j < clique.size(); ++j) edges.emplace_back(clique[i], clique[j]);
  }
  return {Graph::from_edges(g.n() + r, edges), clique};
}

EdgeCut edge_cut_of_sides(const Graph& g, const std::vector<std::uint8_t>& side) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v && side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)]) out.emplace_back(u, v);
  EdgeCut f;
  f.edges = std::move(out);
  return f;
}

EdgeCut edge_cut_of(const Graph& g, const Bipartition& p) {
  std::vector<std::uint8_t> side(static_cast<std::size_t>(g.n()), 2);
  for (Vertex v : p.side_a) side.at(static_cast<std::size_t>(v)) = 0;
  for (Vertex v : p.side_b) {
    if (side.at(static_cast<std::size_t>(v)) == 0) throw std::invalid_argument("sides overlap");
    side[static_cast<std::size_t>(v)] = 1;
  }
  if (p.side_a.empty() || p.side_b.empty()) throw std::invalid_argument("bipartition side is empty");
  if (std::find(side.begin(), side.end(), 2) != side.end()) throw std::invalid_argument("sides do not cover V(G)");
  return edge_cut_of_sides(g, side);
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<Vertex> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  InducedSubgraph out;
  out.from_parent.assign(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= g.n()) throw std::invalid_argument("vertex out of range");
    out.from_parent[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex u : keep)
    for (Vertex v : g.neighbors(u)) {
      Vertex nv = out.from_parent[static_cast<std::size_t>(v)];
      Vertex nu = out.from_parent[static_cast<std::size_t>(u)];
      if (nv >= 0 && nu < nv) edges.emplace_back(nu, nv);
    }
  out.graph = Graph::from_edges(static_cast<int>(keep.size()), edges);
  out.to_parent = std::move(keep);
  return out;
}

std::vector<int> component_labels(const Graph& g, int* count) {
  std::vector<int> label(static_cast<std::size_t>(g.n()), -1);
  int c = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    label[static_cast<std::size_t>(s)] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u))
        if (label[static_cast<std::size_t>(v)] < 0) {
          label[static_cast<std::size_t>(v)] = c;
          stack.push_back(v);
        }
    }
    ++c;
  }
  if (count) *count = c;
  return label;
}

bool is_connected(const Graph& g) {
  int c = 0;
  component_labels(g, &c);
  return c <= 1;
}

EdgeCut translate(const EdgeCut& f, const std::vector<Vertex>& map) {
  std::vector<Edge> out;
  out.reserve(f.size());
  for (auto [u, v] : f.edges) {
    Vertex a = map.at(static_cast<std::size_t>(u));
    Vertex b = map.at(static_cast<std::size_t>(v));
    if (a < 0 || b < 0) throw std::invalid_argument("edge endpoint has no image under the vertex map");
    out.emplace_back(a, b);
  }
  return EdgeCut(std::move(out));
}

EdgeCut star(const Graph& g, Vertex u) {
  std::vector<Edge> out;
  for (Vertex v : g.neighbors(u)) out.push_back(make_edge(u, v));
  return EdgeCut(std::move(out));
}

EdgeCut cut_union(const EdgeCut& a, const EdgeCut& b) {
  EdgeCut out;
  std::set_union(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(), std::back_inserter(out.edges));
  return out;
}

std::string to_json(const EdgeCut& f) {
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [u, v] : f.edges) pairs.push_back({u, v});
  return nlohmann::json{{"edges", pairs}}.dump();
}

std::ostream& operator<<(std::ostream& os, const EdgeCut& f) { return os << to_json(f); }

}  // namespace dcut
