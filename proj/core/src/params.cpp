#include "dcut/params.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace dcut {

VertexCoverWitness approx_vertex_cover(const Graph& g) {
  std::vector<char> matched(static_cast<std::size_t>(g.n()), 0);
  VertexCoverWitness out;
  for (auto [u, v] : g.edges()) {
    if (matched[static_cast<std::size_t>(u)] || matched[static_cast<std::size_t>(v)]) continue;
    matched[static_cast<std::size_t>(u)] = matched[static_cast<std::size_t>(v)] = 1;
    out.cover.push_back(u);
    out.cover.push_back(v);
  }
  std::sort(out.cover.begin(), out.cover.end());
  return out;
}

VertexCoverWitness exact_vertex_cover(const Graph& g, int limit) {
  if (g.n() > limit) throw OracleLimitError("exact vertex cover refused above " + std::to_string(limit) + " vertices");
  const auto edges = g.edges();
  std::uint32_t best = (g.n() >= 32) ? ~0U : ((1U << g.n()) - 1);
  int best_size = g.n();
  for (std::uint32_t mask = 0; mask < (1U << g.n()); ++mask) {
    int size = __builtin_popcount(mask);
    if (size >= best_size) continue;
    bool covers = std::all_of(edges.begin(), edges.end(),
                              [&](const Edge& e) { return ((mask >> e.first) & 1U) || ((mask >> e.second) & 1U); });
    if (covers) {
      best = mask;
      best_size = size;
    }
  }
  VertexCoverWitness out;
  out.exact = true;
  for (Vertex v = 0; v < g.n(); ++v)
    if ((best >> v) & 1U) out.cover.push_back(v);
  return out;
}

void require_cover(const Graph& g, const std::vector<Vertex>& cover) {
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : cover) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("cover vertex out of range: " + std::to_string(v));
    in[static_cast<std::size_t>(v)] = 1;
  }
  for (auto [u, v] : g.edges())
    if (!in[static_cast<std::size_t>(u)] && !in[static_cast<std::size_t>(v)])
      throw std::invalid_argument("edge " + std::to_string(u) + " " + std::to_string(v) + " is not covered");
}

NeighborhoodDecomposition neighborhood_decomposition(const Graph& g) {
  // Open-neighbourhood classes are independent twins, closed ones are clique twins;
  // a vertex cannot have nontrivial twins of both kinds.
  std::map<std::vector<Vertex>, std::vector<Vertex>> open, closed;
  for (Vertex v = 0; v < g.n(); ++v) {
    open[g.neighbors(v)].push_back(v);
    auto c = g.neighbors(v);
    c.insert(std::lower_bound(c.begin(), c.end(), v), v);
    closed[c].push_back(v);
  }
  NeighborhoodDecomposition nd;
  nd.module_of.assign(static_cast<std::size_t>(g.n()), -1);
  std::vector<Module> found;
  for (auto& [_, members] : closed)
    if (members.size() >= 2) found.push_back({members, ModuleKind::clique});
  for (auto& [_, members] : open)
    if (members.size() >= 2) found.push_back({members, ModuleKind::independent});
  std::vector<char> covered(static_cast<std::size_t>(g.n()), 0);
  for (const auto& m : found)
    for (Vertex v : m.vertices) covered[static_cast<std::size_t>(v)] = 1;
  for (Vertex v = 0; v < g.n(); ++v)
    if (!covered[static_cast<std::size_t>(v)]) found.push_back({{v}, ModuleKind::independent});
  std::sort(found.begin(), found.end(),
            [](const Module& a, const Module& b) { return a.vertices.front() < b.vertices.front(); });
  for (std::size_t i = 0; i < found.size(); ++i)
    for (Vertex v : found[i].vertices) nd.module_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
  nd.modules = std::move(found);
  return nd;
}

void validate_decomposition(const Graph& g, const NeighborhoodDecomposition& nd) {
  if (nd.module_of.size() != static_cast<std::size_t>(g.n())) throw std::invalid_argument("module map has wrong size");
  std::vector<int> seen(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < nd.modules.size(); ++i) {
    const auto& m = nd.modules[i];
    if (m.vertices.empty()) throw std::invalid_argument("empty module");
    for (Vertex v : m.vertices) {
      if (v < 0 || v >= g.n() || seen[static_cast<std::size_t>(v)] >= 0)
        throw std::invalid_argument("modules do not partition the vertex set");
      seen[static_cast<std::size_t>(v)] = static_cast<int>(i);
      if (nd.module_of[static_cast<std::size_t>(v)] != static_cast<int>(i))
        throw std::invalid_argument("module map disagrees with module list");
    }
  }
  if (std::find(seen.begin(), seen.end(), -1) != seen.end())
    throw std::invalid_argument("modules do not cover the vertex set");
  for (const auto& m : nd.modules) {
    auto outside = [&](Vertex v) {
      std::vector<Vertex> out;
      for (Vertex w : g.neighbors(v))
        if (!std::binary_search(m.vertices.begin(), m.vertices.end(), w)) out.push_back(w);
      return out;
    };
    auto ref = outside(m.vertices.front());
    for (std::size_t i = 0; i < m.vertices.size(); ++i) {
      if (outside(m.vertices[i]) != ref) throw std::invalid_argument("module vertices differ outside the module");
      for (std::size_t j = i + 1; j < m.vertices.size(); ++j)
        if (g.has_edge(m.vertices[i], m.vertices[j]) != (m.kind == ModuleKind::clique))
          throw std::invalid_argument("module is neither the declared clique nor independent set");
    }
  }
}

CliquePartitionWitness validate_clique_partition(const Graph& g, std::vector<std::vector<Vertex>> blocks) {
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block in clique partition");
    std::sort(b.begin(), b.end());
    for (Vertex v : b) {
      if (v < 0 || v >= g.n()) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
      if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("vertex in two blocks: " + std::to_string(v));
      seen[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        if (!g.has_edge(b[i], b[j]))
          throw std::invalid_argument("block is not a clique: " + std::to_string(b[i]) + " and " +
                                      std::to_string(b[j]) + " are not adjacent");
  }
  for (Vertex v = 0; v < g.n(); ++v)
    if (!seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("vertex in no block: " + std::to_string(v));
  std::sort(blocks.begin(), blocks.end());
  return {std::move(blocks)};
}

std::vector<std::vector<Vertex>> load_partition(std::string_view text) {
  std::vector<std::vector<Vertex>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream row(line);
    std::vector<Vertex> block;
    std::string tok;
    while (row >> tok) {
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v < 0) throw ParseError(line_no, "bad vertex id '" + tok + "'");
      block.push_back(static_cast<Vertex>(v));
    }
    out.push_back(std::move(block));
  }
  return out;
}

std::vector<std::vector<Vertex>> load_partition_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_partition(buf.str());
}

std::string serialize_partition(const CliquePartitionWitness& cp) {
  std::ostringstream out;
  for (const auto& b : cp.cliques) {
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
    out << '\n';
  }
  return out.str();
}

CliquePartitionWitness greedy_clique_partition(const Graph& g) {
  std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
  std::vector<std::vector<Vertex>> blocks;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (used[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> block{s};
    used[static_cast<std::size_t>(s)] = 1;
    for (Vertex w : g.neighbors(s)) {
      if (used[static_cast<std::size_t>(w)]) continue;
      if (std::all_of(block.begin(), block.end(), [&](Vertex x) { return g.has_edge(w, x); })) {
        block.push_back(w);
        used[static_cast<std::size_t>(w)] = 1;
      }
    }
    blocks.push_back(std::move(block));
  }
  return validate_clique_partition(g, std::move(blocks));
}

namespace {

void partition_search(const Graph& g, Vertex v, std::vector<std::vector<Vertex>>& cur,
                      std::vector<std::vector<Vertex>>& best) {
  if (!best.empty() && cur.size() >= best.size()) return;
  if (v == g.n()) {
    best = cur;
    return;
  }
  for (std::size_t i = 0; i < cur.size(); ++i) {
    if (std::all_of(cur[i].begin(), cur[i].end(), [&](Vertex x) { return g.has_edge(v, x); })) {
      cur[i].push_back(v);
      partition_search(g, v + 1, cur, best);
      cur[i].pop_back();
    }
  }
  cur.push_back({v});
  partition_search(g, v + 1, cur, best);
  cur.pop_back();
}

}  // namespace

CliquePartitionWitness exact_clique_partition(const Graph& g, int limit) {
  if (g.n() > limit) throw OracleLimitError("exact clique partition refused above " + std::to_string(limit) + " vertices");
  std::vector<std::vector<Vertex>> cur, best;
  partition_search(g, 0, cur, best);
  return validate_clique_partition(g, std::move(best));
}

}  // namespace dcut
