#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dcut/graph.hpp"
#include "dcut/oracle.hpp"

namespace dcut {

struct VertexCoverWitness {
  std::vector<Vertex> cover;  // sorted
  bool exact = false;
};

// Both endpoints of a greedy maximal matching scanned in sorted edge order.
VertexCoverWitness approx_vertex_cover(const Graph& g);
// Minimum vertex cover by exhaustive search; refuses n > limit.
VertexCoverWitness exact_vertex_cover(const Graph& g, int limit = kDefaultOracleLimit);
// Throws std::invalid_argument naming an uncovered edge.
void require_cover(const Graph& g, const std::vector<Vertex>& cover);

enum class ModuleKind { clique, independent };

struct Module {
  std::vector<Vertex> vertices;  // sorted
  ModuleKind kind = ModuleKind::independent;
};

struct NeighborhoodDecomposition {
  std::vector<Module> modules;  // ordered by smallest member
  std::vector<int> module_of;
};

// Twin classes: u ~ v iff N(u) \ {v} = N(v) \ {u}. Singletons count as independent.
NeighborhoodDecomposition neighborhood_decomposition(const Graph& g);
void validate_decomposition(const Graph& g, const NeighborhoodDecomposition& nd);

struct CliquePartitionWitness {
  std::vector<std::vector<Vertex>> cliques;  // each sorted
};

CliquePartitionWitness validate_clique_partition(const Graph& g, std::vector<std::vector<Vertex>> blocks);
// One block per line, vertex ids separated by whitespace; '#' lines ignored.
std::vector<std::vector<Vertex>> load_partition(std::string_view text);
std::vector<std::vector<Vertex>> load_partition_file(const std::string& path);
std::string serialize_partition(const CliquePartitionWitness& cp);

// Repeatedly extracts a greedily grown clique from the lowest remaining vertex.
// Not a minimum partition in general.
CliquePartitionWitness greedy_clique_partition(const Graph& g);
// Minimum clique partition by branch and bound; refuses n > limit.
CliquePartitionWitness exact_clique_partition(const Graph& g, int limit = kDefaultOracleLimit);

}  // namespace dcut
