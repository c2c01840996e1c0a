#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcut/graph.hpp"

namespace dcut {

inline constexpr int kDefaultOracleLimit = 20;

// Thrown instead of starting an exhaustive search that exceeds its size limit.
class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using CutSet = std::set<EdgeCut>;

// f must be a subset of E(g); a non-edge throws std::invalid_argument.
bool is_d_cut(const Graph& g, int d, const EdgeCut& f);

// A side assignment whose edge cut is exactly f, if one exists.
std::optional<std::vector<std::uint8_t>> realize_cut(const Graph& g, const EdgeCut& f);

// Exhausts bipartitions of each connected component; refuses when a component
// has more than `limit` vertices.
CutSet enumerate_all_bruteforce(const Graph& g, int d, int limit = kDefaultOracleLimit);

CutSet filter_minimal(const CutSet& cuts);
CutSet filter_maximal(const CutSet& cuts);

struct MonoPartition {
  std::vector<std::vector<Vertex>> blocks;  // each sorted, ordered by smallest member
  std::vector<int> block_of;
};

// Closure of the forcing rules: cliques of 2d+1 vertices, vertices with more
// than d neighbours in a block, and pairs with more than 2d common neighbours.
// `cliques` seeds the clique rule beyond the greedy common-neighbourhood cliques.
MonoPartition monochromatic_partition(const Graph& g, int d,
                                      const std::vector<std::vector<Vertex>>& cliques = {});

// Number of maximal d-cuts of the star-forest family: C(m,d)^k, requires k > 2d.
std::uint64_t count_maximal_family(int k, int m, int d);

// Exact enumeration by backtracking over monochromatic blocks with degree
// pruning. Used on kernels; refuses graphs with more than `limit` vertices.
CutSet search_d_cuts(const Graph& g, int d, int limit);
bool has_d_cut(const Graph& g, int d);

}  // namespace dcut
