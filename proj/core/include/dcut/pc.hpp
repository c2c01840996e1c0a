#pragma once

#include <memory>
#include <vector>

#include "dcut/graph.hpp"
#include "dcut/params.hpp"

namespace dcut {

enum class MarkScope {
  all_blocks,    // configurations range over every other block
  large_blocks,  // configurations range over large blocks only
};

struct PcKernel {
  std::shared_ptr<const Graph> g;
  Graph g1;                                // G plus the edges Rule 2 adds
  std::vector<std::vector<Vertex>> c1;     // blocks of G1
  EdgeCut added_edges;                     // ids of G and G1
  Graph gprime;
  std::vector<std::vector<Vertex>> cprime;  // cprime[i] ⊆ c1[i], ids of G'
  std::vector<Vertex> to_g1;                // G' id -> G1 id
  std::vector<int> block_of_g1;
  std::vector<Vertex> marked;  // ids of G1
  int d = 1;
};

// Blocks of at most 2d vertices become singletons.
CliquePartitionWitness split_small_cliques(const Graph& g, const CliquePartitionWitness& cp, int d);

struct MergeResult {
  Graph g1;
  std::vector<std::vector<Vertex>> blocks;
  EdgeCut added_edges;
};
// While a vertex has more than d neighbours in another block, completes the
// join of the two blocks and merges them into the smaller index.
MergeResult merge_cliques(const Graph& g, const std::vector<std::vector<Vertex>>& blocks, int d);

PcKernel mark_cp_and_trim(const Graph& g, const MergeResult& merged, int d, MarkScope scope = MarkScope::all_blocks);
PcKernel kernelize_pc(const Graph& g, const CliquePartitionWitness& cp, int d, MarkScope scope = MarkScope::all_blocks);

// f is a d-cut of G'; the image is a d-cut of G.
EdgeCut lift_pc(const PcKernel& k, const EdgeCut& f);

// Per-large-block bound: sum over i = 1..d+1 of d*C(k,i), plus 2d+1.
double pc_block_bound(std::size_t blocks, int d);

}  // namespace dcut
