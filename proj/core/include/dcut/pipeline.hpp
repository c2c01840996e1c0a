#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dcut/graph.hpp"
#include "dcut/oracle.hpp"
#include "dcut/params.hpp"
#include "dcut/pc.hpp"
#include "dcut/stream.hpp"
#include "dcut/vc_max.hpp"

namespace dcut {

enum class Param { vc, nd, pc, none };
enum class Variant { all, min, max };

Param parse_param(const std::string& s);
Variant parse_variant(const std::string& s);
std::string to_string(Param p);
std::string to_string(Variant v);

inline constexpr int kDefaultKernelLimit = 64;

struct PipelineOptions {
  int kernel_limit = kDefaultKernelLimit;
  int oracle_limit = kDefaultOracleLimit;
  MarkVcOptions vc_max;
  MarkScope pc_scope = MarkScope::all_blocks;
  std::optional<CliquePartitionWitness> partition;  // greedy partition when absent
};

struct PipelineInfo {
  std::size_t cover_size = 0;
  std::size_t modules = 0;
  std::size_t cliques = 0;
  std::size_t kernel_vertices = 0;
  std::size_t kernel_solutions = 0;
  std::vector<std::string> warnings;
};

// Called before the lifted class of each kernel solution (ids of the kernel).
using KernelSolutionHook = std::function<void(const EdgeCut&)>;

// Enumerates the chosen solution family of g with ids of g. Kernel solutions
// are visited in lexicographic order and each class is streamed in branch order.
void enumerate_solutions(const Graph& g, int d, Param param, Variant variant, const PipelineOptions& opts,
                         const CutSink& sink, PipelineInfo* info = nullptr, StreamStats* stats = nullptr,
                         const KernelSolutionHook& on_kernel_solution = {});

// Oracle reference for a variant.
CutSet oracle_solutions(const Graph& g, int d, Variant variant, int limit = kDefaultOracleLimit);

}  // namespace dcut
