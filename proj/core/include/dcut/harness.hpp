#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dcut/graph.hpp"
#include "dcut/pipeline.hpp"
#include "dcut/stream.hpp"

namespace dcut {

enum class Verdict { pass, mismatch, counterexample_warning, not_checked };
std::string to_string(Verdict v);

struct RunReport {
  std::string instance;
  std::string param;
  std::string variant;
  int d = 1;
  std::size_t vertices = 0;
  std::size_t cover_size = 0;
  std::size_t modules = 0;
  std::size_t cliques = 0;
  std::size_t kernel_vertices = 0;
  std::size_t kernel_solutions = 0;
  std::uint64_t solutions = 0;
  double max_delay_ms = 0;
  double mean_delay_ms = 0;
  long peak_rss_kb = 0;
  Verdict verdict = Verdict::not_checked;
  std::string detail;
  std::optional<EdgeCut> witness;
  std::optional<EdgeCut> kernel_solution;
  std::vector<std::string> warnings;
};

nlohmann::json to_json_report(const RunReport& r);

// Runs a solution producer: it streams lifted cuts into the sink, announces
// each kernel solution through the hook first, and fills the info record.
using SolutionProducer = std::function<void(const CutSink&, const KernelSolutionHook&, PipelineInfo&)>;

// Checks a producer against the oracle family of g.
RunReport verify_stream(const Graph& g, const std::string& name, int d, Variant variant, int oracle_limit,
                        const SolutionProducer& produce);

// Compares the pipeline's lifted classes against the oracle: exact set
// equality and pairwise disjoint classes.
RunReport verify_instance(const Graph& g, const std::string& name, int d, Param param, Variant variant,
                          const PipelineOptions& opts = {});

// Streams the pipeline without storing solutions, timing every output.
RunReport bench_instance(const Graph& g, const std::string& name, int d, Param param, Variant variant,
                         const PipelineOptions& opts = {});

long peak_rss_kb();

}  // namespace dcut
