#include "dcut/harness.hpp"

#include <sys/resource.h>

#include <chrono>
#include <map>

namespace dcut {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::mismatch: return "mismatch";
    case Verdict::counterexample_warning: return "counterexample-warning";
    case Verdict::not_checked: return "not-checked";
  }
  return "?";
}

long peak_rss_kb() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return usage.ru_maxrss;
}

nlohmann::json to_json_report(const RunReport& r) {
  auto cut = [](const std::optional<EdgeCut>& c) -> nlohmann::json {
    if (!c) return nullptr;
    return nlohmann::json::parse(to_json(*c));
  };
  return {
      {"instance", r.instance},
      {"param", r.param},
      {"variant", r.variant},
      {"d", r.d},
      {"vertices", r.vertices},
      {"parameters", {{"vertex_cover", r.cover_size}, {"modules", r.modules}, {"cliques", r.cliques}}},
      {"kernel_vertices", r.kernel_vertices},
      {"kernel_solutions", r.kernel_solutions},
      {"solutions", r.solutions},
      {"max_delay_ms", r.max_delay_ms},
      {"mean_delay_ms", r.mean_delay_ms},
      {"peak_rss_kb", r.peak_rss_kb},
      {"verdict", to_string(r.verdict)},
      {"detail", r.detail},
      {"witness", cut(r.witness)},
      {"kernel_solution", cut(r.kernel_solution)},
      {"warnings", r.warnings},
  };
}

namespace {

RunReport base_report(const Graph& g, const std::string& name, int d, Param param, Variant variant) {
  RunReport r;
  r.instance = name;
  r.param = to_string(param);
  r.variant = to_string(variant);
  r.d = d;
  r.vertices = static_cast<std::size_t>(g.n());
  return r;
}

void absorb(RunReport& r, const PipelineInfo& info) {
  r.cover_size = info.cover_size;
  r.modules = info.modules;
  r.cliques = info.cliques;
  r.kernel_vertices = info.kernel_vertices;
  r.kernel_solutions = info.kernel_solutions;
  r.warnings = info.warnings;
}

}  // namespace

RunReport verify_stream(const Graph& g, const std::string& name, int d, Variant variant, int oracle_limit,
                        const SolutionProducer& produce) {
  RunReport r = base_report(g, name, d, Param::none, variant);
  const CutSet expected = oracle_solutions(g, d, variant, oracle_limit);
  std::map<EdgeCut, EdgeCut> owner;
  EdgeCut current;
  auto fail = [&](const std::string& why, const EdgeCut& w, std::optional<EdgeCut> ks) {
    if (r.verdict == Verdict::mismatch) return;
    r.verdict = Verdict::mismatch;
    r.detail = why;
    r.witness = w;
    r.kernel_solution = std::move(ks);
  };
  PipelineInfo info;
  try {
    produce(
        [&](const EdgeCut& c) {
          ++r.solutions;
          auto [it, fresh] = owner.emplace(c, current);
          if (!fresh) fail("produced twice (also by the kernel solution in kernel_solution)", c, it->second);
          else if (!expected.count(c)) fail("not a solution of the input", c, current);
          return true;
        },
        [&](const EdgeCut& f) { current = f; }, info);
  } catch (const InvariantViolation& e) {
    absorb(r, info);
    fail(std::string("invariant violation: ") + e.what(), current, current);
    return r;
  }
  absorb(r, info);
  for (const auto& c : expected)
    if (!owner.count(c)) {
      fail("solution of the input never produced", c, std::nullopt);
      break;
    }
  if (r.verdict != Verdict::mismatch)
    r.verdict = info.warnings.empty() ? Verdict::pass : Verdict::counterexample_warning;
  return r;
}

RunReport verify_instance(const Graph& g, const std::string& name, int d, Param param, Variant variant,
                          const PipelineOptions& opts) {
  RunReport r = verify_stream(g, name, d, variant, opts.oracle_limit,
                              [&](const CutSink& sink, const KernelSolutionHook& hook, PipelineInfo& info) {
                                enumerate_solutions(g, d, param, variant, opts, sink, &info, nullptr, hook);
                              });
  r.param = to_string(param);
  return r;
}

RunReport bench_instance(const Graph& g, const std::string& name, int d, Param param, Variant variant,
                         const PipelineOptions& opts) {
  using clock = std::chrono::steady_clock;
  RunReport r = base_report(g, name, d, param, variant);
  PipelineInfo info;
  auto last = clock::now();
  double total_ms = 0;
  enumerate_solutions(g, d, param, variant, opts,
                      [&](const EdgeCut&) {
                        auto now = clock::now();
                        double ms = std::chrono::duration<double, std::milli>(now - last).count();
                        last = now;
                        r.max_delay_ms = std::max(r.max_delay_ms, ms);
                        total_ms += ms;
                        ++r.solutions;
                        return true;
                      },
                      &info);
  absorb(r, info);
  r.mean_delay_ms = r.solutions ? total_ms / static_cast<double>(r.solutions) : 0;
  r.peak_rss_kb = peak_rss_kb();
  return r;
}

}  // namespace dcut
