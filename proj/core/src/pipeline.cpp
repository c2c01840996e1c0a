#include "dcut/pipeline.hpp"

#include <stdexcept>

#include "dcut/nd.hpp"
#include "dcut/vc_all.hpp"
#include "dcut/vc_min.hpp"

namespace dcut {

Param parse_param(const std::string& s) {
  if (s == "vc") return Param::vc;
  if (s == "nd") return Param::nd;
  if (s == "pc") return Param::pc;
  if (s == "none") return Param::none;
  throw std::invalid_argument("unknown parameter '" + s + "'");
}

Variant parse_variant(const std::string& s) {
  if (s == "all") return Variant::all;
  if (s == "min") return Variant::min;
  if (s == "max") return Variant::max;
  throw std::invalid_argument("unknown variant '" + s + "'");
}

std::string to_string(Param p) {
  switch (p) {
    case Param::vc: return "vc";
    case Param::nd: return "nd";
    case Param::pc: return "pc";
    case Param::none: return "none";
  }
  return "?";
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::all: return "all";
    case Variant::min: return "min";
    case Variant::max: return "max";
  }
  return "?";
}

namespace {

CutSet select(const CutSet& all, Variant v) {
  switch (v) {
    case Variant::all: return all;
    case Variant::min: return filter_minimal(all);
    case Variant::max: return filter_maximal(all);
  }
  return all;
}

// Drives sols through a per-solution lifting routine until the sink stops.
template <class Lift>
void drive(const CutSet& sols, const CutSink& sink, const KernelSolutionHook& hook, Lift&& lift) {
  bool more = true;
  CutSink gate = [&](const EdgeCut& c) { return more = sink(c); };
  bool first = true;
  for (const auto& f : sols) {
    if (hook) hook(f);
    lift(f, first, gate);
    first = false;
    if (!more) return;
  }
}

void emit_all(const std::vector<EdgeCut>& cuts, const CutSink& sink, StreamStats* stats) {
  Emitter out(sink, stats);
  for (const auto& c : cuts) {
    out.node();
    if (!out.emit(c)) return;
  }
}

}  // namespace

CutSet oracle_solutions(const Graph& g, int d, Variant variant, int limit) {
  return select(enumerate_all_bruteforce(g, d, limit), variant);
}

void enumerate_solutions(const Graph& g, int d, Param param, Variant variant, const PipelineOptions& opts,
                         const CutSink& sink, PipelineInfo* info, StreamStats* stats,
                         const KernelSolutionHook& hook) {
  PipelineInfo local;
  PipelineInfo& inf = info ? *info : local;
  auto kernel_sols = [&](const Graph& h) {
    inf.kernel_vertices = static_cast<std::size_t>(h.n());
    auto sols = select(search_d_cuts(h, d, opts.kernel_limit), variant);
    inf.kernel_solutions = sols.size();
    return sols;
  };

  if (param == Param::none) {
    auto sols = oracle_solutions(g, d, variant, opts.oracle_limit);
    inf.kernel_vertices = static_cast<std::size_t>(g.n());
    inf.kernel_solutions = sols.size();
    drive(sols, sink, hook, [&](const EdgeCut& f, bool, const CutSink& s) { emit_all({f}, s, stats); });
    return;
  }

  if (param == Param::vc) {
    auto cover = approx_vertex_cover(g);
    inf.cover_size = cover.cover.size();
    if (variant == Variant::min) {
      auto k = kernelize_vc_min(g, cover, d);
      auto sols = kernel_sols(k.h);
      drive(sols, sink, hook, [&](const EdgeCut& f, bool, const CutSink& s) { emit_all(lift_vc_min(k, f), s, stats); });
    } else if (variant == Variant::all) {
      auto k = kernelize_vc_all(g, cover, d);
      if (k.identity_fallback) inf.warnings.push_back(k.warning);
      auto sols = kernel_sols(k.h);
      drive(sols, sink, hook, [&](const EdgeCut& f, bool first, const CutSink& s) { lift_vc_all(k, f, first, s, stats); });
    } else {
      auto k = mark_vc(g, cover, d, opts.vc_max);
      auto sols = kernel_sols(k.h);
      drive(sols, sink, hook, [&](const EdgeCut& f, bool, const CutSink& s) { enum_equivalent_max(k, f, s, stats); });
    }
    return;
  }

  if (param == Param::nd) {
    auto nd = neighborhood_decomposition(g);
    inf.modules = nd.modules.size();
    auto k = mark_nd(g, nd, d);
    auto sols = kernel_sols(k.h);
    if (variant == Variant::min)
      drive(sols, sink, hook, [&](const EdgeCut& f, bool, const CutSink& s) { emit_all(lift_nd_min(k, f), s, stats); });
    else
      drive(sols, sink, hook, [&](const EdgeCut& f, bool, const CutSink& s) { enum_nd(k, f, s, stats); });
    return;
  }

  auto cp = opts.partition ? validate_clique_partition(g, opts.partition->cliques) : greedy_clique_partition(g);
  inf.cliques = cp.cliques.size();
  auto k = kernelize_pc(g, cp, d, opts.pc_scope);
  auto sols = kernel_sols(k.gprime);
  drive(sols, sink, hook, [&](const EdgeCut& f, bool, const CutSink& s) { emit_all({lift_pc(k, f)}, s, stats); });
}

}  // namespace dcut
