#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dcut/generators.hpp"
#include "dcut/graph.hpp"
#include "dcut/harness.hpp"
#include "dcut/oracle.hpp"
#include "dcut/params.hpp"
#include "dcut/pipeline.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitOracleLimit = 4;

struct Common {
  std::string input;
  std::string partition;
  int d = 1;
  std::string param = "vc";
  std::string variant = "all";
  int oracle_limit = dcut::kDefaultOracleLimit;
  int kernel_limit = dcut::kDefaultKernelLimit;
  std::string json_report;
  bool full_vc_max = false;
};

void add_pipeline_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("-d", c.d, "Per-vertex crossing budget")->check(CLI::PositiveNumber);
  cmd->add_option("--param", c.param, "Parameterization")->check(CLI::IsMember({"vc", "nd", "pc", "none"}));
  cmd->add_option("--variant", c.variant, "Solution family")->check(CLI::IsMember({"all", "min", "max"}));
  cmd->add_option("--partition", c.partition, "Clique partition file for --param pc");
  cmd->add_option("--oracle-limit", c.oracle_limit, "Largest component the brute-force oracle accepts");
  cmd->add_option("--kernel-limit", c.kernel_limit, "Largest kernel whose solutions are searched exhaustively");
  cmd->add_option("--json-report", c.json_report, "Write the run report here instead of standard error");
  cmd->add_flag("--full-vc-max", c.full_vc_max, "Always build the vc max kernel, even when it cannot be smaller");
}

dcut::PipelineOptions pipeline_options(const Common& c) {
  dcut::PipelineOptions opts;
  opts.oracle_limit = c.oracle_limit;
  opts.kernel_limit = c.kernel_limit;
  opts.vc_max.small_input_identity = !c.full_vc_max;
  if (!c.partition.empty()) opts.partition = dcut::CliquePartitionWitness{dcut::load_partition_file(c.partition)};
  return opts;
}

void write_report(const std::string& path, const nlohmann::json& report) {
  if (path.empty()) {
    std::cerr << report.dump() << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report to " + path);
  out << report.dump(2) << '\n';
}

struct GenArgs {
  std::string family;
  int k = 3;
  int m = 2;
  int n = 4;
  double p = 0.5;
  std::uint64_t seed = 1;
  int d = 1;
  std::vector<std::string> inputs;
  std::string partition_out;
};

// Natural clique partition of a generated family, written when requested.
dcut::CliquePartitionWitness natural_partition(const GenArgs& a, const dcut::Graph& g) {
  if (a.family == "star-forest") {
    std::vector<std::vector<dcut::Vertex>> blocks(1);
    for (int i = 0; i < a.k; ++i) blocks[0].push_back(i);
    for (int v = a.k; v < g.n(); ++v) blocks.push_back({v});
    return {blocks};
  }
  if (a.family == "clique") {
    std::vector<dcut::Vertex> all;
    for (int v = 0; v < g.n(); ++v) all.push_back(v);
    return {{all}};
  }
  return dcut::greedy_clique_partition(g);
}

int run_gen(const GenArgs& a) {
  dcut::Graph g;
  if (a.family == "star-forest") g = dcut::star_forest(a.k, a.m);
  else if (a.family == "path") g = dcut::path_graph(a.n);
  else if (a.family == "clique") g = dcut::clique_graph(a.n);
  else if (a.family == "star") g = dcut::star_graph(a.n);
  else if (a.family == "random") g = dcut::random_graph(a.n, a.p, a.seed);
  else if (a.family == "compose") {
    std::vector<dcut::Graph> parts;
    for (const auto& path : a.inputs) parts.push_back(dcut::load_graph_file(path));
    g = dcut::compose(parts, a.d);
  } else {
    throw std::invalid_argument("unknown family '" + a.family + "'");
  }
  std::cout << dcut::serialize(g);
  if (!a.partition_out.empty()) {
    std::ofstream out(a.partition_out);
    if (!out) throw std::runtime_error("cannot write partition to " + a.partition_out);
    out << dcut::serialize_partition(natural_partition(a, g));
  }
  return 0;
}

int run_enumerate(const Common& c) {
  const auto g = dcut::load_graph_file(c.input);
  const auto param = dcut::parse_param(c.param);
  const auto variant = dcut::parse_variant(c.variant);
  dcut::PipelineInfo info;
  std::uint64_t count = 0;
  dcut::enumerate_solutions(g, c.d, param, variant, pipeline_options(c),
                            [&](const dcut::EdgeCut& f) {
                              std::cout << dcut::to_json(f) << '\n';
                              ++count;
                              return true;
                            },
                            &info);
  std::cout.flush();
  dcut::RunReport r;
  r.instance = c.input;
  r.param = c.param;
  r.variant = c.variant;
  r.d = c.d;
  r.vertices = static_cast<std::size_t>(g.n());
  r.cover_size = info.cover_size;
  r.modules = info.modules;
  r.cliques = info.cliques;
  r.kernel_vertices = info.kernel_vertices;
  r.kernel_solutions = info.kernel_solutions;
  r.solutions = count;
  r.warnings = info.warnings;
  write_report(c.json_report, dcut::to_json_report(r));
  return 0;
}

struct VerifyArgs {
  Common common;
  std::vector<std::string> inputs;
  int exhaustive_n = 5;
  int random_count = 0;
  int structured_count = 0;
  int structured_max_n = 16;
  std::uint64_t seed = 1;
  int d_min = 1;
  int d_max = 2;
  std::vector<std::string> params{"vc", "nd", "pc"};
  std::vector<std::string> variants{"all", "min", "max"};
  bool keep_going = false;
};

int run_verify(const VerifyArgs& a) {
  std::vector<dcut::NamedGraph> corpus;
  if (a.inputs.empty()) {
    corpus = dcut::verification_corpus(a.exhaustive_n, a.random_count, a.seed);
    auto extra = dcut::structured_corpus(a.structured_count, a.structured_max_n, a.seed);
    corpus.insert(corpus.end(), extra.begin(), extra.end());
  } else {
    for (const auto& path : a.inputs) corpus.push_back({path, dcut::load_graph_file(path)});
  }
  const auto opts = pipeline_options(a.common);
  nlohmann::json reports = nlohmann::json::array();
  std::size_t failures = 0;
  std::size_t runs = 0;
  for (const auto& inst : corpus) {
    for (int d = a.d_min; d <= a.d_max; ++d) {
      for (const auto& p : a.params) {
        for (const auto& v : a.variants) {
          auto r = dcut::verify_instance(inst.graph, inst.name, d, dcut::parse_param(p), dcut::parse_variant(v), opts);
          ++runs;
          if (r.verdict == dcut::Verdict::mismatch) {
            ++failures;
            reports.push_back(dcut::to_json_report(r));
            std::cerr << dcut::to_json_report(r).dump() << '\n';
            if (!a.keep_going) {
              write_report(a.common.json_report, {{"runs", runs}, {"mismatches", failures}, {"reports", reports}});
              return kExitMismatch;
            }
          } else if (!a.common.json_report.empty()) {
            reports.push_back(dcut::to_json_report(r));
          }
        }
      }
    }
  }
  nlohmann::json summary{{"runs", runs}, {"mismatches", failures}};
  if (!a.common.json_report.empty()) summary["reports"] = reports;
  write_report(a.common.json_report, summary);
  return failures ? kExitMismatch : 0;
}

int run_bench(const Common& c) {
  const auto g = dcut::load_graph_file(c.input);
  auto r = dcut::bench_instance(g, c.input, c.d, dcut::parse_param(c.param), dcut::parse_variant(c.variant),
                                pipeline_options(c));
  std::cout << dcut::to_json_report(r).dump() << '\n';
  if (!c.json_report.empty()) write_report(c.json_report, dcut::to_json_report(r));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate d-cuts through enumeration kernels"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph to standard output");
  gen_cmd->add_option("family", gen.family, "star-forest | compose | random | path | clique | star")->required();
  gen_cmd->add_option("--k", gen.k, "Clique size for star-forest");
  gen_cmd->add_option("--m", gen.m, "Leaves per clique vertex for star-forest");
  gen_cmd->add_option("-n", gen.n, "Vertex count (path, clique, random) or leaf count (star)");
  gen_cmd->add_option("--p", gen.p, "Edge probability for random");
  gen_cmd->add_option("--seed", gen.seed, "Seed for random");
  gen_cmd->add_option("-d", gen.d, "Budget for the compose gadget")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--inputs", gen.inputs, "Graph files for compose");
  gen_cmd->add_option("--partition", gen.partition_out, "Also write a clique partition here");

  Common enumerate;
  auto* enum_cmd = app.add_subcommand("enumerate", "Stream solutions as JSON lines");
  enum_cmd->add_option("--input", enumerate.input, "Graph file")->required();
  add_pipeline_flags(enum_cmd, enumerate);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Compare every pipeline against the brute-force oracle");
  verify_cmd->add_option("--input", verify.inputs, "Graph files; the generated corpus is used when absent");
  verify_cmd->add_option("--max-n", verify.exhaustive_n, "All connected graphs up to this many vertices")
      ->check(CLI::Range(1, 7));
  verify_cmd->add_option("--random", verify.random_count, "Number of seeded random graphs on 7 or 8 vertices");
  verify_cmd->add_option("--structured", verify.structured_count, "Number of seeded twin bundles and clique clusters");
  verify_cmd->add_option("--structured-max-n", verify.structured_max_n, "Vertex ceiling for the structured instances")
      ->check(CLI::Range(6, 20));
  verify_cmd->add_option("--seed", verify.seed, "Seed for the random part of the corpus");
  verify_cmd->add_option("--d-min", verify.d_min)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--d-max", verify.d_max)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--params", verify.params)->check(CLI::IsMember({"vc", "nd", "pc", "none"}));
  verify_cmd->add_option("--variants", verify.variants)->check(CLI::IsMember({"all", "min", "max"}));
  verify_cmd->add_flag("--keep-going", verify.keep_going, "Report every mismatch instead of stopping");
  verify_cmd->add_option("--oracle-limit", verify.common.oracle_limit);
  verify_cmd->add_option("--kernel-limit", verify.common.kernel_limit);
  verify_cmd->add_option("--json-report", verify.common.json_report);
  verify_cmd->add_flag("--full-vc-max", verify.common.full_vc_max);

  Common bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the solution stream without storing it");
  bench_cmd->add_option("--input", bench.input, "Graph file")->required();
  add_pipeline_flags(bench_cmd, bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*enum_cmd) return run_enumerate(enumerate);
    if (*verify_cmd) return run_verify(verify);
    if (*bench_cmd) return run_bench(bench);
  } catch (const dcut::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const dcut::OracleLimitError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitOracleLimit;
  } catch (const dcut::InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
