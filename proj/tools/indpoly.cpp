// indpoly: independence, vertex cover and subgraph counting polynomials of
// hypergraphs.
//
//   indpoly compute FILE [--engine E] [--pivot P] [--no-memo] [--no-split] [--format text|json]
//   indpoly cover   FILE [same flags]
//   indpoly gscp    FILE [--format text|json]
//   indpoly check   FILE [--only NAME,...] [--engine E] [--pivot P]
//   indpoly random  --n N --m M --k K [--k-max K2] --seed S [--mode strict|extended] [--out FILE]

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "indpoly/commands.hpp"

namespace {

using namespace indpoly;

const std::map<std::string, EngineKind> engine_map{
    {"vertex", EngineKind::VertexRecurrence},         {"edge", EngineKind::EdgeRecurrence},
    {"edge-ie", EngineKind::EdgeInclusionExclusion}, {"edge-contract", EngineKind::EdgeContraction},
    {"oracle", EngineKind::Oracle},
};

const std::map<std::string, PivotStrategy> pivot_map{
    {"max-degree", PivotStrategy::MaxDegreeVertex},
    {"min-id", PivotStrategy::MinVertexId},
    {"smallest-edge", PivotStrategy::SmallestEdge},
    {"first-edge", PivotStrategy::FirstEdge},
};

const std::map<std::string, cli::OutputFormat> format_map{
    {"text", cli::OutputFormat::Text},
    {"json", cli::OutputFormat::Json},
};

struct EvalFlags {
  EngineKind engine = EngineKind::VertexRecurrence;
  PivotStrategy pivot = PivotStrategy::MaxDegreeVertex;
  bool no_memo = false;
  bool no_split = false;

  EvalConfig config() const {
    EvalConfig cfg;
    cfg.engine = engine;
    cfg.pivot = pivot;
    cfg.memoize = !no_memo;
    cfg.split_components = !no_split;
    return cfg;
  }
};

void add_eval_flags(CLI::App* cmd, EvalFlags& flags) {
  cmd->add_option("--engine", flags.engine, "Recurrence engine")
      ->transform(CLI::CheckedTransformer(engine_map, CLI::ignore_case));
  cmd->add_option("--pivot", flags.pivot, "Pivot strategy")
      ->transform(CLI::CheckedTransformer(pivot_map, CLI::ignore_case));
  cmd->add_flag("--no-memo", flags.no_memo, "Disable memoization");
  cmd->add_flag("--no-split", flags.no_split, "Disable splitting into connected components");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independence and vertex cover polynomials of hypergraphs"};
  app.require_subcommand(1);

  std::string file;
  EvalFlags flags;
  cli::OutputFormat format = cli::OutputFormat::Text;

  auto* compute = app.add_subcommand("compute", "Independence polynomial I(G, x)");
  auto* cover = app.add_subcommand("cover", "Vertex cover polynomial");
  auto* gscp = app.add_subcommand("gscp", "Generalized subgraph counting polynomial F(G, v, x, y, z)");
  auto* check = app.add_subcommand("check", "Verify recurrence identities on one hypergraph");
  auto* random = app.add_subcommand("random", "Write a seeded random hypergraph document");

  for (auto* cmd : {compute, cover, gscp, check}) cmd->add_option("file", file, "Hypergraph file")->required();
  for (auto* cmd : {compute, cover, check}) add_eval_flags(cmd, flags);
  for (auto* cmd : {compute, cover, gscp}) {
    cmd->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(format_map));
  }

  std::vector<std::string> only;
  check->add_option("--only", only, "Identities to run")->delimiter(',');

  RandomSpec spec;
  std::size_t k = 2;
  std::size_t k_max = 0;
  std::string mode = "strict";
  std::string out_path = "-";
  random->add_option("--n", spec.n, "Vertex count")->required();
  random->add_option("--m", spec.m, "Edge count")->required();
  random->add_option("--k", k, "Edge arity, or the lower end of the arity range");
  random->add_option("--k-max", k_max, "Upper end of the arity range");
  random->add_option("--seed", spec.seed, "64-bit seed")->required();
  random->add_option("--mode", mode, "strict or extended")->check(CLI::IsMember({"strict", "extended"}));
  random->add_option("--out", out_path, "Output file, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (*compute || *cover) {
    cli::ComputeOptions opts{flags.config(), format};
    return *compute ? cli::cmd_compute(file, opts, std::cout, std::cerr)
                    : cli::cmd_cover(file, opts, std::cout, std::cerr);
  }
  if (*gscp) return cli::cmd_gscp(file, format, std::cout, std::cerr);
  if (*check) {
    for (const auto& name : only) {
      const auto& names = cli::identity_names();
      if (std::find(names.begin(), names.end(), name) == names.end()) {
        std::cerr << "unknown identity '" << name << "'\n";
        return 1;
      }
    }
    return cli::cmd_check(file, cli::CheckOptions{flags.config(), only}, std::cout, std::cerr);
  }
  spec.k_min = k;
  spec.k_max = k_max == 0 ? k : k_max;
  spec.mode = mode == "extended" ? Mode::Extended : Mode::Strict;
  return cli::cmd_random(spec, out_path, std::cout, std::cerr);
}
