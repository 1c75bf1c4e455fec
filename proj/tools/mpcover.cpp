// Copyright 2026 The mpcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// mpcover: monochromatic diameter covers of 2-colored complete multipartite
// graphs. See `mpcover --help`.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mpcover/harness.hpp"

namespace {

using mpcover::RunConfig;

void add_parts(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--parts", cfg.parts, "part sizes, e.g. 4,3,2")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
}

void add_search_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--t", cfg.t, "number of subgraphs (1 or 2)");
  cmd->add_option("--d-max", cfg.d_max, "largest diameter tried");
  cmd->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--checkpoint", cfg.checkpoint, "checkpoint file (resumed if present)");
  cmd->add_option("--stop-after", cfg.stop_after,
                  "stop after examining this many colorings (resume later)");
  cmd->add_option("--expect", cfg.expect, "exit 1 unless D equals this value");
  cmd->add_flag("--timing", cfg.timing, "include wall-clock seconds in the report");
  cmd->add_option("--format", cfg.format, "report format")
      ->check(CLI::IsMember({"json", "tsv"}));
}

void add_prune_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_flag("--no-stars{false}", cfg.prune.stars, "disable the two-star shortcut");
  cmd->add_flag("--no-clone-rules{false}", cfg.prune.clone_rules,
                "disable the clone-structure shortcuts");
  cmd->add_flag("--no-star-doublestar{false}", cfg.prune.star_doublestar,
                "disable the star/double-star shortcut");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monochromatic diameter covers of 2-colored complete multipartite graphs"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string output;
  app.add_option("--output", output, "write the report to this file instead of stdout");

  auto* gen = app.add_subcommand("gen", "print an extremal coloring");
  gen->add_option("--family", cfg.family, "thm31:k=K, fig4 or fig3")->required();
  gen->add_flag("--compact", cfg.compact, "hex bit-string form");

  auto* cover = app.add_subcommand("cover", "build and verify a diameter-3 cover");
  cover->add_option("--input", cfg.input, "coloring JSON")->required();
  cover->add_option("--d", cfg.d, "diameter bound to verify against");
  cover->add_option("--grouping", cfg.grouping, "how parts merge into three groups")
      ->check(CLI::IsMember({"balanced", "first-fit"}));

  auto* verify = app.add_subcommand("verify", "check a cover certificate");
  verify->add_option("--coloring", cfg.input, "coloring JSON")->required();
  verify->add_option("--cover", cfg.cover_path, "cover JSON")->required();
  verify->add_option("--d", cfg.d, "diameter bound")->required();
  verify->add_option("--t", cfg.t, "subgraph count bound")->required();

  auto* exists = app.add_subcommand("exists", "decide whether a cover exists");
  exists->add_option("--coloring", cfg.input, "coloring JSON")->required();
  exists->add_option("--t", cfg.t, "subgraph count bound")->required();
  exists->add_option("--d", cfg.d, "diameter bound")->required();
  add_prune_flags(exists, cfg);

  auto* compute = app.add_subcommand("compute-d", "exact D over every coloring of a shape");
  add_parts(compute, cfg);
  add_search_options(compute, cfg);
  add_prune_flags(compute, cfg);
  compute->add_flag("--no-symmetry{false}", cfg.symmetry, "enumerate raw colorings");

  auto* classify = app.add_subcommand("classify", "closed-form D for a tripartite shape");
  add_parts(classify, cfg);

  auto* gk = app.add_subcommand("gk", "survey K_{2,...,2} with clone-property checks");
  gk->add_option("--k", cfg.k, "number of parts")->required();
  add_search_options(gk, cfg);

  auto* ryser = app.add_subcommand("ryser", "check the cover/matching inequality chain");
  auto* ryser_in = ryser->add_option("--coloring", cfg.input, "coloring JSON");
  auto* ryser_h = ryser->add_option("--hypergraph", cfg.hypergraph_path, "hypergraph JSON");
  ryser_in->excludes(ryser_h);
  ryser->require_option(1);

  auto* fuzz = app.add_subcommand("fuzz", "seeded property fuzzing");
  fuzz->add_option("--mode", cfg.mode, "construct, tc2, prune or equivalence")
      ->required()
      ->check(CLI::IsMember({"construct", "tc2", "prune", "equivalence"}));
  fuzz->add_option("--seed", cfg.seed, "RNG seed");
  fuzz->add_option("--n", cfg.iterations, "iterations");
  fuzz->add_option("--reproducers", cfg.reproducer_dir, "directory for failing inputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : mpcover::kExitConfig;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.command == "fuzz" && cfg.reproducer_dir.empty()) cfg.reproducer_dir = "fuzz-reproducers";
  try {
    cfg.cap_edges = mpcover::edge_cap_from_env();
  } catch (const mpcover::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return mpcover::kExitConfig;
  }

  const mpcover::CommandResult result = mpcover::dispatch(cfg);
  std::cerr << result.notes;
  if (output.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "error: cannot write " << output << "\n";
      return mpcover::kExitConfig;
    }
    out << result.output;
  }
  return result.exit_code;
}
