// Copyright 2026 The vclocal Authors
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

// vc: run the local vertex cover algorithm, generate inputs, solve small
// instances exactly, sweep port numberings, and replay transcripts.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using vclocal::NumberingPolicy;
using vclocal::cli::GraphFormat;
using vclocal::cli::InputSpec;

struct InputFlags {
  std::string path;
  std::string format;
  std::string numbering = "sorted";
  std::uint64_t seed = 0;
  CLI::Option* seed_option = nullptr;

  void Register(CLI::App* app, bool with_numbering) {
    app->add_option("--input", path, "Graph file (.pg or .el)")->required();
    app->add_option("--format", format, "Input format; default from the extension")
        ->check(CLI::IsMember({"pg", "el"}));
    if (with_numbering) {
      app->add_option("--numbering", numbering, "Port numbering for .el input")
          ->check(CLI::IsMember({"sorted", "input", "random"}));
    }
    seed_option = app->add_option("--seed", seed, "Seed for random numbering");
  }

  InputSpec Spec() const {
    InputSpec spec;
    spec.path = path;
    if (format == "pg") spec.format = GraphFormat::kPortGraph;
    if (format == "el") spec.format = GraphFormat::kEdgeList;
    spec.numbering = *vclocal::ParseNumberingPolicy(numbering);
    if (seed_option != nullptr && seed_option->count() > 0) spec.seed = seed;
    return spec;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local 3-approximation of minimum vertex cover in the port-numbering model"};
  app.require_subcommand(1);

  InputFlags run_input;
  vclocal::cli::RunArgs run_args;
  bool run_no_oracle = false;
  auto* run = app.add_subcommand("run", "Run the algorithm and every cross-check");
  run_input.Register(run, true);
  run->add_option("--trace", run_args.trace_path, "Write the message transcript here");
  run->add_flag("--json", run_args.compact, "Single-line JSON output");
  run->add_flag("--no-oracle", run_no_oracle, "Skip the exact solver");
  run->add_option("--oracle-cap", run_args.oracle_cap, "Largest n handed to the exact solver");

  vclocal::cli::GenArgs gen_args;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "Write a generated edge list");
  gen->add_option("kind", gen_args.kind, "cycle | path | clique | star | random")->required();
  gen->add_option("params", gen_args.params, "N | LEAVES | N DELTA P");
  auto* gen_seed_option = gen->add_option("--seed", gen_seed, "Seed (random graphs)");
  gen->add_option("--output", gen_args.output_path, "Output path; default standard output");

  InputFlags oracle_input;
  vclocal::cli::OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "Exact minimum vertex cover of a small graph");
  oracle_input.Register(oracle, false);
  oracle->add_option("--cap", oracle_args.cap, "Refuse graphs with more nodes");
  oracle->add_flag("--json", oracle_args.compact, "Single-line JSON output");

  InputFlags sweep_input;
  vclocal::cli::SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Run under many random port numberings");
  sweep->add_option("--input", sweep_input.path, "Graph file (.pg or .el)")->required();
  sweep->add_option("--format", sweep_input.format, "Input format")
      ->check(CLI::IsMember({"pg", "el"}));
  sweep->add_option("--trials", sweep_args.trials, "Number of numberings")->required();
  sweep->add_option("--seed", sweep_args.seed, "Base seed");
  sweep->add_option("--oracle-cap", sweep_args.oracle_cap, "Largest n handed to the exact solver");
  bool sweep_json = false;
  sweep->add_flag("--json", sweep_json, "Accepted for symmetry; sweep output is always JSON lines");

  InputFlags verify_input;
  vclocal::cli::VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Replay a transcript against a graph");
  verify_input.Register(verify, true);
  verify->add_option("--trace", verify_args.trace_path, "Transcript file")->required();
  verify->add_flag("--json", verify_args.compact, "Single-line JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return vclocal::cli::kExitUsage;
  }

  if (*run) {
    run_args.input = run_input.Spec();
    run_args.use_oracle = !run_no_oracle;
    return vclocal::cli::CmdRun(run_args, std::cout, std::cerr);
  }
  if (*gen) {
    if (gen_seed_option->count() > 0) gen_args.seed = gen_seed;
    return vclocal::cli::CmdGen(gen_args, std::cout, std::cerr);
  }
  if (*oracle) {
    oracle_args.input = oracle_input.Spec();
    return vclocal::cli::CmdOracle(oracle_args, std::cout, std::cerr);
  }
  if (*sweep) {
    sweep_args.input = sweep_input.Spec();
    return vclocal::cli::CmdSweep(sweep_args, std::cout, std::cerr);
  }
  verify_args.input = verify_input.Spec();
  return vclocal::cli::CmdVerify(verify_args, std::cout, std::cerr);
}
