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

#ifndef VCLOCAL_TOOLS_COMMANDS_HPP_
#define VCLOCAL_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vclocal/exact_oracle.hpp"
#include "vclocal/graph.hpp"
#include "vclocal/rational.hpp"
#include "vclocal/simulator.hpp"

namespace vclocal::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitInvariant = 3,
  kExitOracleRefusal = 4,
  kExitIo = 5,
};

// Every check a successful run must pass, in evaluation order.
inline const std::vector<std::string> kRunChecks = {
    "pair-symmetry",
    "cover-valid",
    "round-bound",
    "g1-max-degree-2",
    "g1-nonisolated-equals-C",
    "components-paths-or-cycles",
    "certified-ratio-le-3",
    "double-cover-maximal-matching",
    "projection-equals-cover",
};

struct RunReport {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  std::uint32_t delta = 0;
  std::uint32_t cover_size = 0;
  std::uint32_t lower_bound = 0;
  std::optional<Rational> certified_ratio;
  std::uint32_t rounds_run = 0;
  std::uint32_t last_active_step = 0;
  std::optional<std::uint32_t> oracle_size;
  std::optional<Rational> true_ratio;
  std::vector<NodeId> cover;
  std::map<std::string, bool> checks;
  std::vector<std::string> failures;

  bool ok() const;
};

struct AnalyzeOptions {
  bool use_oracle = true;
  OracleOptions oracle;
  // Skips the solver when the optimum is already known (sweeps).
  std::optional<std::uint32_t> known_optimum;
};

struct AnalyzedRun {
  RunReport report;
  Transcript transcript;
};

// Runs the algorithm and every cross-check on g. Never throws for a failed
// check; failures are recorded in report.checks and report.failures.
AnalyzedRun AnalyzeRun(const PortGraph& g, const AnalyzeOptions& options = {});

nlohmann::ordered_json ToJson(const RunReport& report);

enum class GraphFormat { kPortGraph, kEdgeList };

struct InputSpec {
  std::string path;
  std::optional<GraphFormat> format;  // default: from the file extension
  NumberingPolicy numbering = NumberingPolicy::kSorted;
  std::optional<std::uint64_t> seed;
};

struct RunArgs {
  InputSpec input;
  std::string trace_path;
  bool compact = false;
  bool use_oracle = true;
  std::uint32_t oracle_cap = 32;
};

struct GenArgs {
  std::string kind;
  std::vector<std::string> params;
  std::optional<std::uint64_t> seed;
  std::string output_path;  // empty: standard output
};

struct OracleArgs {
  InputSpec input;
  std::uint32_t cap = 32;
  bool compact = false;
};

struct SweepArgs {
  InputSpec input;
  std::uint32_t trials = 1;
  std::uint64_t seed = 0;
  std::uint32_t oracle_cap = 32;
};

struct VerifyArgs {
  InputSpec input;
  std::string trace_path;
  bool compact = false;
};

// Each command writes its result to `out`, diagnostics to `err`, and returns
// an ExitCode.
int CmdRun(const RunArgs& args, std::ostream& out, std::ostream& err);
int CmdGen(const GenArgs& args, std::ostream& out, std::ostream& err);
int CmdOracle(const OracleArgs& args, std::ostream& out, std::ostream& err);
int CmdSweep(const SweepArgs& args, std::ostream& out, std::ostream& err);
int CmdVerify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

}  // namespace vclocal::cli

#endif  // VCLOCAL_TOOLS_COMMANDS_HPP_
