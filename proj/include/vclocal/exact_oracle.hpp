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

#ifndef VCLOCAL_EXACT_ORACLE_HPP_
#define VCLOCAL_EXACT_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "vclocal/graph.hpp"

namespace vclocal {

struct OracleOptions {
  // Larger instances are refused; the certificate is the tool for those.
  std::uint32_t max_nodes = 32;
  // Search-tree node budget.
  std::uint64_t node_limit = 50'000'000;
};

struct OracleResult {
  std::uint32_t optimum_size = 0;
  std::vector<NodeId> optimum_cover;  // one minimum cover, sorted
  std::uint64_t explored_nodes = 0;
};

// Hard upper limit on max_nodes (covers are kept as 64-bit masks).
inline constexpr std::uint32_t kOracleNodeCeiling = 64;

// Exact minimum vertex cover by branch and bound: pick an uncovered edge at a
// maximum-degree node u and branch on "u in the cover" versus "u out, all of
// its remaining neighbours in". A greedy matching on the residual graph
// bounds the search. Throws OracleRefusal when the instance exceeds
// options.max_nodes or the node budget runs out.
OracleResult SolveExact(const PortGraph& g, const OracleOptions& options = {});

// Subset enumeration in order of increasing size; the first cover found is
// optimal. Independent of SolveExact. Throws OracleRefusal above 20 nodes.
OracleResult BruteForce(const PortGraph& g);

}  // namespace vclocal

#endif  // VCLOCAL_EXACT_ORACLE_HPP_
