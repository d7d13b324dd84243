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

#ifndef VCLOCAL_ANALYSIS_HPP_
#define VCLOCAL_ANALYSIS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vclocal/graph.hpp"
#include "vclocal/rational.hpp"
#include "vclocal/simulator.hpp"

namespace vclocal {

// True iff every edge of g has an endpoint in `cover`.
bool CheckCover(const PortGraph& g, std::span<const NodeId> cover);

struct PairComponent {
  enum class Kind { kPath, kCycle };

  Kind kind;
  // Path: from the smaller-id endpoint to the other end. Cycle: starts at the
  // smallest id and continues towards its smaller neighbour.
  std::vector<NodeId> nodes;
  std::uint32_t edge_count;
};

// The subgraph G1 = (V, P) of pair edges, and the decomposition of its
// non-isolated part G2 into paths and cycles.
struct PairGraph {
  std::uint32_t node_count = 0;
  std::vector<Edge> edges;             // P, sorted
  std::vector<std::uint32_t> degree;   // degree in G1
  std::vector<NodeId> non_isolated;    // node set of G2, sorted
  std::vector<PairComponent> components;
};

// Decomposes an arbitrary edge set into path and cycle components. Throws
// AnalysisFault("g1-max-degree-2") if some node has degree > 2.
PairGraph DecomposePairGraph(std::uint32_t node_count, std::vector<Edge> edges);

// Builds G1 and G2 for a finished run and checks the structural claims:
// P is a subset of E, G1 has maximum degree 2, its non-isolated nodes are
// exactly the cover, and the components are paths or cycles partitioning
// the cover. Any failure throws AnalysisFault naming the claim.
PairGraph BuildPairGraphs(const PortGraph& g, const CoverResult& result);

// Per-instance lower bound on the minimum cover. A path with m edges needs
// ceil(m/2) cover nodes; a cycle is first cut into a path by dropping its
// lexicographically smallest edge. Components are vertex-disjoint, so the
// bounds add up.
struct Certificate {
  std::uint32_t lower_bound = 0;
  std::uint32_t cover_size = 0;
  std::optional<Rational> certified_ratio;  // cover_size / lower_bound
  std::vector<Edge> dropped_cycle_edges;

  bool WithinFactor(std::uint32_t factor) const {
    return std::uint64_t{cover_size} <= std::uint64_t{factor} * lower_bound;
  }
};

std::uint32_t ComponentLowerBound(const PairComponent& component);

// Throws AnalysisFault("certified-ratio-le-3") if the bound is 0 for a
// non-empty cover.
Certificate Certify(const PairGraph& pairs, std::uint32_t cover_size);

}  // namespace vclocal

#endif  // VCLOCAL_ANALYSIS_HPP_
