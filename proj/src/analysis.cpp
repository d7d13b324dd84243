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

#include "vclocal/analysis.hpp"

#include <algorithm>
#include <string>

#include "vclocal/errors.hpp"

namespace vclocal {

bool CheckCover(const PortGraph& g, std::span<const NodeId> cover) {
  std::vector<bool> in(g.node_count(), false);
  for (NodeId v : cover) {
    if (v < g.node_count()) in[v] = true;
  }
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (in[v]) continue;
    for (const PortEnd& end : g.ports(v)) {
      if (!in[end.node]) return false;
    }
  }
  return true;
}

PairGraph DecomposePairGraph(std::uint32_t node_count, std::vector<Edge> edges) {
  PairGraph pg;
  pg.node_count = node_count;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  pg.edges = std::move(edges);
  pg.degree.assign(node_count, 0);

  std::vector<std::vector<NodeId>> adj(node_count);
  for (const Edge& e : pg.edges) {
    if (e.second >= node_count || e.first == e.second) {
      throw AnalysisFault("components-paths-or-cycles",
                          "pair edge {" + std::to_string(e.first) + "," +
                              std::to_string(e.second) + "} is not a simple edge on the nodes");
    }
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  for (NodeId v = 0; v < node_count; ++v) {
    pg.degree[v] = static_cast<std::uint32_t>(adj[v].size());
    if (pg.degree[v] > 2) {
      throw AnalysisFault("g1-max-degree-2", "node " + std::to_string(v) + " has " +
                                                 std::to_string(pg.degree[v]) + " pair edges");
    }
    if (pg.degree[v] > 0) pg.non_isolated.push_back(v);
    std::sort(adj[v].begin(), adj[v].end());
  }

  std::vector<bool> seen(node_count, false);
  for (NodeId root : pg.non_isolated) {
    if (seen[root]) continue;
    // Gather the component, then walk it in canonical order.
    std::vector<NodeId> members{root};
    seen[root] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (NodeId u : adj[members[i]]) {
        if (!seen[u]) {
          seen[u] = true;
          members.push_back(u);
        }
      }
    }
    std::uint32_t degree_sum = 0;
    std::optional<NodeId> start;
    for (NodeId v : members) {
      degree_sum += pg.degree[v];
      if (pg.degree[v] == 1 && (!start || v < *start)) start = v;
    }
    PairComponent component;
    component.edge_count = degree_sum / 2;
    const auto k = static_cast<std::uint32_t>(members.size());
    if (start && component.edge_count == k - 1) {
      component.kind = PairComponent::Kind::kPath;
    } else if (!start && component.edge_count == k) {
      component.kind = PairComponent::Kind::kCycle;
      start = *std::min_element(members.begin(), members.end());
    } else {
      throw AnalysisFault("components-paths-or-cycles",
                          "component containing node " + std::to_string(root) +
                              " is neither a path nor a cycle");
    }
    constexpr NodeId kNone = UINT32_MAX;
    NodeId prev = kNone;
    NodeId cur = *start;
    component.nodes.push_back(cur);
    while (component.nodes.size() < k) {
      const NodeId next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
      prev = cur;
      cur = next;
      component.nodes.push_back(cur);
    }
    pg.components.push_back(std::move(component));
  }
  return pg;
}

PairGraph BuildPairGraphs(const PortGraph& g, const CoverResult& result) {
  for (const Edge& e : result.pair_edges) {
    if (e.second >= g.node_count() || !g.has_edge(e.first, e.second)) {
      throw AnalysisFault("pair-symmetry", "pair {" + std::to_string(e.first) + "," +
                                               std::to_string(e.second) + "} is not an edge");
    }
  }
  PairGraph pg = DecomposePairGraph(g.node_count(), result.pair_edges);

  if (pg.non_isolated != result.cover) {
    throw AnalysisFault("g1-nonisolated-equals-C",
                        "G1 has " + std::to_string(pg.non_isolated.size()) +
                            " non-isolated nodes, cover has " +
                            std::to_string(result.cover.size()));
  }

  std::vector<std::uint32_t> hits(g.node_count(), 0);
  std::size_t covered = 0;
  for (const PairComponent& c : pg.components) {
    const std::size_t expected_nodes =
        c.kind == PairComponent::Kind::kPath ? c.edge_count + 1 : c.edge_count;
    if (c.edge_count < 1 || c.nodes.size() != expected_nodes) {
      throw AnalysisFault("components-paths-or-cycles", "component starting at node " +
                                                            std::to_string(c.nodes.front()) +
                                                            " has inconsistent size");
    }
    for (NodeId v : c.nodes) {
      if (hits[v]++ > 0) {
        throw AnalysisFault("components-paths-or-cycles",
                            "node " + std::to_string(v) + " lies in two components");
      }
    }
    covered += c.nodes.size();
  }
  if (covered != result.cover.size()) {
    throw AnalysisFault("components-paths-or-cycles", "components do not partition the cover");
  }
  return pg;
}

std::uint32_t ComponentLowerBound(const PairComponent& component) {
  const std::uint32_t m = component.kind == PairComponent::Kind::kCycle
                              ? component.edge_count - 1
                              : component.edge_count;
  return (m + 1) / 2;
}

Certificate Certify(const PairGraph& pairs, std::uint32_t cover_size) {
  Certificate cert;
  cert.cover_size = cover_size;
  for (const PairComponent& c : pairs.components) {
    cert.lower_bound += ComponentLowerBound(c);
    if (c.kind == PairComponent::Kind::kCycle) {
      Edge dropped(c.nodes.back(), c.nodes.front());
      for (std::size_t i = 0; i + 1 < c.nodes.size(); ++i) {
        dropped = std::min(dropped, Edge(c.nodes[i], c.nodes[i + 1]));
      }
      cert.dropped_cycle_edges.push_back(dropped);
    }
  }
  if (cert.lower_bound == 0 && cover_size > 0) {
    throw AnalysisFault("certified-ratio-le-3",
                        "lower bound is 0 for a cover of size " + std::to_string(cover_size));
  }
  if (cert.lower_bound > 0) cert.certified_ratio = Rational(cover_size, cert.lower_bound);
  return cert;
}

}  // namespace vclocal
