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

#include "vclocal/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "vclocal/errors.hpp"

namespace vclocal {
namespace {

using Adjacency = std::vector<std::vector<NodeId>>;

std::string Describe(const std::vector<Violation>& violations) {
  std::ostringstream out;
  out << "invalid port table (" << violations.size() << " violation"
      << (violations.size() == 1 ? "" : "s") << ")";
  constexpr std::size_t kShown = 5;
  for (std::size_t i = 0; i < violations.size() && i < kShown; ++i) {
    out << "; " << violations[i].message;
  }
  return out.str();
}

// Turns neighbour lists (position j-1 = port j) into a port graph table by
// looking up each reciprocal port. Neighbour lists must describe a simple
// undirected graph.
PortTable TableFromAdjacency(const Adjacency& adj) {
  std::vector<std::vector<std::pair<NodeId, Port>>> index(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) {
    auto& row = index[v];
    row.reserve(adj[v].size());
    for (std::size_t j = 0; j < adj[v].size(); ++j) {
      row.emplace_back(adj[v][j], static_cast<Port>(j + 1));
    }
    std::sort(row.begin(), row.end());
  }
  PortTable table(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) {
    table[v].reserve(adj[v].size());
    for (std::size_t j = 0; j < adj[v].size(); ++j) {
      const NodeId u = adj[v][j];
      const auto& row = index[u];
      auto it = std::lower_bound(row.begin(), row.end(),
                                 std::pair<NodeId, Port>{static_cast<NodeId>(v), 0});
      table[v].push_back({static_cast<Port>(j + 1), u, it->second});
    }
  }
  return table;
}

Adjacency AdjacencyOf(const PortGraph& g) {
  Adjacency adj(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (const PortEnd& end : g.ports(v)) adj[v].push_back(end.node);
  }
  return adj;
}

void ShufflePorts(Adjacency& adj, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (auto& row : adj) std::shuffle(row.begin(), row.end(), rng);
}

}  // namespace

std::vector<Violation> Validate(const PortTable& table) {
  std::vector<Violation> out;
  const auto n = table.size();

  // Per node, entries ordered by port number for reciprocal lookups.
  std::vector<std::vector<const PortEntry*>> by_port(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (const PortEntry& e : table[v]) by_port[v].push_back(&e);
    std::sort(by_port[v].begin(), by_port[v].end(),
              [](const PortEntry* a, const PortEntry* b) { return a->port < b->port; });
  }
  auto find = [&](NodeId u, Port k) -> const PortEntry* {
    const auto& row = by_port[u];
    auto it = std::lower_bound(row.begin(), row.end(), k,
                               [](const PortEntry* e, Port p) { return e->port < p; });
    return it != row.end() && (*it)->port == k ? *it : nullptr;
  };

  for (std::size_t vi = 0; vi < n; ++vi) {
    const auto v = static_cast<NodeId>(vi);
    const auto& row = by_port[v];
    const auto d = static_cast<Port>(row.size());

    for (std::size_t j = 0; j < row.size(); ++j) {
      const Port expected = static_cast<Port>(j + 1);
      if (row[j]->port != expected) {
        std::ostringstream msg;
        msg << "port-range gap at node " << v << ": expected port " << expected
            << ", found " << row[j]->port << " (degree " << d << ")";
        out.push_back({Violation::Kind::kPortRange, v, row[j]->port, msg.str()});
        break;
      }
    }

    std::vector<NodeId> neighbours;
    for (const PortEntry* e : row) {
      if (e->neighbour >= n) {
        std::ostringstream msg;
        msg << "node-range violation at (" << v << "," << e->port << "): neighbour "
            << e->neighbour << " >= " << n;
        out.push_back({Violation::Kind::kNodeRange, v, e->port, msg.str()});
        continue;
      }
      if (e->neighbour == v) {
        std::ostringstream msg;
        msg << "self-loop at (" << v << "," << e->port << ")";
        out.push_back({Violation::Kind::kSelfLoop, v, e->port, msg.str()});
        continue;
      }
      neighbours.push_back(e->neighbour);
      const PortEntry* back = find(e->neighbour, e->neighbour_port);
      if (back == nullptr || back->neighbour != v || back->neighbour_port != e->port) {
        std::ostringstream msg;
        msg << "reciprocity violation at (" << v << "," << e->port << ")";
        out.push_back({Violation::Kind::kReciprocity, v, e->port, msg.str()});
      }
    }
    std::sort(neighbours.begin(), neighbours.end());
    for (std::size_t j = 1; j < neighbours.size(); ++j) {
      if (neighbours[j] == neighbours[j - 1] &&
          (j == 1 || neighbours[j - 2] != neighbours[j])) {
        std::ostringstream msg;
        msg << "parallel edge at node " << v << " towards " << neighbours[j];
        out.push_back({Violation::Kind::kParallelEdge, v, 0, msg.str()});
      }
    }
  }
  return out;
}

PortGraph::PortGraph(std::vector<std::vector<PortEnd>> ports) : ports_(std::move(ports)) {
  std::uint64_t half_edges = 0;
  for (const auto& row : ports_) {
    max_degree_ = std::max(max_degree_, static_cast<std::uint32_t>(row.size()));
    half_edges += row.size();
  }
  edge_count_ = static_cast<std::uint32_t>(half_edges / 2);
}

PortGraph PortGraph::FromTable(const PortTable& table) {
  if (auto violations = Validate(table); !violations.empty()) {
    throw GraphError(Describe(violations));
  }
  std::vector<std::vector<PortEnd>> ports(table.size());
  for (std::size_t v = 0; v < table.size(); ++v) {
    ports[v].resize(table[v].size());
    for (const PortEntry& e : table[v]) {
      ports[v][e.port - 1] = {e.neighbour, e.neighbour_port};
    }
  }
  return PortGraph(std::move(ports));
}

std::optional<Port> PortGraph::port_to(NodeId u, NodeId v) const {
  const auto& row = ports_[u];
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j].node == v) return static_cast<Port>(j + 1);
  }
  return std::nullopt;
}

std::vector<Edge> PortGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId v = 0; v < node_count(); ++v) {
    for (const PortEnd& end : ports_[v]) {
      if (v < end.node) out.emplace_back(v, end.node);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PortTable PortGraph::table() const {
  PortTable table(ports_.size());
  for (std::size_t v = 0; v < ports_.size(); ++v) {
    for (std::size_t j = 0; j < ports_[v].size(); ++j) {
      table[v].push_back({static_cast<Port>(j + 1), ports_[v][j].node, ports_[v][j].port});
    }
  }
  return table;
}

std::vector<Violation> Validate(const PortGraph& g) { return Validate(g.table()); }

PortGraph FromEdgeList(const EdgeList& edges, NumberingPolicy policy,
                       std::optional<std::uint64_t> seed) {
  if (policy == NumberingPolicy::kRandom && !seed) {
    throw GraphError("random port numbering requires a seed");
  }
  const std::uint32_t n = edges.node_count;
  std::vector<Edge> seen;
  seen.reserve(edges.edges.size());
  for (const Edge& e : edges.edges) {
    if (e.first >= n || e.second >= n) {
      throw GraphError("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                       "} references a node outside [0," + std::to_string(n) + ")");
    }
    if (e.first == e.second) {
      throw GraphError("self-loop {" + std::to_string(e.first) + "," +
                       std::to_string(e.second) + "}");
    }
    seen.push_back(e);
  }
  std::sort(seen.begin(), seen.end());
  if (auto dup = std::adjacent_find(seen.begin(), seen.end()); dup != seen.end()) {
    throw GraphError("duplicate edge {" + std::to_string(dup->first) + "," +
                     std::to_string(dup->second) + "}");
  }

  Adjacency adj(n);
  for (const Edge& e : edges.edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  switch (policy) {
    case NumberingPolicy::kSorted:
      for (auto& row : adj) std::sort(row.begin(), row.end());
      break;
    case NumberingPolicy::kInput:
      break;
    case NumberingPolicy::kRandom:
      ShufflePorts(adj, *seed);
      break;
  }
  return PortGraph::FromTable(TableFromAdjacency(adj));
}

PortGraph PermutePorts(const PortGraph& g, std::uint64_t seed) {
  Adjacency adj = AdjacencyOf(g);
  ShufflePorts(adj, seed);
  return PortGraph::FromTable(TableFromAdjacency(adj));
}

PortGraph RelabelNodes(const PortGraph& g, std::span<const NodeId> perm) {
  const std::uint32_t n = g.node_count();
  if (perm.size() != n) throw GraphError("relabelling has wrong length");
  std::vector<bool> hit(n, false);
  for (NodeId target : perm) {
    if (target >= n || hit[target]) throw GraphError("relabelling is not a permutation");
    hit[target] = true;
  }
  PortTable table(n);
  for (NodeId v = 0; v < n; ++v) {
    auto& row = table[perm[v]];
    for (std::size_t j = 0; j < g.degree(v); ++j) {
      const PortEnd& end = g.ports(v)[j];
      row.push_back({static_cast<Port>(j + 1), perm[end.node], end.port});
    }
  }
  return PortGraph::FromTable(table);
}

std::string ToString(NumberingPolicy policy) {
  switch (policy) {
    case NumberingPolicy::kSorted:
      return "sorted";
    case NumberingPolicy::kInput:
      return "input";
    case NumberingPolicy::kRandom:
      return "random";
  }
  return "unknown";
}

std::optional<NumberingPolicy> ParseNumberingPolicy(std::string_view name) {
  if (name == "sorted") return NumberingPolicy::kSorted;
  if (name == "input") return NumberingPolicy::kInput;
  if (name == "random") return NumberingPolicy::kRandom;
  return std::nullopt;
}

}  // namespace vclocal
