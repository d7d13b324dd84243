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

#ifndef VCLOCAL_GRAPH_HPP_
#define VCLOCAL_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vclocal {

using NodeId = std::uint32_t;
// Port numbers are 1-based everywhere in the public interface: node v has
// ports 1..d(v).
using Port = std::uint32_t;

// Unordered node pair, always stored with first < second.
struct Edge {
  NodeId first;
  NodeId second;

  Edge() = default;
  Edge(NodeId u, NodeId v) : first(u < v ? u : v), second(u < v ? v : u) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeList {
  std::uint32_t node_count = 0;
  std::vector<Edge> edges;
};

// Where a port leads: the neighbour and the neighbour's port for the same edge.
struct PortEnd {
  NodeId node;
  Port port;

  friend bool operator==(const PortEnd&, const PortEnd&) = default;
};

// Unchecked port assignment, one row per node. Entries carry explicit port
// numbers so that malformed tables (gaps, bad reciprocity) are representable
// and can be diagnosed by Validate().
struct PortEntry {
  Port port;
  NodeId neighbour;
  Port neighbour_port;
};
using PortTable = std::vector<std::vector<PortEntry>>;

struct Violation {
  enum class Kind { kNodeRange, kPortRange, kSelfLoop, kParallelEdge, kReciprocity };

  Kind kind;
  NodeId node;
  Port port;  // 0 when the violation concerns the whole node
  std::string message;
};

std::vector<Violation> Validate(const PortTable& table);

enum class NumberingPolicy {
  kSorted,  // ascending neighbour id
  kInput,   // order of first appearance in the edge list
  kRandom,  // seeded shuffle per node
};

// Simple undirected graph whose incident edges are ordered by port numbers.
// Immutable once built; every instance satisfies the reciprocity, simplicity
// and port-range invariants.
class PortGraph {
 public:
  PortGraph() = default;

  // Throws GraphError listing the violations if `table` is not a valid graph.
  static PortGraph FromTable(const PortTable& table);

  std::uint32_t node_count() const {
    return static_cast<std::uint32_t>(ports_.size());
  }
  std::uint32_t degree(NodeId v) const {
    return static_cast<std::uint32_t>(ports_[v].size());
  }
  std::uint32_t max_degree() const { return max_degree_; }
  std::uint32_t edge_count() const { return edge_count_; }

  // Endpoint reached through port `port` (1-based) of node v.
  const PortEnd& at(NodeId v, Port port) const { return ports_[v][port - 1]; }
  // All ports of v; element j-1 describes port j.
  std::span<const PortEnd> ports(NodeId v) const { return ports_[v]; }

  // Port of u leading to v, if the edge exists. O(d(u)).
  std::optional<Port> port_to(NodeId u, NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const { return port_to(u, v).has_value(); }

  // Sorted unordered edge set.
  std::vector<Edge> edges() const;
  EdgeList edge_list() const { return {node_count(), edges()}; }
  PortTable table() const;

  friend bool operator==(const PortGraph& a, const PortGraph& b) {
    return a.ports_ == b.ports_;
  }

 private:
  explicit PortGraph(std::vector<std::vector<PortEnd>> ports);

  std::vector<std::vector<PortEnd>> ports_;
  std::uint32_t max_degree_ = 0;
  std::uint32_t edge_count_ = 0;
};

std::vector<Violation> Validate(const PortGraph& g);

// Throws GraphError on out-of-range ids, self-loops or duplicate pairs, and
// when kRandom is requested without a seed.
PortGraph FromEdgeList(const EdgeList& edges, NumberingPolicy policy,
                       std::optional<std::uint64_t> seed = std::nullopt);

// Independently shuffles the port order of every node.
PortGraph PermutePorts(const PortGraph& g, std::uint64_t seed);

// Renames node v to perm[v], keeping every node's port order. The result is
// isomorphic to g as a port-numbered structure.
PortGraph RelabelNodes(const PortGraph& g, std::span<const NodeId> perm);

std::string ToString(NumberingPolicy policy);
std::optional<NumberingPolicy> ParseNumberingPolicy(std::string_view name);

}  // namespace vclocal

#endif  // VCLOCAL_GRAPH_HPP_
