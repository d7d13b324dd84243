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

#include "vclocal/exact_oracle.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>

#include "vclocal/errors.hpp"

namespace vclocal {
namespace {

using Mask = std::uint64_t;

constexpr Mask Bit(NodeId v) { return Mask{1} << v; }

std::vector<NodeId> Members(Mask m) {
  std::vector<NodeId> out;
  while (m != 0) {
    out.push_back(static_cast<NodeId>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

std::vector<Mask> AdjacencyMasks(const PortGraph& g) {
  std::vector<Mask> adj(g.node_count(), 0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (const PortEnd& end : g.ports(v)) adj[v] |= Bit(end.node);
  }
  return adj;
}

class BranchAndBound {
 public:
  BranchAndBound(std::vector<Mask> adj, std::uint64_t node_limit)
      : adj_(std::move(adj)), node_limit_(node_limit) {
    for (NodeId v = 0; v < adj_.size(); ++v) {
      if (adj_[v] != 0) best_cover_ |= Bit(v);
    }
    best_size_ = static_cast<std::uint32_t>(std::popcount(best_cover_));
  }

  void Search(Mask alive, Mask chosen, std::uint32_t size) {
    if (++explored_ > node_limit_) {
      throw OracleRefusal("search budget of " + std::to_string(node_limit_) +
                              " nodes exhausted; best cover so far has " +
                              std::to_string(best_size_) + " nodes",
                          best_size_);
    }
    // Residual degrees; a degree-1 node can always leave its neighbour to
    // cover their edge.
    NodeId pick = 0;
    int pick_degree = 0;
    std::optional<NodeId> leaf;
    for (Mask rest = alive; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<NodeId>(std::countr_zero(rest));
      const int d = std::popcount(adj_[v] & alive);
      if (d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
      if (d == 1 && !leaf) leaf = v;
    }
    if (pick_degree == 0) {
      if (size < best_size_) {
        best_size_ = size;
        best_cover_ = chosen;
      }
      return;
    }
    if (size + GreedyMatching(alive) >= best_size_) return;

    if (leaf) {
      const auto u = static_cast<NodeId>(std::countr_zero(adj_[*leaf] & alive));
      Search(alive & ~Bit(u) & ~Bit(*leaf), chosen | Bit(u), size + 1);
      return;
    }
    Search(alive & ~Bit(pick), chosen | Bit(pick), size + 1);
    const Mask others = adj_[pick] & alive;
    Search(alive & ~Bit(pick) & ~others, chosen | others,
           size + static_cast<std::uint32_t>(std::popcount(others)));
  }

  std::uint32_t best_size() const { return best_size_; }
  Mask best_cover() const { return best_cover_; }
  std::uint64_t explored() const { return explored_; }

 private:
  // Size of a greedy maximal matching among alive nodes: every cover of the
  // residual graph needs at least this many more nodes.
  std::uint32_t GreedyMatching(Mask alive) const {
    std::uint32_t count = 0;
    while (alive != 0) {
      const auto v = static_cast<NodeId>(std::countr_zero(alive));
      alive &= ~Bit(v);
      const Mask nb = adj_[v] & alive;
      if (nb != 0) {
        alive &= ~(nb & -nb);
        ++count;
      }
    }
    return count;
  }

  std::vector<Mask> adj_;
  std::uint64_t node_limit_;
  std::uint64_t explored_ = 0;
  std::uint32_t best_size_ = 0;
  Mask best_cover_ = 0;
};

}  // namespace

OracleResult SolveExact(const PortGraph& g, const OracleOptions& options) {
  const std::uint32_t cap = std::min(options.max_nodes, kOracleNodeCeiling);
  if (g.node_count() > cap) {
    throw OracleRefusal("graph has " + std::to_string(g.node_count()) +
                            " nodes, above the exact-solver cap of " + std::to_string(cap) +
                            "; use the certificate instead",
                        g.node_count());
  }
  BranchAndBound search(AdjacencyMasks(g), options.node_limit);
  const Mask all = g.node_count() == 64 ? ~Mask{0} : Bit(g.node_count()) - 1;
  search.Search(all, 0, 0);
  return {search.best_size(), Members(search.best_cover()), search.explored()};
}

OracleResult BruteForce(const PortGraph& g) {
  constexpr std::uint32_t kMaxNodes = 20;
  const std::uint32_t n = g.node_count();
  if (n > kMaxNodes) {
    throw OracleRefusal("brute force is limited to " + std::to_string(kMaxNodes) + " nodes", n);
  }
  const auto edges = g.edges();
  auto covers = [&](Mask m) {
    return std::all_of(edges.begin(), edges.end(), [m](const Edge& e) {
      return (m & (Bit(e.first) | Bit(e.second))) != 0;
    });
  };

  OracleResult out;
  for (std::uint32_t k = 0; k <= n; ++k) {
    if (k == 0) {
      ++out.explored_nodes;
      if (covers(0)) return out;
      continue;
    }
    // Gosper's hack: all k-subsets of n bits in increasing numeric order.
    const Mask limit = Bit(n);
    for (Mask m = Bit(k) - 1; m < limit;) {
      ++out.explored_nodes;
      if (covers(m)) {
        out.optimum_size = k;
        out.optimum_cover = Members(m);
        return out;
      }
      const Mask c = m & -m;
      const Mask r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  return out;  // unreachable: the full node set is a cover
}

}  // namespace vclocal
