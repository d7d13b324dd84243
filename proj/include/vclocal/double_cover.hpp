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

#ifndef VCLOCAL_DOUBLE_COVER_HPP_
#define VCLOCAL_DOUBLE_COVER_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vclocal/graph.hpp"
#include "vclocal/simulator.hpp"

namespace vclocal {

enum class Colour : std::uint8_t { kBlack, kWhite };

// Edge of the double cover, always black endpoint first.
struct CoverEdge {
  NodeId black;
  NodeId white;

  friend auto operator<=>(const CoverEdge&, const CoverEdge&) = default;
};

// Bipartite double cover H of a graph G: every node v of G becomes a black
// copy B(v) = v and a white copy W(v) = v + n, and each edge {u, v} of G
// becomes the two edges {B(u), W(v)} and {B(v), W(u)}. Optionally carries a
// matching of H.
class DoubleCover {
 public:
  explicit DoubleCover(const PortGraph& g);

  const PortGraph& base() const { return base_; }
  std::uint32_t node_count() const { return static_cast<std::uint32_t>(colour_.size()); }
  NodeId black(NodeId v) const { return v; }
  NodeId white(NodeId v) const { return v + base_.node_count(); }
  Colour colour(NodeId h) const { return colour_[h]; }
  // The node of G that h is a copy of.
  NodeId original(NodeId h) const { return original_[h]; }

  std::span<const NodeId> neighbours(NodeId h) const { return adj_[h]; }
  const std::vector<CoverEdge>& edges() const { return edges_; }

  const std::vector<CoverEdge>& matching() const { return matching_; }
  // Partner of h in the matching, if matched.
  std::optional<NodeId> mate(NodeId h) const;

  // Replaces the matching. Throws AnalysisFault("double-cover-maximal-matching")
  // if an edge is not in H or two edges share an endpoint.
  void SetMatching(std::vector<CoverEdge> matching);

  // An edge of H with both endpoints unmatched, if any.
  std::optional<CoverEdge> FindAugmentableEdge() const;

 private:
  PortGraph base_;
  std::vector<Colour> colour_;
  std::vector<NodeId> original_;
  std::vector<std::vector<NodeId>> adj_;
  std::vector<CoverEdge> edges_;
  std::vector<CoverEdge> matching_;
  std::vector<NodeId> mate_;
};

DoubleCover BuildDoubleCover(const PortGraph& g);

// Reads the matching off a run's transcript: {B(u), W(v)} is matched iff v
// sent ACCEPT in answer to u's PROPOSE. Checks that the result is a maximal
// matching of H; a violation throws AnalysisFault("double-cover-maximal-matching").
DoubleCover ExtractMatching(DoubleCover h, const Transcript& transcript);

// Nodes of G with a matched black or white copy, sorted.
std::vector<NodeId> ProjectCover(const DoubleCover& h);

// Image of the matching in G: {B(u), W(v)} maps to {u, v}. Sorted, deduplicated.
std::vector<Edge> ProjectMatching(const DoubleCover& h);

}  // namespace vclocal

#endif  // VCLOCAL_DOUBLE_COVER_HPP_
