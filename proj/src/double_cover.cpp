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

#include "vclocal/double_cover.hpp"

#include <algorithm>
#include <string>

#include "vclocal/errors.hpp"

namespace vclocal {
namespace {

constexpr NodeId kUnmatched = UINT32_MAX;
constexpr const char* kCheck = "double-cover-maximal-matching";

std::string Name(const DoubleCover& h, NodeId x) {
  return std::string(h.colour(x) == Colour::kBlack ? "B(" : "W(") +
         std::to_string(h.original(x)) + ")";
}

}  // namespace

DoubleCover::DoubleCover(const PortGraph& g) : base_(g) {
  const std::uint32_t n = g.node_count();
  colour_.assign(2 * std::size_t{n}, Colour::kBlack);
  original_.resize(2 * std::size_t{n});
  adj_.resize(2 * std::size_t{n});
  for (NodeId v = 0; v < n; ++v) {
    colour_[white(v)] = Colour::kWhite;
    original_[black(v)] = v;
    original_[white(v)] = v;
  }
  for (const Edge& e : g.edges()) {
    edges_.push_back({black(e.first), white(e.second)});
    edges_.push_back({black(e.second), white(e.first)});
  }
  std::sort(edges_.begin(), edges_.end());
  for (const CoverEdge& e : edges_) {
    adj_[e.black].push_back(e.white);
    adj_[e.white].push_back(e.black);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
  mate_.assign(2 * std::size_t{n}, kUnmatched);
}

std::optional<NodeId> DoubleCover::mate(NodeId h) const {
  if (mate_[h] == kUnmatched) return std::nullopt;
  return mate_[h];
}

void DoubleCover::SetMatching(std::vector<CoverEdge> matching) {
  std::sort(matching.begin(), matching.end());
  std::vector<NodeId> mate(colour_.size(), kUnmatched);
  for (const CoverEdge& e : matching) {
    if (e.black >= colour_.size() || e.white >= colour_.size() ||
        colour_[e.black] != Colour::kBlack || colour_[e.white] != Colour::kWhite ||
        !std::binary_search(edges_.begin(), edges_.end(), e)) {
      throw AnalysisFault(kCheck, "matched pair is not an edge of the double cover");
    }
    for (NodeId x : {e.black, e.white}) {
      if (mate[x] != kUnmatched) {
        throw AnalysisFault(kCheck, Name(*this, x) + " is matched twice");
      }
    }
    mate[e.black] = e.white;
    mate[e.white] = e.black;
  }
  matching_ = std::move(matching);
  mate_ = std::move(mate);
}

std::optional<CoverEdge> DoubleCover::FindAugmentableEdge() const {
  for (const CoverEdge& e : edges_) {
    if (mate_[e.black] == kUnmatched && mate_[e.white] == kUnmatched) return e;
  }
  return std::nullopt;
}

DoubleCover BuildDoubleCover(const PortGraph& g) { return DoubleCover(g); }

DoubleCover ExtractMatching(DoubleCover h, const Transcript& transcript) {
  const PortGraph& g = h.base();
  const auto& entries = transcript.entries;
  std::vector<CoverEdge> matching;
  for (const TranscriptEntry& e : entries) {
    if (e.kind != MessageKind::kAccept) continue;
    if (e.sender >= g.node_count() || e.port < 1 || e.port > g.degree(e.sender)) {
      throw AnalysisFault(kCheck, "ACCEPT on a nonexistent port");
    }
    // The acceptor answers through the port the proposal arrived on.
    const NodeId acceptor = e.sender;
    const PortEnd proposer = g.at(acceptor, e.port);
    const TranscriptEntry proposal{e.step - 1, proposer.node, proposer.port, MessageKind::kPropose};
    if (e.step < 2 || !std::binary_search(entries.begin(), entries.end(), proposal)) {
      throw AnalysisFault(kCheck, "ACCEPT at step " + std::to_string(e.step) + " from node " +
                                      std::to_string(acceptor) + " answers no proposal");
    }
    matching.push_back({h.black(proposer.node), h.white(acceptor)});
  }
  h.SetMatching(std::move(matching));
  if (const auto free_edge = h.FindAugmentableEdge()) {
    throw AnalysisFault(kCheck, "matching is not maximal: " + Name(h, free_edge->black) + "-" +
                                    Name(h, free_edge->white) + " has both ends unmatched");
  }
  return h;
}

std::vector<NodeId> ProjectCover(const DoubleCover& h) {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < h.base().node_count(); ++v) {
    if (h.mate(h.black(v)) || h.mate(h.white(v))) out.push_back(v);
  }
  return out;
}

std::vector<Edge> ProjectMatching(const DoubleCover& h) {
  std::vector<Edge> out;
  for (const CoverEdge& e : h.matching()) out.emplace_back(h.original(e.black), h.original(e.white));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace vclocal
