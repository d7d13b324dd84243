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

#ifndef VCLOCAL_SIMULATOR_HPP_
#define VCLOCAL_SIMULATOR_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vclocal/graph.hpp"
#include "vclocal/node_program.hpp"

namespace vclocal {

// One message as sent: at time step `step`, node `sender` sent `kind` out of
// its port `port`. Ordered by (step, sender, port).
struct TranscriptEntry {
  std::uint32_t step;
  NodeId sender;
  Port port;
  MessageKind kind;

  friend auto operator<=>(const TranscriptEntry&, const TranscriptEntry&) = default;
};

struct Transcript {
  std::vector<TranscriptEntry> entries;  // sorted
  // Empty for transcripts read back from text.
  std::vector<NodeState> final_states;
  // Largest step at which a message was sent; 0 if none.
  std::uint32_t last_active_step = 0;

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

struct CoverResult {
  std::vector<NodeId> cover;    // sorted
  std::vector<Edge> pair_edges;  // sorted
  std::uint32_t rounds_run = 0;
  std::uint32_t last_active_step = 0;

  std::size_t cover_size() const { return cover.size(); }

  friend bool operator==(const CoverResult&, const CoverResult&) = default;
};

struct RunOutput {
  CoverResult result;
  Transcript transcript;
};

// Number of time steps the algorithm runs: 2*max_degree + 1 (1 for an
// edgeless graph).
std::uint32_t Horizon(const PortGraph& g);

// Synchronous engine for the anonymous port-numbering model. Time steps are
// 1-based and step 1 is odd. A message sent at step t through port j of v is
// delivered at step t+1 to the node across that port, labelled with the
// receiver's own port number. All transitions of a step read only messages
// sent in the previous step, so node evaluation order does not matter.
class Engine {
 public:
  explicit Engine(const PortGraph& g, FaultMode mode = FaultMode::kStrict);

  // Executes time step time() + 1. Throws ProtocolFault in strict mode.
  void Step();

  std::uint32_t time() const { return time_; }
  std::span<const NodeState> states() const { return states_; }
  // Messages sent during the most recent step, sorted by (sender, port).
  std::span<const TranscriptEntry> last_sent() const;
  const std::vector<TranscriptEntry>& entries() const { return entries_; }

 private:
  struct Delivery {
    NodeId receiver;
    PortMessage message;
  };

  const PortGraph& graph_;
  FaultMode mode_;
  std::uint32_t time_ = 0;
  std::vector<NodeState> states_;
  std::vector<Delivery> in_flight_;
  std::vector<TranscriptEntry> entries_;
  std::size_t last_step_begin_ = 0;
};

// Runs the algorithm for exactly Horizon(g) steps.
RunOutput Run(const PortGraph& g, FaultMode mode = FaultMode::kStrict);

// Pair edges {u, v}: a(v) leads to u and b(u) leads back to v. Both
// directions are checked; a dangling half throws AnalysisFault("pair-symmetry").
std::vector<Edge> PairEdges(const PortGraph& g, std::span<const NodeState> states);

// Runs to the horizon, then `extra_steps` more; true iff no message is sent
// and no state changes after the horizon.
bool SettledAtHorizon(const PortGraph& g, std::uint32_t extra_steps = 2);

struct ReplayDivergence {
  std::uint32_t step;
  NodeId node;
  Port port;
  std::string description;
};

// Re-derives every message from the transition functions, feeding each step
// the messages the transcript says were sent in the previous one. Empty iff
// the transcript is exactly what the algorithm produces on g.
std::vector<ReplayDivergence> Replay(const PortGraph& g, const Transcript& transcript);

// Line-oriented export, one "t v port KIND" line per entry.
std::string SerializeTranscript(const Transcript& transcript);
// Reads entries back; final_states stays empty. Throws ParseError.
Transcript ParseTranscript(std::string_view text);

}  // namespace vclocal

#endif  // VCLOCAL_SIMULATOR_HPP_
