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

#ifndef VCLOCAL_NODE_PROGRAM_HPP_
#define VCLOCAL_NODE_PROGRAM_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "vclocal/graph.hpp"

namespace vclocal {

// The per-node half of the local vertex cover algorithm. A node sees only its
// own degree, its state and the messages delivered to its ports; it never
// learns node identifiers.
//
// Odd time steps: collect the answer to the pending proposal, then propose to
// the next port. Even time steps: answer all proposals, accepting the one on
// the lowest port if no proposal has been accepted before.

enum class MessageKind : std::uint8_t { kPropose, kAccept, kReject };

std::string_view ToString(MessageKind kind);
std::optional<MessageKind> ParseMessageKind(std::string_view name);

// A message as seen by one node: the local port it arrived on or leaves by.
struct PortMessage {
  Port port;
  MessageKind kind;

  friend bool operator==(const PortMessage&, const PortMessage&) = default;
};

struct NodeState {
  // Port whose proposal was accepted (outgoing); never changes once set.
  std::optional<Port> accepted_out;
  // Port whose proposal this node accepted (incoming); never changes once set.
  std::optional<Port> accepted_in;
  // Proposal scan position, 0 <= next_port <= degree + 1.
  std::uint32_t next_port = 0;
  bool in_cover = false;
  std::uint32_t degree = 0;

  static NodeState Initial(std::uint32_t degree) { return NodeState{{}, {}, 0, false, degree}; }

  friend bool operator==(const NodeState&, const NodeState&) = default;
};

// Strict mode throws ProtocolFault on any delivery the protocol cannot
// produce; lenient mode drops such messages and carries on.
enum class FaultMode { kStrict, kLenient };

struct OddStepResult {
  NodeState state;
  std::optional<PortMessage> outbox;
};

struct EvenStepResult {
  NodeState state;
  std::vector<PortMessage> outbox;  // ascending port order
};

// `inbox` is the answer to the pending proposal, if any.
OddStepResult OddStep(const NodeState& state, std::optional<PortMessage> inbox,
                      FaultMode mode = FaultMode::kStrict);

// `inbox` holds the proposals delivered this step, in any order.
EvenStepResult EvenStep(const NodeState& state, std::span<const PortMessage> inbox,
                        FaultMode mode = FaultMode::kStrict);

}  // namespace vclocal

#endif  // VCLOCAL_NODE_PROGRAM_HPP_
