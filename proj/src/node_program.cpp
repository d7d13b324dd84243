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

#include "vclocal/node_program.hpp"

#include <algorithm>
#include <string>

#include "vclocal/errors.hpp"

namespace vclocal {

std::string_view ToString(MessageKind kind) {
  switch (kind) {
    case MessageKind::kPropose:
      return "PROPOSE";
    case MessageKind::kAccept:
      return "ACCEPT";
    case MessageKind::kReject:
      return "REJECT";
  }
  return "?";
}

std::optional<MessageKind> ParseMessageKind(std::string_view name) {
  if (name == "PROPOSE") return MessageKind::kPropose;
  if (name == "ACCEPT") return MessageKind::kAccept;
  if (name == "REJECT") return MessageKind::kReject;
  return std::nullopt;
}

OddStepResult OddStep(const NodeState& state, std::optional<PortMessage> inbox,
                      FaultMode mode) {
  NodeState next = state;
  const bool scanning = !next.accepted_out.has_value();
  const bool awaiting = scanning && next.next_port >= 1 && next.next_port <= next.degree;

  if (inbox) {
    std::string fault;
    if (inbox->kind == MessageKind::kPropose) {
      fault = "PROPOSE delivered at an odd step on port " + std::to_string(inbox->port);
    } else if (!awaiting) {
      fault = "unsolicited " + std::string(ToString(inbox->kind)) + " on port " +
              std::to_string(inbox->port);
    } else if (inbox->port != next.next_port) {
      fault = std::string(ToString(inbox->kind)) + " on port " + std::to_string(inbox->port) +
              " while awaiting port " + std::to_string(next.next_port);
    }
    if (!fault.empty()) {
      if (mode == FaultMode::kStrict) throw ProtocolFault(fault);
      inbox.reset();
    }
  }

  // Read the answer to the pending proposal. A REJECT has no effect.
  if (awaiting && inbox && inbox->kind == MessageKind::kAccept) {
    next.accepted_out = next.next_port;
    next.in_cover = true;
  }
  // Advance the scan, then propose on the new port while it is in range.
  if (!next.accepted_out && next.next_port <= next.degree) ++next.next_port;
  OddStepResult result{next, std::nullopt};
  if (!next.accepted_out && next.next_port <= next.degree) {
    result.outbox = PortMessage{next.next_port, MessageKind::kPropose};
  }
  return result;
}

EvenStepResult EvenStep(const NodeState& state, std::span<const PortMessage> inbox,
                        FaultMode mode) {
  std::vector<Port> proposals;
  proposals.reserve(inbox.size());
  for (const PortMessage& msg : inbox) {
    std::string fault;
    if (msg.kind != MessageKind::kPropose) {
      fault = std::string(ToString(msg.kind)) + " delivered at an even step on port " +
              std::to_string(msg.port);
    } else if (msg.port < 1 || msg.port > state.degree) {
      fault = "PROPOSE on nonexistent port " + std::to_string(msg.port);
    }
    if (!fault.empty()) {
      if (mode == FaultMode::kStrict) throw ProtocolFault(fault);
      continue;
    }
    proposals.push_back(msg.port);
  }
  std::sort(proposals.begin(), proposals.end());
  if (auto dup = std::adjacent_find(proposals.begin(), proposals.end()); dup != proposals.end()) {
    if (mode == FaultMode::kStrict) {
      throw ProtocolFault("two proposals delivered on port " + std::to_string(*dup));
    }
    proposals.erase(std::unique(proposals.begin(), proposals.end()), proposals.end());
  }

  EvenStepResult result{state, {}};
  result.outbox.reserve(proposals.size());
  for (Port port : proposals) {
    if (!result.state.accepted_in) {
      result.state.accepted_in = port;
      result.state.in_cover = true;
      result.outbox.push_back({port, MessageKind::kAccept});
    } else {
      result.outbox.push_back({port, MessageKind::kReject});
    }
  }
  return result;
}

}  // namespace vclocal
