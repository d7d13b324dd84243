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

#include "vclocal/simulator.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "vclocal/errors.hpp"

namespace vclocal {
namespace {

ProtocolFault WithContext(const ProtocolFault& fault, NodeId node, std::uint32_t step) {
  return ProtocolFault("node " + std::to_string(node) + ", step " + std::to_string(step) +
                       ": " + fault.what());
}

// Inboxes for one even step in compressed-row form.
struct EvenInboxes {
  std::vector<std::size_t> offsets;
  std::vector<PortMessage> messages;

  std::span<const PortMessage> of(NodeId v) const {
    return std::span(messages).subspan(offsets[v], offsets[v + 1] - offsets[v]);
  }
};

template <typename Deliveries, typename ReceiverOf, typename MessageOf>
EvenInboxes GroupByReceiver(std::uint32_t n, const Deliveries& deliveries,
                            ReceiverOf receiver_of, MessageOf message_of) {
  EvenInboxes inbox;
  inbox.offsets.assign(std::size_t{n} + 1, 0);
  for (const auto& d : deliveries) ++inbox.offsets[receiver_of(d) + 1];
  for (std::uint32_t v = 0; v < n; ++v) inbox.offsets[v + 1] += inbox.offsets[v];
  inbox.messages.resize(deliveries.size());
  std::vector<std::size_t> cursor(inbox.offsets.begin(), inbox.offsets.end() - 1);
  for (const auto& d : deliveries) inbox.messages[cursor[receiver_of(d)]++] = message_of(d);
  return inbox;
}

}  // namespace

std::uint32_t Horizon(const PortGraph& g) { return 2 * g.max_degree() + 1; }

Engine::Engine(const PortGraph& g, FaultMode mode) : graph_(g), mode_(mode) {
  states_.reserve(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) states_.push_back(NodeState::Initial(g.degree(v)));
}

std::span<const TranscriptEntry> Engine::last_sent() const {
  return std::span(entries_).subspan(last_step_begin_);
}

void Engine::Step() {
  const std::uint32_t t = time_ + 1;
  const std::uint32_t n = graph_.node_count();
  last_step_begin_ = entries_.size();
  std::vector<Delivery> next;

  auto send = [&](NodeId v, const PortMessage& msg) {
    entries_.push_back({t, v, msg.port, msg.kind});
    const PortEnd& end = graph_.at(v, msg.port);
    next.push_back({end.node, {end.port, msg.kind}});
  };

  if (t % 2 == 1) {
    std::vector<std::optional<PortMessage>> inbox(n);
    for (const Delivery& d : in_flight_) {
      if (inbox[d.receiver]) {
        if (mode_ == FaultMode::kStrict) {
          throw ProtocolFault("node " + std::to_string(d.receiver) + ", step " +
                              std::to_string(t) + ": more than one message at an odd step");
        }
        continue;
      }
      inbox[d.receiver] = d.message;
    }
    for (NodeId v = 0; v < n; ++v) {
      try {
        OddStepResult r = OddStep(states_[v], inbox[v], mode_);
        states_[v] = r.state;
        if (r.outbox) send(v, *r.outbox);
      } catch (const ProtocolFault& fault) {
        throw WithContext(fault, v, t);
      }
    }
  } else {
    const EvenInboxes inbox = GroupByReceiver(
        n, in_flight_, [](const Delivery& d) { return d.receiver; },
        [](const Delivery& d) { return d.message; });
    for (NodeId v = 0; v < n; ++v) {
      try {
        EvenStepResult r = EvenStep(states_[v], inbox.of(v), mode_);
        states_[v] = r.state;
        for (const PortMessage& msg : r.outbox) send(v, msg);
      } catch (const ProtocolFault& fault) {
        throw WithContext(fault, v, t);
      }
    }
  }
  in_flight_ = std::move(next);
  time_ = t;
}

std::vector<Edge> PairEdges(const PortGraph& g, std::span<const NodeState> states) {
  std::vector<Edge> pairs;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (const auto a = states[v].accepted_out) {
      const NodeId u = g.at(v, *a).node;
      const auto b = states[u].accepted_in;
      if (!b || g.at(u, *b).node != v) {
        throw AnalysisFault("pair-symmetry", "port a=" + std::to_string(*a) + " of node " +
                                                 std::to_string(v) + " leads to node " +
                                                 std::to_string(u) +
                                                 " whose b does not point back");
      }
      pairs.emplace_back(v, u);
    }
    if (const auto b = states[v].accepted_in) {
      const NodeId u = g.at(v, *b).node;
      const auto a = states[u].accepted_out;
      if (!a || g.at(u, *a).node != v) {
        throw AnalysisFault("pair-symmetry", "port b=" + std::to_string(*b) + " of node " +
                                                 std::to_string(v) + " leads to node " +
                                                 std::to_string(u) +
                                                 " whose a does not point back");
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

RunOutput Run(const PortGraph& g, FaultMode mode) {
  Engine engine(g, mode);
  const std::uint32_t horizon = Horizon(g);
  while (engine.time() < horizon) engine.Step();

  RunOutput out;
  out.transcript.entries = engine.entries();
  out.transcript.final_states.assign(engine.states().begin(), engine.states().end());
  out.transcript.last_active_step =
      out.transcript.entries.empty() ? 0 : out.transcript.entries.back().step;

  const auto& states = out.transcript.final_states;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (states[v].in_cover) out.result.cover.push_back(v);
  }
  out.result.pair_edges = PairEdges(g, states);
  out.result.rounds_run = engine.time();
  out.result.last_active_step = out.transcript.last_active_step;
  return out;
}

bool SettledAtHorizon(const PortGraph& g, std::uint32_t extra_steps) {
  Engine engine(g);
  const std::uint32_t horizon = Horizon(g);
  while (engine.time() < horizon) engine.Step();
  const std::vector<NodeState> at_horizon(engine.states().begin(), engine.states().end());
  const std::size_t sent_by_horizon = engine.entries().size();
  for (std::uint32_t i = 0; i < extra_steps; ++i) engine.Step();
  return engine.entries().size() == sent_by_horizon &&
         std::equal(at_horizon.begin(), at_horizon.end(), engine.states().begin());
}

std::vector<ReplayDivergence> Replay(const PortGraph& g, const Transcript& transcript) {
  std::vector<ReplayDivergence> out;
  const std::uint32_t n = g.node_count();
  const std::uint32_t horizon = Horizon(g);

  // Entries that can be attributed to a real port, by step.
  std::vector<std::vector<TranscriptEntry>> by_step(std::size_t{horizon} + 2);
  for (const TranscriptEntry& e : transcript.entries) {
    if (e.sender >= n || e.port < 1 || e.port > g.degree(e.sender)) {
      out.push_back({e.step, e.sender, e.port, "entry names a port that does not exist"});
    } else if (e.step < 1 || e.step > horizon) {
      out.push_back({e.step, e.sender, e.port,
                     "entry outside time steps 1.." + std::to_string(horizon)});
    } else {
      by_step[e.step].push_back(e);
    }
  }
  for (auto& step : by_step) std::sort(step.begin(), step.end());

  std::vector<NodeState> states;
  for (NodeId v = 0; v < n; ++v) states.push_back(NodeState::Initial(g.degree(v)));

  for (std::uint32_t t = 1; t <= horizon; ++t) {
    // Deliveries come from the transcript's previous step, not our own.
    struct Delivery {
      NodeId receiver;
      PortMessage message;
    };
    std::vector<Delivery> deliveries;
    for (const TranscriptEntry& e : by_step[t - 1]) {
      const PortEnd& end = g.at(e.sender, e.port);
      deliveries.push_back({end.node, {end.port, e.kind}});
    }

    std::vector<TranscriptEntry> expected;
    auto fault = [&](NodeId v, const ProtocolFault& f) {
      out.push_back({t, v, 0, std::string("delivered messages violate the protocol: ") + f.what()});
    };
    if (t % 2 == 1) {
      std::vector<std::vector<PortMessage>> inbox(n);
      for (const Delivery& d : deliveries) inbox[d.receiver].push_back(d.message);
      for (NodeId v = 0; v < n; ++v) {
        std::optional<PortMessage> msg;
        if (!inbox[v].empty()) msg = inbox[v].front();
        if (inbox[v].size() > 1) {
          out.push_back({t, v, 0, "more than one message delivered at an odd step"});
        }
        OddStepResult r;
        try {
          r = OddStep(states[v], msg, FaultMode::kStrict);
        } catch (const ProtocolFault& f) {
          fault(v, f);
          r = OddStep(states[v], msg, FaultMode::kLenient);
        }
        states[v] = r.state;
        if (r.outbox) expected.push_back({t, v, r.outbox->port, r.outbox->kind});
      }
    } else {
      const EvenInboxes inbox = GroupByReceiver(
          n, deliveries, [](const Delivery& d) { return d.receiver; },
          [](const Delivery& d) { return d.message; });
      for (NodeId v = 0; v < n; ++v) {
        EvenStepResult r;
        try {
          r = EvenStep(states[v], inbox.of(v), FaultMode::kStrict);
        } catch (const ProtocolFault& f) {
          fault(v, f);
          r = EvenStep(states[v], inbox.of(v), FaultMode::kLenient);
        }
        states[v] = r.state;
        for (const PortMessage& msg : r.outbox) expected.push_back({t, v, msg.port, msg.kind});
      }
    }

    // Merge-compare the re-derived messages with the recorded ones.
    const auto& recorded = by_step[t];
    auto key = [](const TranscriptEntry& e) { return std::pair(e.sender, e.port); };
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < expected.size() || j < recorded.size()) {
      if (j == recorded.size() || (i < expected.size() && key(expected[i]) < key(recorded[j]))) {
        out.push_back({t, expected[i].sender, expected[i].port,
                       "missing " + std::string(ToString(expected[i].kind))});
        ++i;
      } else if (i == expected.size() || key(recorded[j]) < key(expected[i])) {
        out.push_back({t, recorded[j].sender, recorded[j].port,
                       "unexpected " + std::string(ToString(recorded[j].kind))});
        ++j;
      } else {
        if (expected[i].kind != recorded[j].kind) {
          out.push_back({t, recorded[j].sender, recorded[j].port,
                         "expected " + std::string(ToString(expected[i].kind)) + ", found " +
                             std::string(ToString(recorded[j].kind))});
        }
        ++i;
        ++j;
      }
    }
  }

  if (!transcript.final_states.empty()) {
    if (transcript.final_states.size() != n) {
      out.push_back({horizon, 0, 0, "final state count differs from node count"});
    } else {
      for (NodeId v = 0; v < n; ++v) {
        if (!(transcript.final_states[v] == states[v])) {
          out.push_back({horizon, v, 0, "final state differs from re-derived state"});
        }
      }
    }
  }
  return out;
}

std::string SerializeTranscript(const Transcript& transcript) {
  std::ostringstream out;
  for (const TranscriptEntry& e : transcript.entries) {
    out << e.step << ' ' << e.sender << ' ' << e.port << ' ' << ToString(e.kind) << '\n';
  }
  return out.str();
}

Transcript ParseTranscript(std::string_view text) {
  Transcript out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string line(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::int64_t step = -1;
    std::int64_t sender = -1;
    std::int64_t port = -1;
    std::string kind_name;
    std::string trailing;
    if (!(fields >> step >> sender >> port >> kind_name) || (fields >> trailing) || step < 0 ||
        sender < 0 || port < 0 || step > UINT32_MAX || sender > UINT32_MAX || port > UINT32_MAX) {
      throw ParseError(number, "expected 't v port KIND'");
    }
    const auto kind = ParseMessageKind(kind_name);
    if (!kind) throw ParseError(number, "unknown message kind '" + kind_name + "'");
    out.entries.push_back({static_cast<std::uint32_t>(step), static_cast<NodeId>(sender),
                           static_cast<Port>(port), *kind});
  }
  std::sort(out.entries.begin(), out.entries.end());
  out.last_active_step = out.entries.empty() ? 0 : out.entries.back().step;
  return out;
}

}  // namespace vclocal
