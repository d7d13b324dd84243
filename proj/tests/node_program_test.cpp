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

#include <random>

#include "gtest/gtest.h"
#include "vclocal/errors.hpp"

namespace vclocal {
namespace {

constexpr auto kPropose = MessageKind::kPropose;
constexpr auto kAccept = MessageKind::kAccept;
constexpr auto kReject = MessageKind::kReject;

NodeState State(std::optional<Port> a, std::optional<Port> b, std::uint32_t i, bool c,
                std::uint32_t d) {
  return NodeState{a, b, i, c, d};
}

TEST(OddStepTest, FirstStepProposesOnPortOne) {
  const auto r = OddStep(NodeState::Initial(1), std::nullopt);
  EXPECT_EQ(r.state, State({}, {}, 1, false, 1));
  ASSERT_TRUE(r.outbox);
  EXPECT_EQ(*r.outbox, (PortMessage{1, kPropose}));
}

TEST(OddStepTest, AcceptSetsA) {
  const auto r = OddStep(State({}, {}, 1, false, 1), PortMessage{1, kAccept});
  EXPECT_EQ(r.state, State(1, {}, 1, true, 1));
  EXPECT_FALSE(r.outbox);
}

TEST(OddStepTest, RejectOnLastPortEndsTheScan) {
  const auto r = OddStep(State({}, {}, 1, false, 1), PortMessage{1, kReject});
  EXPECT_EQ(r.state, State({}, {}, 2, false, 1));
  EXPECT_FALSE(r.outbox);
  // Quiescent from here on.
  const auto again = OddStep(r.state, std::nullopt);
  EXPECT_EQ(again.state, r.state);
  EXPECT_FALSE(again.outbox);
}

TEST(OddStepTest, RejectMovesToNextPort) {
  const auto r = OddStep(State({}, 2, 1, true, 3), PortMessage{1, kReject});
  EXPECT_EQ(r.state, State({}, 2, 2, true, 3));
  ASSERT_TRUE(r.outbox);
  EXPECT_EQ(*r.outbox, (PortMessage{2, kPropose}));
}

TEST(OddStepTest, MatchedNodeIsInert) {
  const NodeState s = State(2, {}, 2, true, 3);
  const auto r = OddStep(s, std::nullopt);
  EXPECT_EQ(r.state, s);
  EXPECT_FALSE(r.outbox);
  EXPECT_THROW(OddStep(s, PortMessage{2, kAccept}), ProtocolFault);
  const auto lenient = OddStep(s, PortMessage{2, kAccept}, FaultMode::kLenient);
  EXPECT_EQ(lenient.state, s);
  EXPECT_FALSE(lenient.outbox);
}

TEST(OddStepTest, IsolatedNodeStaysSilent) {
  // The increment guard i <= d holds at i = 0, d = 0; the proposal guard
  // then fails.
  const auto r = OddStep(NodeState::Initial(0), std::nullopt);
  EXPECT_EQ(r.state, State({}, {}, 1, false, 0));
  EXPECT_FALSE(r.outbox);
  EXPECT_EQ(OddStep(r.state, std::nullopt).state, r.state);
}

TEST(OddStepTest, Faults) {
  const NodeState waiting = State({}, {}, 2, false, 3);
  EXPECT_THROW(OddStep(waiting, PortMessage{1, kAccept}), ProtocolFault);
  EXPECT_THROW(OddStep(waiting, PortMessage{2, kPropose}), ProtocolFault);
  EXPECT_THROW(OddStep(NodeState::Initial(2), PortMessage{1, kReject}), ProtocolFault);

  const auto lenient = OddStep(waiting, PortMessage{1, kAccept}, FaultMode::kLenient);
  EXPECT_EQ(lenient.state, State({}, {}, 3, false, 3));
  ASSERT_TRUE(lenient.outbox);
  EXPECT_EQ(lenient.outbox->port, 3u);
}

TEST(EvenStepTest, AcceptsLowestPortRejectsTheRest) {
  const std::vector<PortMessage> inbox = {{3, kPropose}, {1, kPropose}};
  const auto r = EvenStep(NodeState::Initial(3), inbox);
  EXPECT_EQ(r.state, State({}, 1, 0, true, 3));
  EXPECT_EQ(r.outbox, (std::vector<PortMessage>{{1, kAccept}, {3, kReject}}));
}

TEST(EvenStepTest, AlreadyMatchedRejectsAll) {
  const NodeState s = State({}, 2, 1, true, 3);
  const std::vector<PortMessage> inbox = {{1, kPropose}};
  const auto r = EvenStep(s, inbox);
  EXPECT_EQ(r.state, s);
  EXPECT_EQ(r.outbox, (std::vector<PortMessage>{{1, kReject}}));
}

TEST(EvenStepTest, EmptyInbox) {
  const NodeState s = State({}, {}, 1, false, 2);
  const auto r = EvenStep(s, {});
  EXPECT_EQ(r.state, s);
  EXPECT_TRUE(r.outbox.empty());
}

TEST(EvenStepTest, Faults) {
  const NodeState s = NodeState::Initial(3);
  const std::vector<PortMessage> accept = {{1, kAccept}};
  const std::vector<PortMessage> twice = {{2, kPropose}, {2, kPropose}};
  const std::vector<PortMessage> bad_port = {{4, kPropose}};
  EXPECT_THROW(EvenStep(s, accept), ProtocolFault);
  EXPECT_THROW(EvenStep(s, twice), ProtocolFault);
  EXPECT_THROW(EvenStep(s, bad_port), ProtocolFault);

  const std::vector<PortMessage> mixed = {{1, kReject}, {2, kPropose}};
  const auto r = EvenStep(s, mixed, FaultMode::kLenient);
  EXPECT_EQ(r.outbox, (std::vector<PortMessage>{{2, kAccept}}));
}

TEST(MessageKindTest, NamesRoundTrip) {
  for (MessageKind k : {kPropose, kAccept, kReject}) EXPECT_EQ(ParseMessageKind(ToString(k)), k);
  EXPECT_FALSE(ParseMessageKind("propose"));
}

// Random well-formed inputs: transitions are pure, respond once per proposal,
// and never undo a, b, c or move i backwards.
TEST(NodeProgramPropertyTest, PureAndMonotone) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5000; ++trial) {
    const auto d = static_cast<std::uint32_t>(rng() % 6);
    NodeState s = NodeState::Initial(d);
    for (int step = 1; step <= 2 * 6 + 1; ++step) {
      const NodeState before = s;
      if (step % 2 == 1) {
        std::optional<PortMessage> inbox;
        if (!s.accepted_out && s.next_port >= 1 && s.next_port <= d) {
          inbox = PortMessage{s.next_port, rng() % 2 ? kAccept : kReject};
        }
        const auto r = OddStep(s, inbox);
        ASSERT_EQ(r.state, OddStep(s, inbox).state);
        s = r.state;
      } else {
        std::vector<PortMessage> inbox;
        for (Port p = 1; p <= d; ++p) {
          if (rng() % 3 == 0) inbox.push_back({p, kPropose});
        }
        const auto r = EvenStep(s, inbox);
        ASSERT_EQ(r.outbox.size(), inbox.size());
        ASSERT_EQ(r.outbox, EvenStep(s, inbox).outbox);
        s = r.state;
      }
      ASSERT_LE(s.next_port, d + 1);
      ASSERT_GE(s.next_port, before.next_port);
      if (before.accepted_out) { ASSERT_EQ(s.accepted_out, before.accepted_out); }
      if (before.accepted_in) { ASSERT_EQ(s.accepted_in, before.accepted_in); }
      if (before.in_cover) { ASSERT_TRUE(s.in_cover); }
      if (s.accepted_out || s.accepted_in) { ASSERT_TRUE(s.in_cover); }
      if (s.accepted_out) { ASSERT_TRUE(*s.accepted_out >= 1 && *s.accepted_out <= d); }
      if (s.accepted_in) { ASSERT_TRUE(*s.accepted_in >= 1 && *s.accepted_in <= d); }
    }
  }
}

}  // namespace
}  // namespace vclocal
