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

#include <functional>
#include <numeric>
#include <random>

#include "corpus.hpp"
#include "gtest/gtest.h"
#include "vclocal/errors.hpp"
#include "vclocal/generators.hpp"

namespace vclocal {
namespace {

EdgeList AsEdgeList(const DoubleCover& h) {
  EdgeList out{h.node_count(), {}};
  for (const CoverEdge& e : h.edges()) out.edges.emplace_back(e.black, e.white);
  return out;
}

std::uint32_t ComponentCount(const EdgeList& g) {
  std::vector<NodeId> parent(g.node_count);
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<NodeId(NodeId)> find = [&](NodeId v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  std::uint32_t count = g.node_count;
  for (const Edge& e : g.edges) {
    const NodeId a = find(e.first);
    const NodeId b = find(e.second);
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

TEST(BuildDoubleCoverTest, SingleEdgeGivesTwoDisjointEdges) {
  const DoubleCover h = BuildDoubleCover(FromEdgeList(Clique(2), NumberingPolicy::kSorted));
  EXPECT_EQ(h.node_count(), 4u);
  EXPECT_EQ(h.edges(), (std::vector<CoverEdge>{{h.black(0), h.white(1)}, {h.black(1), h.white(0)}}));
  EXPECT_EQ(h.colour(h.black(1)), Colour::kBlack);
  EXPECT_EQ(h.colour(h.white(1)), Colour::kWhite);
  EXPECT_EQ(h.original(h.white(1)), 1u);
}

TEST(BuildDoubleCoverTest, TriangleGivesSixCycle) {
  const DoubleCover h = BuildDoubleCover(FromEdgeList(Clique(3), NumberingPolicy::kSorted));
  const EdgeList el = AsEdgeList(h);
  EXPECT_EQ(el.node_count, 6u);
  EXPECT_EQ(el.edges.size(), 6u);
  EXPECT_EQ(testing::RegularDegree(el), 2u);
  EXPECT_TRUE(testing::IsConnected(el));
}

TEST(BuildDoubleCoverTest, FourCycleGivesTwoFourCycles) {
  const DoubleCover h = BuildDoubleCover(FromEdgeList(Cycle(4), NumberingPolicy::kSorted));
  const EdgeList el = AsEdgeList(h);
  EXPECT_EQ(el.edges.size(), 8u);
  EXPECT_EQ(testing::RegularDegree(el), 2u);
  EXPECT_EQ(ComponentCount(el), 2u);
}

TEST(BuildDoubleCoverTest, BipartiteAndDegreePreserving) {
  const PortGraph g = FromEdgeList(RandomBounded(30, 5, 0.3, 4), NumberingPolicy::kSorted);
  const DoubleCover h = BuildDoubleCover(g);
  EXPECT_EQ(h.edges().size(), 2u * g.edge_count());
  for (NodeId x = 0; x < h.node_count(); ++x) {
    EXPECT_EQ(h.neighbours(x).size(), g.degree(h.original(x)));
    for (NodeId y : h.neighbours(x)) EXPECT_NE(h.colour(x), h.colour(y));
  }
}

TEST(ExtractMatchingTest, SingleEdge) {
  const PortGraph g = FromEdgeList(Clique(2), NumberingPolicy::kSorted);
  const DoubleCover h = ExtractMatching(BuildDoubleCover(g), vclocal::Run(g).transcript);
  EXPECT_EQ(h.matching(), h.edges());
  EXPECT_EQ(ProjectCover(h), (std::vector<NodeId>{0, 1}));
}

TEST(ExtractMatchingTest, Star) {
  const PortGraph g = FromEdgeList(Star(3), NumberingPolicy::kSorted);
  const DoubleCover h = ExtractMatching(BuildDoubleCover(g), vclocal::Run(g).transcript);
  EXPECT_EQ(h.matching(),
            (std::vector<CoverEdge>{{h.black(0), h.white(1)}, {h.black(1), h.white(0)}}));
  EXPECT_EQ(ProjectCover(h), (std::vector<NodeId>{0, 1}));
  EXPECT_EQ(ProjectMatching(h), (std::vector<Edge>{{0, 1}}));
}

TEST(ExtractMatchingTest, EmptyGraph) {
  const PortGraph g = FromEdgeList({3, {}}, NumberingPolicy::kSorted);
  const DoubleCover h = ExtractMatching(BuildDoubleCover(g), vclocal::Run(g).transcript);
  EXPECT_TRUE(h.matching().empty());
  EXPECT_TRUE(ProjectCover(h).empty());
}

TEST(ExtractMatchingTest, CorruptedTranscriptsAreRejected) {
  const PortGraph g = FromEdgeList(Star(3), NumberingPolicy::kSorted);
  const Transcript genuine = vclocal::Run(g).transcript;

  // Dropping the centre's ACCEPT leaves B(1)-W(0) with both ends free.
  Transcript dropped = genuine;
  std::erase_if(dropped.entries, [](const TranscriptEntry& e) {
    return e.kind == MessageKind::kAccept && e.sender == 0;
  });
  EXPECT_THROW(ExtractMatching(BuildDoubleCover(g), dropped), AnalysisFault);

  // A second ACCEPT from the centre matches W(0) twice.
  Transcript doubled = genuine;
  for (auto& e : doubled.entries) {
    if (e.sender == 0 && e.port == 2 && e.step == 2) e.kind = MessageKind::kAccept;
  }
  EXPECT_THROW(ExtractMatching(BuildDoubleCover(g), doubled), AnalysisFault);

  // An ACCEPT that answers no proposal.
  Transcript orphan = genuine;
  orphan.entries.push_back({4, 2, 1, MessageKind::kAccept});
  std::sort(orphan.entries.begin(), orphan.entries.end());
  EXPECT_THROW(ExtractMatching(BuildDoubleCover(g), orphan), AnalysisFault);
}

TEST(DoubleCoverTest, SetMatchingValidates) {
  DoubleCover h = BuildDoubleCover(FromEdgeList(Path(3), NumberingPolicy::kSorted));
  EXPECT_THROW(h.SetMatching({{h.black(0), h.white(2)}}), AnalysisFault);
  EXPECT_THROW(h.SetMatching({{h.black(0), h.white(1)}, {h.black(2), h.white(1)}}), AnalysisFault);
  h.SetMatching({{h.black(0), h.white(1)}});
  EXPECT_EQ(h.mate(h.white(1)), h.black(0));
  EXPECT_FALSE(h.mate(h.black(1)));
  ASSERT_TRUE(h.FindAugmentableEdge());
}

TEST(DoubleCoverPropertyTest, ProjectionMatchesSimulator) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::uint32_t>(1 + rng() % 50);
    const PortGraph g = FromEdgeList(RandomBounded(n, 1 + rng() % 7, 0.25, rng()),
                                     NumberingPolicy::kRandom, rng());
    const RunOutput out = vclocal::Run(g);
    const DoubleCover h = ExtractMatching(BuildDoubleCover(g), out.transcript);
    ASSERT_FALSE(h.FindAugmentableEdge());
    ASSERT_EQ(ProjectCover(h), out.result.cover);
    ASSERT_EQ(ProjectMatching(h), out.result.pair_edges);
  }
}

}  // namespace
}  // namespace vclocal
