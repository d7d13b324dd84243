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

#include <random>

#include "corpus.hpp"
#include "gtest/gtest.h"
#include "vclocal/analysis.hpp"
#include "vclocal/errors.hpp"
#include "vclocal/generators.hpp"

namespace vclocal {
namespace {

PortGraph Sorted(const EdgeList& edges) { return FromEdgeList(edges, NumberingPolicy::kSorted); }

// Values below were frozen from an independent subset enumeration.
TEST(SolveExactTest, KnownOptima) {
  EXPECT_EQ(SolveExact(Sorted(Clique(2))).optimum_size, 1u);
  for (std::uint32_t k = 1; k <= 12; ++k) {
    const OracleResult r = SolveExact(Sorted(Star(k)));
    EXPECT_EQ(r.optimum_size, 1u);
    if (k >= 2) {
      EXPECT_EQ(r.optimum_cover, (std::vector<NodeId>{0}));
    }
  }
  EXPECT_EQ(SolveExact(Sorted(Cycle(5))).optimum_size, 3u);
  EXPECT_EQ(SolveExact(Sorted(testing::Petersen())).optimum_size, 6u);
  EXPECT_EQ(SolveExact(Sorted(testing::Hypercube(3))).optimum_size, 4u);
  EXPECT_EQ(SolveExact(Sorted(testing::CompleteBipartite(3, 3))).optimum_size, 3u);
  EXPECT_EQ(SolveExact(Sorted({4, {}})).optimum_size, 0u);
  EXPECT_EQ(SolveExact(PortGraph{}).optimum_size, 0u);
}

TEST(BruteForceTest, KnownOptima) {
  EXPECT_EQ(BruteForce(Sorted(Path(3))).optimum_size, 1u);
  EXPECT_EQ(BruteForce(Sorted(Path(3))).optimum_cover, (std::vector<NodeId>{1}));
  EXPECT_EQ(BruteForce(Sorted(Cycle(4))).optimum_size, 2u);
  EXPECT_EQ(BruteForce(Sorted(Cycle(6))).optimum_size, 3u);
  EXPECT_EQ(BruteForce(Sorted(Cycle(5))).optimum_size, 3u);
  EXPECT_EQ(BruteForce(Sorted(testing::Petersen())).optimum_size, 6u);
}

TEST(OracleRefusalTest, SizeCaps) {
  EXPECT_THROW(BruteForce(Sorted(Path(21))), OracleRefusal);
  EXPECT_THROW(SolveExact(Sorted(Path(33))), OracleRefusal);
  OracleOptions wide;
  wide.max_nodes = 64;
  EXPECT_EQ(SolveExact(Sorted(Path(64)), wide).optimum_size, 32u);
  wide.max_nodes = 100;
  EXPECT_THROW(SolveExact(Sorted(Path(65)), wide), OracleRefusal);
}

TEST(OracleRefusalTest, NodeBudget) {
  OracleOptions tight;
  tight.node_limit = 3;
  try {
    SolveExact(Sorted(testing::Petersen()), tight);
    FAIL() << "budget not enforced";
  } catch (const OracleRefusal& e) {
    EXPECT_GE(e.best_known(), 6u);
    EXPECT_LE(e.best_known(), 10u);
  }
}

void ExpectAgreement(const EdgeList& edges) {
  const PortGraph g = Sorted(edges);
  const OracleResult solved = SolveExact(g);
  const OracleResult brute = BruteForce(g);
  ASSERT_EQ(solved.optimum_size, brute.optimum_size);
  ASSERT_EQ(solved.optimum_cover.size(), solved.optimum_size);
  ASSERT_TRUE(CheckCover(g, solved.optimum_cover));
  ASSERT_TRUE(CheckCover(g, brute.optimum_cover));
}

TEST(CrossValidationTest, AllGraphsUpToSevenNodes) {
  for (std::uint32_t n = 1; n <= 7; ++n) {
    for (const EdgeList& edges : testing::AllGraphs(n)) ExpectAgreement(edges);
  }
}

TEST(CrossValidationTest, RandomGraphsUpToFourteenNodes) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = static_cast<std::uint32_t>(1 + rng() % 14);
    ExpectAgreement(RandomBounded(n, 1 + rng() % 13, (rng() % 100) / 100.0, rng()));
  }
}

// König: on bipartite graphs the optimum equals the maximum matching.
TEST(CrossValidationTest, KonigOnBipartiteGraphs) {
  std::mt19937_64 rng(13);
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 200; ++trial) {
    const auto n = static_cast<std::uint32_t>(2 + rng() % 24);
    const EdgeList edges = RandomBounded(n, 1 + rng() % 5, 0.2, rng());
    const auto side = testing::Bipartition(edges);
    if (!side) continue;
    ++checked;
    ASSERT_EQ(SolveExact(Sorted(edges)).optimum_size,
              testing::BipartiteMaximumMatching(edges, *side));
  }
  EXPECT_EQ(checked, 200);
}

}  // namespace
}  // namespace vclocal
