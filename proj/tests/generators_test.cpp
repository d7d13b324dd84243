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

#include "vclocal/generators.hpp"

#include <algorithm>

#include "corpus.hpp"
#include "gtest/gtest.h"
#include "vclocal/errors.hpp"

namespace vclocal {
namespace {

std::vector<Edge> Sorted(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  return edges;
}

TEST(GeneratorsTest, Cycle) {
  const EdgeList c = Cycle(4);
  EXPECT_EQ(c.node_count, 4u);
  EXPECT_EQ(Sorted(c.edges), Sorted({{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  EXPECT_THROW(Cycle(2), GraphError);
}

TEST(GeneratorsTest, Star) {
  const EdgeList s = Star(3);
  EXPECT_EQ(s.node_count, 4u);
  EXPECT_EQ(Sorted(s.edges), Sorted({{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_THROW(Star(0), GraphError);
}

TEST(GeneratorsTest, PathAndClique) {
  EXPECT_EQ(Path(1).edges.size(), 0u);
  EXPECT_EQ(Path(5).edges.size(), 4u);
  EXPECT_EQ(Clique(1).edges.size(), 0u);
  EXPECT_EQ(Clique(6).edges.size(), 15u);
  EXPECT_THROW(Path(0), GraphError);
  EXPECT_THROW(Clique(0), GraphError);
}

TEST(RandomBoundedTest, RespectsDegreeBound) {
  const EdgeList g = RandomBounded(20, 4, 0.3, 7);
  EXPECT_EQ(g.node_count, 20u);
  EXPECT_LE(testing::MaxDegree(g), 4u);
  EXPECT_FALSE(g.edges.empty());
  EXPECT_NO_THROW(FromEdgeList(g, NumberingPolicy::kSorted));
}

TEST(RandomBoundedTest, Deterministic) {
  EXPECT_EQ(Sorted(RandomBounded(50, 5, 0.2, 3).edges), Sorted(RandomBounded(50, 5, 0.2, 3).edges));
  EXPECT_NE(Sorted(RandomBounded(50, 5, 0.2, 3).edges), Sorted(RandomBounded(50, 5, 0.2, 4).edges));
}

TEST(RandomBoundedTest, ExtremeProbabilities) {
  EXPECT_TRUE(RandomBounded(30, 5, 0.0, 1).edges.empty());
  // p = 1 with no effective cap gives the clique.
  EXPECT_EQ(RandomBounded(8, 7, 1.0, 1).edges.size(), 28u);
  EXPECT_TRUE(RandomBounded(10, 0, 0.5, 1).edges.empty());
  EXPECT_THROW(RandomBounded(10, 3, 1.5, 1), GraphError);
  EXPECT_THROW(RandomBounded(0, 3, 0.5, 1), GraphError);
}

TEST(RandomBoundedTest, DegreeBoundOverManySeeds) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto n = static_cast<std::uint32_t>(2 + seed % 60);
    const auto delta = static_cast<std::uint32_t>(1 + seed % 9);
    const EdgeList g = RandomBounded(n, delta, 0.05 + (seed % 10) * 0.1, seed);
    ASSERT_LE(testing::MaxDegree(g), delta) << "seed " << seed;
    ASSERT_NO_THROW(FromEdgeList(g, NumberingPolicy::kSorted)) << "seed " << seed;
  }
}

// Candidate pairs are Bernoulli(p); without the cap the edge count should
// track p * n(n-1)/2.
TEST(RandomBoundedTest, EdgeDensityMatchesProbability) {
  std::uint64_t total = 0;
  constexpr int kSamples = 40;
  for (int s = 0; s < kSamples; ++s) total += RandomBounded(100, 99, 0.1, 1000 + s).edges.size();
  const double mean = static_cast<double>(total) / kSamples;
  EXPECT_NEAR(mean, 495.0, 25.0);
}

}  // namespace
}  // namespace vclocal
