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

#ifndef VCLOCAL_TESTS_SUPPORT_CORPUS_HPP_
#define VCLOCAL_TESTS_SUPPORT_CORPUS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vclocal/graph.hpp"

namespace vclocal::testing {

// All graphs on n nodes up to isomorphism (n <= 9), one labelled
// representative each, built by adding a node to every graph on n-1 nodes
// and deduplicating by canonical form.
std::vector<EdgeList> AllGraphs(std::uint32_t n);
std::vector<EdgeList> AllConnectedGraphs(std::uint32_t n);

bool IsConnected(const EdgeList& edges);
std::uint32_t MaxDegree(const EdgeList& edges);
// Degree d if every node has degree d.
std::optional<std::uint32_t> RegularDegree(const EdgeList& edges);

EdgeList Petersen();
EdgeList Hypercube(std::uint32_t dimension);
EdgeList CompleteBipartite(std::uint32_t a, std::uint32_t b);
EdgeList Circulant(std::uint32_t n, const std::vector<std::uint32_t>& offsets);
// Random d-regular simple graph by the pairing model with restarts.
EdgeList RandomRegular(std::uint32_t n, std::uint32_t d, std::uint64_t seed);

struct NamedGraph {
  std::string name;
  EdgeList edges;
};

// Connected d-regular graphs (d >= 1) on at most max_n nodes: every regular
// graph from the exhaustive enumeration up to 8 nodes, plus cycles, cliques,
// balanced complete bipartite graphs, circulants, the Petersen graph, the
// 3-cube and seeded random regular graphs up to max_n.
std::vector<NamedGraph> RegularCorpus(std::uint32_t max_n);

// Small hand-picked graphs with known structure.
std::vector<NamedGraph> SmallCorpus();

// Maximum matching in a bipartite graph by augmenting paths. `side[v]` says
// which part v lies in. Independent of the vertex cover code.
std::uint32_t BipartiteMaximumMatching(const EdgeList& edges, const std::vector<int>& side);
// 2-colouring if the graph is bipartite.
std::optional<std::vector<int>> Bipartition(const EdgeList& edges);

// The rotationally consistent 4-cycle: port 1 of node v leads to v+1 mod 4,
// port 2 to v-1 mod 4.
PortGraph ConsistentCycle4();

}  // namespace vclocal::testing

#endif  // VCLOCAL_TESTS_SUPPORT_CORPUS_HPP_
