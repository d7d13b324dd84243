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

#ifndef VCLOCAL_GENERATORS_HPP_
#define VCLOCAL_GENERATORS_HPP_

#include <cstdint>

#include "vclocal/graph.hpp"

namespace vclocal {

// Deterministic edge-list generators. All throw GraphError on out-of-range
// parameters.

// 0-1-...-(n-1)-0, n >= 3.
EdgeList Cycle(std::uint32_t n);
// 0-1-...-(n-1), n >= 1.
EdgeList Path(std::uint32_t n);
// K_n, n >= 1.
EdgeList Clique(std::uint32_t n);
// Centre 0 joined to leaves 1..leaves, leaves >= 1.
EdgeList Star(std::uint32_t leaves);

// Erdos-Renyi G(n, p) with a degree cap: every pair is a candidate with
// probability p, candidates are visited in a seeded shuffled order, and a
// candidate is dropped if either endpoint already has max_degree edges.
// The result always has maximum degree <= max_degree.
EdgeList RandomBounded(std::uint32_t n, std::uint32_t max_degree, double p,
                       std::uint64_t seed);

}  // namespace vclocal

#endif  // VCLOCAL_GENERATORS_HPP_
