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
#include <cmath>
#include <random>
#include <string>

#include "vclocal/errors.hpp"

namespace vclocal {

EdgeList Cycle(std::uint32_t n) {
  if (n < 3) throw GraphError("cycle needs n >= 3, got " + std::to_string(n));
  EdgeList out{n, {}};
  for (std::uint32_t v = 0; v < n; ++v) {
    out.edges.push_back({v, (v + 1) % n});
  }
  return out;
}

EdgeList Path(std::uint32_t n) {
  if (n < 1) throw GraphError("path needs n >= 1");
  EdgeList out{n, {}};
  for (std::uint32_t v = 0; v + 1 < n; ++v) out.edges.push_back({v, v + 1});
  return out;
}

EdgeList Clique(std::uint32_t n) {
  if (n < 1) throw GraphError("clique needs n >= 1");
  EdgeList out{n, {}};
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) out.edges.push_back({u, v});
  }
  return out;
}

EdgeList Star(std::uint32_t leaves) {
  if (leaves < 1) throw GraphError("star needs at least one leaf");
  EdgeList out{leaves + 1, {}};
  for (std::uint32_t leaf = 1; leaf <= leaves; ++leaf) out.edges.push_back({0, leaf});
  return out;
}

EdgeList RandomBounded(std::uint32_t n, std::uint32_t max_degree, double p,
                       std::uint64_t seed) {
  if (n < 1) throw GraphError("random graph needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw GraphError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);

  // Draw the Bernoulli(p) candidates by geometric skipping over the pairs
  // (u, v), u < v, in row-major order. Visiting the candidates in a uniformly
  // shuffled order below is the same as shuffling all pairs and flipping a
  // coin for each, but costs O(n + m) instead of O(n^2).
  std::vector<Edge> candidates;
  if (p > 0.0 && n >= 2 && max_degree > 0) {
    const std::uint64_t total = std::uint64_t{n} * (n - 1) / 2;
    std::uint64_t index = 0;
    if (p >= 1.0) {
      candidates.reserve(total);
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double log_q = p < 1.0 ? std::log1p(-p) : 0.0;
    // Row boundaries: pairs of row u start at offset(u).
    std::uint32_t u = 0;
    std::uint64_t row_start = 0;
    std::uint64_t row_len = n - 1;
    while (true) {
      if (p < 1.0) {
        const double r = unit(rng);
        const double skip = std::floor(std::log1p(-r) / log_q);
        if (skip >= static_cast<double>(total - index)) break;
        index += static_cast<std::uint64_t>(skip);
      }
      if (index >= total) break;
      while (index >= row_start + row_len) {
        row_start += row_len;
        ++u;
        --row_len;
      }
      const auto v = static_cast<std::uint32_t>(u + 1 + (index - row_start));
      candidates.push_back({u, v});
      ++index;
    }
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);

  EdgeList out{n, {}};
  std::vector<std::uint32_t> degree(n, 0);
  for (const Edge& e : candidates) {
    if (degree[e.first] >= max_degree || degree[e.second] >= max_degree) continue;
    ++degree[e.first];
    ++degree[e.second];
    out.edges.push_back(e);
  }
  return out;
}

}  // namespace vclocal
