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

#ifndef VCLOCAL_GRAPH_IO_HPP_
#define VCLOCAL_GRAPH_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "vclocal/graph.hpp"

namespace vclocal {

// Port-graph text format (".pg"):
//
//   n m
//   v d(v) u_1 u_2 ... u_d(v)      (one line per node)
//
// u_j is the neighbour reached through port j of v. The neighbour's port is
// implied by the position of v on u_j's line. Lines starting with '#' are
// comments. Parse errors throw ParseError carrying the 1-based line number.
std::string SerializePortGraph(const PortGraph& g);
PortGraph ParsePortGraph(std::string_view text);

// Edge-list text format (".el"): a line with n, then one "u v" per line.
// Port numbering is chosen separately when the list is turned into a graph.
std::string SerializeEdgeList(const EdgeList& edges);
EdgeList ParseEdgeList(std::string_view text);

// Whole-file helpers; throw IoError.
std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace vclocal

#endif  // VCLOCAL_GRAPH_IO_HPP_
