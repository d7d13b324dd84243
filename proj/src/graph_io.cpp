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

#include "vclocal/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "vclocal/errors.hpp"

namespace vclocal {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::uint64_t> values;
};

// Splits text into non-comment, non-blank lines of unsigned integers.
std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || raw[first] == '#') continue;

    Line line{number, {}};
    std::size_t pos = first;
    while (pos < raw.size()) {
      const auto end = std::min(raw.find_first_of(" \t\r", pos), raw.size());
      const std::string_view token = raw.substr(pos, end - pos);
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size() || value > UINT32_MAX) {
        throw ParseError(number, "expected a non-negative integer, got '" +
                                     std::string(token) + "'");
      }
      line.values.push_back(value);
      pos = raw.find_first_not_of(" \t\r", end);
      if (pos == std::string_view::npos) break;
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

std::string SerializePortGraph(const PortGraph& g) {
  std::ostringstream out;
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out << v << ' ' << g.degree(v);
    for (const PortEnd& end : g.ports(v)) out << ' ' << end.node;
    out << '\n';
  }
  return out.str();
}

PortGraph ParsePortGraph(std::string_view text) {
  const auto lines = Tokenize(text);
  if (lines.empty()) throw ParseError(0, "missing 'n m' header");
  const Line& header = lines.front();
  if (header.values.size() != 2) throw ParseError(header.number, "header must be 'n m'");
  const auto n = static_cast<std::uint32_t>(header.values[0]);
  const auto m = header.values[1];
  if (lines.size() != std::size_t{n} + 1) {
    const std::size_t at = lines.size() > std::size_t{n} + 1 ? lines[n + 1].number : 0;
    throw ParseError(at, "expected " + std::to_string(n) + " node lines, found " +
                             std::to_string(lines.size() - 1));
  }

  std::vector<std::vector<NodeId>> adj(n);
  std::vector<std::size_t> line_of(n, 0);
  std::uint64_t half_edges = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.values.size() < 2) throw ParseError(line.number, "node line must be 'v d ...'");
    const auto v = line.values[0];
    const auto d = line.values[1];
    if (v >= n) throw ParseError(line.number, "node id " + std::to_string(v) + " out of range");
    if (line_of[v] != 0) throw ParseError(line.number, "node " + std::to_string(v) + " listed twice");
    if (line.values.size() != d + 2) {
      throw ParseError(line.number, "node " + std::to_string(v) + " declares degree " +
                                        std::to_string(d) + " but lists " +
                                        std::to_string(line.values.size() - 2) + " neighbours");
    }
    line_of[v] = line.number;
    for (std::size_t j = 2; j < line.values.size(); ++j) {
      const auto u = line.values[j];
      if (u >= n) throw ParseError(line.number, "neighbour " + std::to_string(u) + " out of range");
      if (u == v) throw ParseError(line.number, "self-loop at node " + std::to_string(v));
      adj[v].push_back(static_cast<NodeId>(u));
    }
    half_edges += d;
  }

  // Reconstruct reciprocal ports: v's port j leads to u's port k where v
  // sits at position k on u's line.
  PortTable table(n);
  for (NodeId v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < adj[v].size(); ++j) {
      const NodeId u = adj[v][j];
      const auto& back = adj[u];
      const auto first = std::find(back.begin(), back.end(), v);
      if (first == back.end()) {
        throw ParseError(line_of[v], "node " + std::to_string(v) + " lists " +
                                         std::to_string(u) + " but not vice versa");
      }
      if (std::find(first + 1, back.end(), v) != back.end()) {
        throw ParseError(line_of[u], "parallel edge between " + std::to_string(u) + " and " +
                                         std::to_string(v));
      }
      table[v].push_back({static_cast<Port>(j + 1), u,
                          static_cast<Port>(first - back.begin() + 1)});
    }
  }
  if (half_edges != 2 * m) {
    throw ParseError(header.number, "header declares " + std::to_string(m) +
                                        " edges, node lines describe " +
                                        std::to_string(half_edges) + " port entries");
  }
  try {
    return PortGraph::FromTable(table);
  } catch (const GraphError& e) {
    throw ParseError(0, e.what());
  }
}

std::string SerializeEdgeList(const EdgeList& edges) {
  std::ostringstream out;
  out << edges.node_count << '\n';
  for (const Edge& e : edges.edges) out << e.first << ' ' << e.second << '\n';
  return out.str();
}

EdgeList ParseEdgeList(std::string_view text) {
  const auto lines = Tokenize(text);
  if (lines.empty()) throw ParseError(0, "missing node count");
  if (lines.front().values.size() != 1) {
    throw ParseError(lines.front().number, "first line must be the node count");
  }
  EdgeList out{static_cast<std::uint32_t>(lines.front().values[0]), {}};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.values.size() != 2) throw ParseError(line.number, "expected 'u v'");
    const auto u = line.values[0];
    const auto v = line.values[1];
    if (u >= out.node_count || v >= out.node_count) {
      throw ParseError(line.number, "node id out of range");
    }
    if (u == v) throw ParseError(line.number, "self-loop at node " + std::to_string(u));
    out.edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  return out;
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return buffer.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

}  // namespace vclocal
