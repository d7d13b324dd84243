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

#ifndef VCLOCAL_ERRORS_HPP_
#define VCLOCAL_ERRORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace vclocal {

// Invalid graph input: self-loops, duplicate edges, bad generator parameters.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed text input. `line()` is 1-based; 0 means "end of input".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A transition function received a message the protocol can never deliver.
// Always an engine bug, never a property of the input graph.
class ProtocolFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A structural claim about a finished run failed. `check()` names the claim
// using the same identifiers as the CLI report (e.g. "g1-max-degree-2").
class AnalysisFault : public std::logic_error {
 public:
  AnalysisFault(std::string check, const std::string& what)
      : std::logic_error(check + ": " + what), check_(std::move(check)) {}

  const std::string& check() const { return check_; }

 private:
  std::string check_;
};

// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The exact solver declined the instance (too large, or search budget spent).
class OracleRefusal : public std::runtime_error {
 public:
  OracleRefusal(const std::string& what, std::uint32_t best_known)
      : std::runtime_error(what), best_known_(best_known) {}

  // Size of the best cover found before giving up (an upper bound on C*).
  std::uint32_t best_known() const { return best_known_; }

 private:
  std::uint32_t best_known_;
};

}  // namespace vclocal

#endif  // VCLOCAL_ERRORS_HPP_
