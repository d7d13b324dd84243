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

#ifndef VCLOCAL_RATIONAL_HPP_
#define VCLOCAL_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace vclocal {

// Exact non-negative ratio of 32-bit counts, always stored in lowest terms. Printed as "p/q"
// (including q = 1) so ratios never pass through floating point.
class Rational {
 public:
  Rational(std::uint32_t numerator, std::uint32_t denominator) {
    if (denominator == 0) throw std::domain_error("zero denominator");
    const std::uint32_t g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
  }

  std::uint64_t numerator() const { return num_; }
  std::uint64_t denominator() const { return den_; }

  std::string ToString() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Both parts fit in 32 bits, so the cross products cannot overflow.
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

}  // namespace vclocal

#endif  // VCLOCAL_RATIONAL_HPP_
