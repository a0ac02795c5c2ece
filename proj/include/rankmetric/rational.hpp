// Copyright 2026 The rankmetric Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace rankmetric {

// Every tolerance, distance and certificate value in the library is one of
// these. Floating point appears only in display strings.
using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

// Accepts "num/den" or a bare integer. Throws ParseError.
Rational parse_rational(std::string_view text);

// 2^{-e} for e >= 0.
Rational pow2_neg(unsigned e);

/// Normalized rank distance rank / dim, kept unreduced so reports show the
/// ambient dimension. Comparisons cross-multiply.
struct RankDistance {
  std::int64_t rank = 0;
  std::int64_t dim = 1;

  Rational value() const { return Rational(rank, dim); }
  std::string str() const;

  friend bool operator==(const RankDistance& a, const RankDistance& b) {
    return a.rank * b.dim == b.rank * a.dim;
  }
  friend std::strong_ordering operator<=>(const RankDistance& a,
                                          const RankDistance& b) {
    return a.rank * b.dim <=> b.rank * a.dim;
  }
};

}  // namespace rankmetric
