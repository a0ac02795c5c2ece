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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rankmetric/matrix.hpp"
#include "rankmetric/rational.hpp"

namespace rankmetric {

using BigInt = boost::multiprecision::cpp_int;

/// prod_{i<n} (q^n - q^i). Throws NonPrime unless q is a prime power.
BigInt gl_order(std::size_t n, std::uint64_t q);
/// |GL_n(F_q)| / (q - 1).
BigInt sl_order(std::size_t n, std::uint64_t q);

/// Largest q^{n^2} (the number of n x n matrices) that enumeration accepts.
inline constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 20;

/// Flattened-matrix span of {x (x) I_{b/a} : x in M_a}, the standard copy.
Subspace standard_copy(const FieldSpec& field, std::size_t a, std::size_t b);
/// Canonical span of g s g^{-1} for a copy s of side c.
Subspace conjugate_copy(const Subspace& s, const Matrix& g, const Matrix& g_inv);
/// The span of a set of c x c matrices, as a copy fingerprint.
Subspace span_of(const std::vector<Matrix>& spanning);
/// Basis vector i of a fingerprint reshaped to a c x c matrix.
Matrix basis_matrix(const Subspace& s, std::size_t i);
/// True if the span contains 1 and is closed under multiplication.
bool is_unital_subalgebra(const Subspace& s);

/// Matrix number `index` in code order (entry (0,0) least significant).
Matrix matrix_from_index(const FieldSpec& field, std::size_t n, std::uint64_t index);

struct CopyRecord {
  Subspace fingerprint;
  Matrix witness;  // g with g (A (x) 1) g^{-1} = copy; first in enumeration order
};

struct CopyCensus {
  std::size_t a = 0;
  std::size_t b = 0;
  std::uint64_t units = 0;          // |GL_b| as counted
  std::vector<CopyRecord> copies;   // sorted by fingerprint
};

/// Conjugates the standard copy of M_a in M_b by every unit of M_b.
/// Throws NotDivisor, TooLarge (more than kMaxEnumeration matrices).
CopyCensus copy_census(const FieldSpec& field, std::size_t a, std::size_t b);

/// Serial reference for copy_census, kept for differential testing.
CopyCensus copy_census_serial(const FieldSpec& field, std::size_t a, std::size_t b);

/// Number of units g with g (A (x) 1) g^{-1} = A (x) 1, by enumeration.
std::uint64_t stabilizer_order(const FieldSpec& field, std::size_t a, std::size_t b);

/// Orbit of the standard copy under the transvection and diagonal
/// generators of GL_b, by breadth-first search; sorted.
std::vector<Subspace> conjugation_orbit(const FieldSpec& field, std::size_t a, std::size_t b);

enum class CountMethod { OrbitStabilizer, BruteForce };

struct CopyCount {
  BigInt k;
  CountMethod method = CountMethod::OrbitStabilizer;
  std::string detail;  // how k was obtained
};

CopyCount count_copies(const FieldSpec& field, std::size_t a, std::size_t b, CountMethod method);

struct RamseyBound {
  std::size_t a = 0;
  std::size_t b = 0;
  std::uint64_t q = 0;
  Rational eps;
  BigInt k;
  std::string k_source;  // trivial, orbit_stabilizer or envelope
  Rational coefficient;  // 64 / eps^2
  BigInt log_argument;   // max(2k, 6 ceil(1/eps))
  std::string expression;  // e.g. 256*ln(12)
  std::string decimal;     // bound to 6 places
  std::string decimal_short;  // bound to 1 place
  BigInt c;              // smallest multiple of b above the bound
};

/**
 * c > 64 eps^{-2} max(ln 2k, ln 6 ceil(1/eps)), the smallest multiple of b.
 * k comes from count_copies (orbit-stabilizer) when that is feasible, else
 * from the envelope q^{b^2}; force_envelope skips the count.
 */
RamseyBound ramsey_dimension(std::size_t a, std::size_t b, std::uint64_t q, const Rational& eps,
                             bool force_envelope = false);

void write_report(std::ostream& os, const RamseyBound& r);

/// All q^{dim} elements of the span. Throws TooLarge above 2^12 elements.
std::vector<Matrix> copy_elements(const Subspace& s);

/// Hausdorff distance between the spans as point sets under rank distance.
Rational copy_distance(const Subspace& s, const Subspace& t);

/**
 * A coloring of copies from a built-in family: constant, or
 * min(1, scale * copy_distance(s, reference)). Values are cached per
 * fingerprint; check_lipschitz rejects a set of copies on which the
 * coloring moves faster than copy_distance.
 */
class Coloring {
 public:
  static Coloring constant(Rational value);
  static Coloring distance_to(Subspace reference, Rational scale = Rational(1));

  Rational operator()(const Subspace& s) const;
  /// Throws NotLipschitz naming the first offending pair.
  void check_lipschitz(const std::vector<Subspace>& copies) const;
  std::string describe() const;

 private:
  Coloring() = default;

  std::optional<Rational> constant_;
  std::optional<Subspace> reference_;
  Rational scale_{1};
  mutable std::map<Subspace, Rational> cache_;
};

/// max - min of the coloring over the copies (0 for an empty set).
Rational oscillation(const Coloring& gamma, const std::vector<Subspace>& copies);

struct SearchStrategy {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
};

struct SearchResult {
  bool found = false;               // some examined B' has oscillation <= eps
  std::optional<Subspace> copy;     // the chosen B' (first hit, else the minimum)
  std::optional<Matrix> witness;    // g with B' = g (B (x) 1) g^{-1}
  Rational oscillation;             // of the chosen B'
  std::size_t examined = 0;
};

/**
 * Looks for a copy B' of M_b in M_c on whose copies of M_a the coloring
 * oscillates by at most eps. Exhaustive search walks the copies of M_b in
 * fingerprint order and stops at the first hit; random search draws
 * `trials` units from the seed and keeps the first minimum. Copies inside
 * each B' are checked for the Lipschitz condition.
 */
SearchResult monochromatic_search(const FieldSpec& field, std::size_t a, std::size_t b, std::size_t c,
                                  const Coloring& gamma, const Rational& eps, const SearchStrategy& strategy);

/// The copies of M_a inside g (M_b (x) 1) g^{-1} in M_c.
std::vector<Subspace> copies_inside(const CopyCensus& small, const Matrix& g, std::size_t c);

}  // namespace rankmetric
