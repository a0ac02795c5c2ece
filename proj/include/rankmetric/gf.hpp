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

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rankmetric {

// A field element is stored as the integer sum c_i p^i of its coefficient
// vector in the polynomial basis. This is also its serialized form.
using Code = std::uint8_t;

inline constexpr int kMaxFieldOrder = 256;
inline constexpr int kMaxBuiltinOrder = 64;

/**
 * GF(p^k) in the polynomial basis F_p[x]/(modulus).
 *
 * Construction validates the prime, the degree and irreducibility of the
 * modulus (trial division by every monic polynomial of degree <= k/2), then
 * tabulates addition, multiplication, negation and inversion over codes.
 * Instances are cheap handles to immutable shared tables.
 */
class FieldSpec {
 public:
  /// Throws NonPrime, ReducibleModulus, NoBuiltinModulus or FieldTooLarge.
  static FieldSpec make(int p, int k, std::optional<std::vector<int>> modulus = {});
  /// The built-in field of order q (q <= 64).
  static FieldSpec builtin(int q);

  int p() const noexcept;
  int k() const noexcept;
  int q() const noexcept;
  /// Coefficients constant term first; monic, length k + 1.
  const std::vector<int>& modulus() const noexcept;

  Code add(Code a, Code b) const noexcept { return add_[a * q_ + b]; }
  Code sub(Code a, Code b) const noexcept { return add_[a * q_ + neg_[b]]; }
  Code mul(Code a, Code b) const noexcept { return mul_[a * q_ + b]; }
  Code neg(Code a) const noexcept { return neg_[a]; }
  /// Throws ZeroInverse.
  Code inv(Code a) const;
  Code pow(Code a, std::uint64_t e) const noexcept;

  // Table rows: add_row(a)[b] == add(a, b), mul_row(a)[b] == mul(a, b).
  const Code* add_row(Code a) const noexcept { return add_ + a * q_; }
  const Code* mul_row(Code a) const noexcept { return mul_ + a * q_; }

  std::vector<int> coeffs(Code a) const;
  /// Throws InvalidArgument on out-of-range input.
  Code encode(std::span<const int> coeffs) const;

  /// "p k c0 c1 ... ck"
  std::string serialize() const;
  static FieldSpec parse(const std::string& line);

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept;

 private:
  struct Tables;
  explicit FieldSpec(std::shared_ptr<const Tables> t);

  std::shared_ptr<const Tables> tables_;
  // Cached raw pointers into *tables_ for the hot paths.
  int q_ = 0;
  const Code* add_ = nullptr;
  const Code* mul_ = nullptr;
  const Code* neg_ = nullptr;
  const Code* inv_ = nullptr;
};

bool is_prime(int n) noexcept;
/// Monic irreducibility over F_p by trial division; coefficients constant term first.
bool is_irreducible(int p, std::span<const int> poly);

class FieldElement {
 public:
  FieldElement(FieldSpec spec, Code code);

  const FieldSpec& spec() const noexcept { return spec_; }
  Code code() const noexcept { return code_; }
  std::vector<int> coeffs() const { return spec_.coeffs(code_); }
  bool is_zero() const noexcept { return code_ == 0; }

  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement operator-() const;

  // Mixed-field operands throw SpecMismatch.
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.code_ == b.code_ && a.spec_ == b.spec_;
  }

 private:
  FieldSpec spec_;
  Code code_;
};

/// All q elements ordered by code (lexicographic by coefficient vector read
/// from the top coefficient down), zero first.
std::vector<FieldElement> enumerate_elements(const FieldSpec& spec);

}  // namespace rankmetric
