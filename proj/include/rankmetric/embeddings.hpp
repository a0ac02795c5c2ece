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

#include <cstddef>
#include <span>
#include <vector>

#include "rankmetric/matrix.hpp"

namespace rankmetric {

/// iota_{n,m}(x) = x ⊗ 1_{n/m}. Throws NotDivisor.
Matrix iota(std::size_t n, std::size_t m, const Matrix& x);

/// The perfect shuffle P with P x^{+k} P^{-1} = x ⊗ 1_k for every x in M_m.
Matrix shuffle_permutation(const FieldSpec& field, std::size_t m, std::size_t k);

/**
 * A homomorphism M_m -> M_n of the form x -> Y (x^{+mult} + 0_{n - m mult}) Y^{-1}.
 *
 * Column block c of the conjugator Y (columns c*m .. c*m + m - 1) is the
 * basis of the c-th copy of F^m; the trailing n - m*mult columns span the
 * part every image annihilates.
 */
class DeltaEmbedding {
 public:
  /// Throws DimensionMismatch when m * mult > n, Singular when Y is not a unit.
  DeltaEmbedding(std::size_t m, std::size_t n, std::size_t mult, Matrix conjugator);

  std::size_t source_dim() const noexcept { return m_; }
  std::size_t target_dim() const noexcept { return n_; }
  std::size_t multiplicity() const noexcept { return mult_; }
  std::size_t padding() const noexcept { return n_ - m_ * mult_; }
  const Matrix& conjugator() const noexcept { return conj_; }
  const Matrix& conjugator_inverse() const noexcept { return conj_inv_; }
  const FieldSpec& field() const noexcept { return conj_.field(); }

  /// (n - m mult) / n
  RankDistance delta() const {
    return {static_cast<std::int64_t>(padding()), static_cast<std::int64_t>(n_)};
  }
  bool unital() const noexcept { return padding() == 0; }

  /// Throws DimensionMismatch unless x is m x m.
  Matrix apply(const Matrix& x) const;

 private:
  std::size_t m_;
  std::size_t n_;
  std::size_t mult_;
  Matrix conj_;
  Matrix conj_inv_;
};

inline Matrix delta_apply(const DeltaEmbedding& e, const Matrix& x) { return e.apply(x); }

/// iota_{n,m} written as a delta-embedding (conjugator is the shuffle).
DeltaEmbedding iota_embedding(const FieldSpec& field, std::size_t n, std::size_t m);

/// x -> x^{+mult} + 0 with the identity conjugator.
DeltaEmbedding block_embedding(const FieldSpec& field, std::size_t m, std::size_t n,
                               std::size_t mult);

/// iota_{big_n, n} ∘ e, still in delta-embedding form.
DeltaEmbedding include_target(const DeltaEmbedding& e, std::size_t big_n);

/// x -> u e(x) u^{-1}.
DeltaEmbedding conjugate(const DeltaEmbedding& e, const Matrix& u);

/**
 * A unital homomorphism M_m -> M_n stored by the images of the generators
 * a, b of M_m (see kassabov_generators). The images must satisfy the
 * defining relations exactly; the matrix units they determine are cached.
 */
class Homomorphism {
 public:
  /// Throws RelationsNotSatisfied.
  Homomorphism(std::size_t m, Matrix image_a, Matrix image_b);

  static Homomorphism iota(const FieldSpec& field, std::size_t n, std::size_t m);
  /// Throws NotUnital when e pads with zeros.
  static Homomorphism from_delta(const DeltaEmbedding& e);

  std::size_t source_dim() const noexcept { return m_; }
  std::size_t target_dim() const noexcept { return image_a_.rows(); }
  const FieldSpec& field() const noexcept { return image_a_.field(); }
  const Matrix& image_a() const noexcept { return image_a_; }
  const Matrix& image_b() const noexcept { return image_b_; }
  /// Images of E_ij, row-major.
  const std::vector<Matrix>& units() const noexcept { return units_; }

  Matrix apply(const Matrix& x) const;

  /// Columns E_{i1} u_l (l outer, i inner) for the echelon basis u_l of
  /// the image of E_11; conjugating by it block-diagonalizes the map.
  Matrix module_basis() const;
  DeltaEmbedding as_delta() const;

  /// x -> u phi(x) u^{-1}.
  Homomorphism conjugated(const Matrix& u) const;

 private:
  std::size_t m_;
  Matrix image_a_;
  Matrix image_b_;
  std::vector<Matrix> units_;
};

struct JointEmbedding {
  std::size_t c;
  Homomorphism from_a;  // iota_{c,a}
  Homomorphism from_b;  // iota_{c,b}
};

/// C = M_{ab} with iota_{ab,a} and iota_{ab,b}.
JointEmbedding joint_embed(const FieldSpec& field, std::size_t a_dim, std::size_t b_dim);

/// A unit u with u phi0(x) u^{-1} = phi1(x) for all x, built from the
/// matrix-unit module decompositions of both maps.
Matrix skolem_noether_conjugator(const Homomorphism& phi0, const Homomorphism& phi1);
/// Throws NotUnital unless both maps are unital.
Matrix skolem_noether_conjugator(const DeltaEmbedding& phi0, const DeltaEmbedding& phi1);

struct Amalgam {
  std::size_t c;
  Homomorphism psi0;  // M_{b0} -> M_c
  Homomorphism psi1;  // M_{b1} -> M_c
};

/// Completes phi0: M_a -> M_{b0}, phi1: M_a -> M_{b1} to a commuting square
/// through M_{b0 b1}: psi0 ∘ phi0 = psi1 ∘ phi1 exactly.
Amalgam amalgamate(const Homomorphism& phi0, const Homomorphism& phi1);

}  // namespace rankmetric
