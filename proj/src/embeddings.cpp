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

#include "rankmetric/embeddings.hpp"

#include <string>
#include <utility>

#include "rankmetric/error.hpp"

namespace rankmetric {

Matrix iota(std::size_t n, std::size_t m, const Matrix& x) {
  if (m == 0 || n % m != 0) {
    fail(ErrorKind::NotDivisor, std::to_string(m) + " does not divide " + std::to_string(n));
  }
  if (x.rows() != m || x.cols() != m) fail(ErrorKind::DimensionMismatch, "iota argument is not m x m");
  return kron(x, Matrix::identity(x.field(), n / m));
}

Matrix shuffle_permutation(const FieldSpec& field, std::size_t m, std::size_t k) {
  Matrix p(field, m * k, m * k);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t l = 0; l < m; ++l) p(l * k + c, c * m + l) = 1;
  }
  return p;
}

DeltaEmbedding::DeltaEmbedding(std::size_t m, std::size_t n, std::size_t mult, Matrix conjugator)
    : m_(m), n_(n), mult_(mult), conj_(std::move(conjugator)), conj_inv_(conj_.field(), 0, 0) {
  if (m == 0 || m * mult > n) {
    fail(ErrorKind::DimensionMismatch, "delta-embedding needs 0 < m and m*mult <= n");
  }
  if (conj_.rows() != n || conj_.cols() != n) {
    fail(ErrorKind::DimensionMismatch, "conjugator must be n x n");
  }
  conj_inv_ = invert(conj_);
}

Matrix DeltaEmbedding::apply(const Matrix& x) const {
  if (x.rows() != m_ || x.cols() != m_) {
    fail(ErrorKind::DimensionMismatch, "argument is not in M_" + std::to_string(m_));
  }
  require_same_field(x, conj_);
  return conj_ * repeat_block(x, mult_, padding()) * conj_inv_;
}

DeltaEmbedding iota_embedding(const FieldSpec& field, std::size_t n, std::size_t m) {
  if (m == 0 || n % m != 0) {
    fail(ErrorKind::NotDivisor, std::to_string(m) + " does not divide " + std::to_string(n));
  }
  return DeltaEmbedding(m, n, n / m, shuffle_permutation(field, m, n / m));
}

DeltaEmbedding block_embedding(const FieldSpec& field, std::size_t m, std::size_t n,
                               std::size_t mult) {
  return DeltaEmbedding(m, n, mult, Matrix::identity(field, n));
}

DeltaEmbedding include_target(const DeltaEmbedding& e, std::size_t big_n) {
  const std::size_t n = e.target_dim();
  if (big_n % n != 0) {
    fail(ErrorKind::NotDivisor, std::to_string(n) + " does not divide " + std::to_string(big_n));
  }
  const std::size_t t = big_n / n;
  const std::size_t m = e.source_dim();
  const std::size_t mult = e.multiplicity();
  const std::size_t pad = e.padding();
  const Matrix& y = e.conjugator();
  // Column j of Y tensored with e_s lands in copy (s, c) or in the padding.
  Matrix z(e.field(), big_n, big_n);
  for (std::size_t s = 0; s < t; ++s) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t col = j < m * mult ? s * m * mult + j : m * mult * t + s * pad + (j - m * mult);
      for (std::size_t i = 0; i < n; ++i) z(i * t + s, col) = y(i, j);
    }
  }
  return DeltaEmbedding(m, big_n, mult * t, std::move(z));
}

DeltaEmbedding conjugate(const DeltaEmbedding& e, const Matrix& u) {
  return DeltaEmbedding(e.source_dim(), e.target_dim(), e.multiplicity(), u * e.conjugator());
}

Homomorphism::Homomorphism(std::size_t m, Matrix image_a, Matrix image_b)
    : m_(m), image_a_(std::move(image_a)), image_b_(std::move(image_b)) {
  require_same_shape(image_a_, image_b_);
  require_square(image_a_);
  if (m == 0 || !satisfies_relations(image_a_, image_b_, m)) {
    fail(ErrorKind::RelationsNotSatisfied,
         "generator images do not satisfy the relations of M_" + std::to_string(m));
  }
  units_ = matrix_units(image_a_, image_b_, m);
}

Homomorphism Homomorphism::iota(const FieldSpec& field, std::size_t n, std::size_t m) {
  auto gens = kassabov_generators(m, field);
  return Homomorphism(m, rankmetric::iota(n, m, gens.a), rankmetric::iota(n, m, gens.b));
}

Homomorphism Homomorphism::from_delta(const DeltaEmbedding& e) {
  if (!e.unital()) {
    fail(ErrorKind::NotUnital, "delta-embedding has delta " + e.delta().str() + ", not 0");
  }
  auto gens = kassabov_generators(e.source_dim(), e.field());
  return Homomorphism(e.source_dim(), e.apply(gens.a), e.apply(gens.b));
}

Matrix Homomorphism::apply(const Matrix& x) const {
  if (x.rows() != m_ || x.cols() != m_) {
    fail(ErrorKind::DimensionMismatch, "argument is not in M_" + std::to_string(m_));
  }
  require_same_field(x, image_a_);
  const auto& f = field();
  const std::size_t n = target_dim();
  Matrix out(f, n, n);
  auto dst = out.data();
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) {
      const Code c = x(i, j);
      if (c == 0) continue;
      const Code* mc = f.mul_row(c);
      const auto src = units_[i * m_ + j].data();
      for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = f.add(dst[k], mc[src[k]]);
    }
  }
  return out;
}

Matrix Homomorphism::module_basis() const {
  const std::size_t n = target_dim();
  const Subspace top = image_basis(units_[0]);
  const std::size_t t = top.dim();
  if (t * m_ != n) fail(ErrorKind::NotUnital, "image of E_11 has the wrong dimension");
  Matrix u(field(), n, n);
  const Matrix tops = top.columns();
  for (std::size_t l = 0; l < t; ++l) {
    Matrix v(field(), n, 1);
    for (std::size_t r = 0; r < n; ++r) v(r, 0) = tops(r, l);
    for (std::size_t i = 0; i < m_; ++i) {
      const Matrix col = units_[i * m_] * v;
      for (std::size_t r = 0; r < n; ++r) u(r, l * m_ + i) = col(r, 0);
    }
  }
  return u;
}

DeltaEmbedding Homomorphism::as_delta() const {
  return DeltaEmbedding(m_, target_dim(), target_dim() / m_, module_basis());
}

Homomorphism Homomorphism::conjugated(const Matrix& u) const {
  const Matrix ui = invert(u);
  return Homomorphism(m_, u * image_a_ * ui, u * image_b_ * ui);
}

JointEmbedding joint_embed(const FieldSpec& field, std::size_t a_dim, std::size_t b_dim) {
  const std::size_t c = a_dim * b_dim;
  return {c, Homomorphism::iota(field, c, a_dim), Homomorphism::iota(field, c, b_dim)};
}

Matrix skolem_noether_conjugator(const Homomorphism& phi0, const Homomorphism& phi1) {
  if (phi0.source_dim() != phi1.source_dim() || phi0.target_dim() != phi1.target_dim()) {
    fail(ErrorKind::DimensionMismatch, "homomorphisms between different algebras");
  }
  if (!(phi0.field() == phi1.field())) fail(ErrorKind::SpecMismatch, "homomorphisms over different fields");
  return phi1.module_basis() * invert(phi0.module_basis());
}

Matrix skolem_noether_conjugator(const DeltaEmbedding& phi0, const DeltaEmbedding& phi1) {
  if (!phi0.unital() || !phi1.unital()) fail(ErrorKind::NotUnital, "Skolem-Noether needs unital maps");
  if (phi0.source_dim() != phi1.source_dim() || phi0.target_dim() != phi1.target_dim()) {
    fail(ErrorKind::DimensionMismatch, "embeddings between different algebras");
  }
  return phi1.conjugator() * phi0.conjugator_inverse();
}

Amalgam amalgamate(const Homomorphism& phi0, const Homomorphism& phi1) {
  if (phi0.source_dim() != phi1.source_dim()) {
    fail(ErrorKind::DimensionMismatch, "amalgamation needs a common source algebra");
  }
  if (!(phi0.field() == phi1.field())) fail(ErrorKind::SpecMismatch, "homomorphisms over different fields");
  const auto& f = phi0.field();
  const std::size_t a = phi0.source_dim();
  const std::size_t b0 = phi0.target_dim();
  const std::size_t b1 = phi1.target_dim();
  const std::size_t c = b0 * b1;

  // phi_i = conj(u_i) ∘ iota_{b_i,a}, so psi_i = iota_{c,b_i} ∘ conj(u_i^{-1})
  // sends phi_i(x) to iota_{c,a}(x) for both i.
  auto side = [&](const Homomorphism& phi, std::size_t b) {
    const Matrix u = skolem_noether_conjugator(Homomorphism::iota(f, b, a), phi);
    const Matrix ui = invert(u);
    const auto gens = kassabov_generators(b, f);
    return Homomorphism(b, iota(c, b, ui * gens.a * u), iota(c, b, ui * gens.b * u));
  };
  return {c, side(phi0, b0), side(phi1, b1)};
}

}  // namespace rankmetric
