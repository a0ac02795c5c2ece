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
#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "rankmetric/gf.hpp"
#include "rankmetric/rational.hpp"

namespace rankmetric {

/// Dense row-major matrix over a finite field. Entries are element codes.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Code> entries);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  static Matrix zero(const FieldSpec& field, std::size_t n) { return Matrix(field, n, n); }
  /// Square matrix with a single 1 at (i, j).
  static Matrix unit(const FieldSpec& field, std::size_t n, std::size_t i, std::size_t j);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  const FieldSpec& field() const noexcept { return field_; }

  Code operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Code& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  FieldElement element(std::size_t r, std::size_t c) const { return {field_, (*this)(r, c)}; }

  std::span<const Code> data() const noexcept { return data_; }
  std::span<Code> data() noexcept { return data_; }
  std::span<const Code> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Code> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }

  std::vector<Code> column(std::size_t c) const;
  Matrix transpose() const;
  Matrix pow(unsigned e) const;
  Matrix scaled(Code s) const;
  bool is_zero() const noexcept;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ &&
           a.field_ == b.field_;
  }

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Code> data_;
};

/// Throws SpecMismatch / DimensionMismatch unless the shapes allow a + b.
void require_same_shape(const Matrix& a, const Matrix& b);
void require_same_field(const Matrix& a, const Matrix& b);
void require_square(const Matrix& a);

/// Exact rank by Gauss-Jordan elimination.
std::size_t rank(const Matrix& m);

/// rank(x - y) / n for square x, y of size n.
RankDistance rank_distance(const Matrix& x, const Matrix& y);

/// Normalized rank rank(x) / n.
RankDistance normalized_rank(const Matrix& x);

Matrix kron(const Matrix& x, const Matrix& y);

/// Block diagonal blocks[0] + ... + blocks[k-1] + 0_{pad}.
Matrix direct_sum(std::span<const Matrix> blocks, std::size_t pad_zeros);

/// x^{+k} + 0_{pad}: k diagonal copies of x followed by a zero block.
Matrix repeat_block(const Matrix& x, std::size_t copies, std::size_t pad_zeros);

/// Throws Singular.
Matrix invert(const Matrix& m);
bool is_invertible(const Matrix& m);

struct GeneratorPair {
  Matrix a;  // lower shift, a e_i = e_{i+1}
  Matrix b;  // upper shift, b e_{i+1} = e_i
};

/// The generators a, b of M_n with a^n = b^n = 0 and ba + a^{n-1}b^{n-1} = 1.
GeneratorPair kassabov_generators(std::size_t n, const FieldSpec& field);

/// True when a^n = b^n = 0 and ba + a^{n-1} b^{n-1} = 1 hold exactly.
bool satisfies_relations(const Matrix& a, const Matrix& b, std::size_t n);

/**
 * Matrix units E_ij = b^{n-i} (a^{n-1} b^{n-1}) a^{n-j} (1-based i, j),
 * returned row-major as units[(i-1) * n + (j-1)].
 *
 * The pair must satisfy a^n = b^n = 0 and the unit relation with respect to
 * u = ba + a^{n-1} b^{n-1}: u is idempotent and acts as the identity on a
 * and b. This covers unital pairs (u = 1) and padded images of
 * homomorphisms for n >= 2, where u is the image of 1. For n = 1 the only
 * unit is a^0 b^0 = 1. Throws RelationsNotSatisfied.
 */
std::vector<Matrix> matrix_units(const Matrix& a, const Matrix& b, std::size_t n);

/**
 * A linear subspace of F_q^ambient, kept as the reduced echelon basis (pivot
 * positions strictly increasing, each pivot 1 and the only nonzero in its
 * coordinate across the basis). The canonical form makes equality a
 * bitwise comparison.
 */
class Subspace {
 public:
  Subspace(FieldSpec field, std::size_t ambient);

  /// Span of the given vectors, stored as rows of a matrix.
  static Subspace from_rows(Matrix rows);
  /// Span of the columns.
  static Subspace from_columns(const Matrix& cols) { return from_rows(cols.transpose()); }
  static Subspace full(const FieldSpec& field, std::size_t ambient);

  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const FieldSpec& field() const noexcept { return basis_.field(); }

  /// dim x ambient, reduced row echelon.
  const Matrix& rows() const noexcept { return basis_; }
  /// ambient x dim; the same vectors as columns.
  Matrix columns() const { return basis_.transpose(); }
  std::span<const Code> vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const Code> v) const;
  bool contains(const Subspace& s) const;

  friend bool operator==(const Subspace& a, const Subspace& b) noexcept {
    return a.basis_ == b.basis_;
  }
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) noexcept;

 private:
  explicit Subspace(Matrix basis, std::vector<std::size_t> pivots);

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const Matrix& m);
Subspace image_basis(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// m applied to every vector of s.
Subspace apply(const Matrix& m, const Subspace& s);

/// Standard basis vectors, in index order, that extend s to the whole space.
std::vector<std::size_t> complement_indices(const Subspace& s);

Matrix random_matrix(const FieldSpec& field, std::size_t rows, std::size_t cols,
                     std::mt19937_64& rng);
Matrix random_unit(const FieldSpec& field, std::size_t n, std::mt19937_64& rng);
/// A random matrix of rank exactly r.
Matrix random_rank(const FieldSpec& field, std::size_t n, std::size_t r, std::mt19937_64& rng);

}  // namespace rankmetric
