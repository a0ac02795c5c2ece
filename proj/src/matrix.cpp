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

#include "rankmetric/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "rankmetric/error.hpp"
#include "rankmetric/kernels.hpp"

namespace rankmetric {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Code> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    fail(ErrorKind::DimensionMismatch, "entry count does not match shape");
  }
  for (Code c : data_) {
    if (c >= field_.q()) fail(ErrorKind::InvalidArgument, "entry out of field range");
  }
}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::unit(const FieldSpec& field, std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(field, n, n);
  m(i, j) = 1;
  return m;
}

std::vector<Code> Matrix::column(std::size_t c) const {
  std::vector<Code> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::pow(unsigned e) const {
  require_square(*this);
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Matrix Matrix::scaled(Code s) const {
  Matrix out(*this);
  const Code* ms = field_.mul_row(s);
  for (Code& c : out.data_) c = ms[c];
  return out;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Code c) { return c == 0; });
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = field_.add(data_[i], o.data_[i]);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = field_.sub(data_[i], o.data_[i]);
  return *this;
}

Matrix operator-(const Matrix& a) {
  Matrix out(a);
  for (Code& c : out.data_) c = a.field_.neg(c);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) fail(ErrorKind::DimensionMismatch, "inner dimensions differ");
  return kernels::multiply_parallel(a, b);
}

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) fail(ErrorKind::SpecMismatch, "matrices over different fields");
}

void require_same_shape(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorKind::DimensionMismatch,
         "shape " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
             std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

void require_square(const Matrix& a) {
  if (!a.square()) fail(ErrorKind::DimensionMismatch, "matrix is not square");
}

std::size_t rank(const Matrix& m) {
  Matrix work(m);
  return kernels::rref_parallel(work).size();
}

RankDistance rank_distance(const Matrix& x, const Matrix& y) {
  require_same_shape(x, y);
  require_square(x);
  return {static_cast<std::int64_t>(rank(x - y)), static_cast<std::int64_t>(x.rows())};
}

RankDistance normalized_rank(const Matrix& x) {
  require_square(x);
  return {static_cast<std::int64_t>(rank(x)), static_cast<std::int64_t>(x.rows())};
}

Matrix kron(const Matrix& x, const Matrix& y) {
  require_same_field(x, y);
  return kernels::kron_parallel(x, y);
}

Matrix direct_sum(std::span<const Matrix> blocks, std::size_t pad_zeros) {
  if (blocks.empty()) fail(ErrorKind::InvalidArgument, "direct sum needs at least one block");
  std::size_t n = pad_zeros;
  for (const auto& b : blocks) {
    require_square(b);
    require_same_field(b, blocks.front());
    n += b.rows();
  }
  Matrix out(blocks.front().field(), n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      std::copy(b.row(r).begin(), b.row(r).end(), out.row(off + r).begin() + off);
    }
    off += b.rows();
  }
  return out;
}

Matrix repeat_block(const Matrix& x, std::size_t copies, std::size_t pad_zeros) {
  require_square(x);
  const std::size_t m = x.rows();
  const std::size_t n = m * copies + pad_zeros;
  Matrix out(x.field(), n, n);
  for (std::size_t c = 0; c < copies; ++c) {
    for (std::size_t r = 0; r < m; ++r) {
      std::copy(x.row(r).begin(), x.row(r).end(), out.row(c * m + r).begin() + c * m);
    }
  }
  return out;
}

namespace {

// [m | I] reduced; the right half is the inverse when the left is I.
bool gauss_jordan_inverse(const Matrix& m, Matrix* inverse) {
  require_square(m);
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), aug.row(r).begin());
    aug(r, n + r) = 1;
  }
  const auto pivots = kernels::rref_parallel(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return false;
  if (inverse != nullptr) {
    Matrix inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r) {
      std::copy(aug.row(r).begin() + n, aug.row(r).end(), inv.row(r).begin());
    }
    *inverse = std::move(inv);
  }
  return true;
}

}  // namespace

Matrix invert(const Matrix& m) {
  Matrix inv(m.field(), 0, 0);
  if (!gauss_jordan_inverse(m, &inv)) fail(ErrorKind::Singular, "matrix is singular");
  return inv;
}

bool is_invertible(const Matrix& m) {
  return m.square() && rank(m) == m.rows();
}

GeneratorPair kassabov_generators(std::size_t n, const FieldSpec& field) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "generator dimension must be positive");
  Matrix a(field, n, n);
  Matrix b(field, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    a(i + 1, i) = 1;
    b(i, i + 1) = 1;
  }
  return {std::move(a), std::move(b)};
}

namespace {

// ba + (p+1) a^{n-1} b^{n-1}; the coefficient p+1 is 1 in characteristic p.
Matrix relation_unit(const Matrix& a, const Matrix& b, std::size_t n) {
  const auto e = static_cast<unsigned>(n - 1);
  return b * a + a.pow(e) * b.pow(e);
}

}  // namespace

bool satisfies_relations(const Matrix& a, const Matrix& b, std::size_t n) {
  require_same_shape(a, b);
  require_square(a);
  if (n < 1) return false;
  const auto e = static_cast<unsigned>(n);
  return a.pow(e).is_zero() && b.pow(e).is_zero() &&
         relation_unit(a, b, n) == Matrix::identity(a.field(), a.rows());
}

std::vector<Matrix> matrix_units(const Matrix& a, const Matrix& b, std::size_t n) {
  require_same_shape(a, b);
  require_square(a);
  if (n < 1) fail(ErrorKind::InvalidArgument, "generator dimension must be positive");
  const auto e = static_cast<unsigned>(n);
  const Matrix u = relation_unit(a, b, n);
  const bool ok = a.pow(e).is_zero() && b.pow(e).is_zero() && u * u == u && u * a == a &&
                  a * u == a && u * b == b && b * u == b;
  if (!ok) fail(ErrorKind::RelationsNotSatisfied, "generator pair violates the relations");

  const Matrix corner = a.pow(e - 1) * b.pow(e - 1);
  std::vector<Matrix> left;   // b^{n-i} * corner, i = 1..n
  std::vector<Matrix> right;  // a^{n-j}, j = 1..n
  left.reserve(n);
  right.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    left.push_back(b.pow(static_cast<unsigned>(n - i)) * corner);
    right.push_back(a.pow(static_cast<unsigned>(n - i)));
  }
  std::vector<Matrix> units;
  units.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) units.push_back(left[i] * right[j]);
  }
  return units;
}

// ---------------------------------------------------------------------------
// Subspaces

Subspace::Subspace(FieldSpec field, std::size_t ambient) : basis_(std::move(field), 0, ambient) {}

Subspace::Subspace(Matrix basis, std::vector<std::size_t> pivots)
    : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::from_rows(Matrix rows) {
  auto pivots = kernels::rref_parallel(rows);
  Matrix basis(rows.field(), pivots.size(), rows.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::copy(rows.row(r).begin(), rows.row(r).end(), basis.row(r).begin());
  }
  return Subspace(std::move(basis), std::move(pivots));
}

Subspace Subspace::full(const FieldSpec& field, std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(Matrix::identity(field, ambient), std::move(pivots));
}

bool Subspace::contains(std::span<const Code> v) const {
  if (v.size() != ambient_dim()) fail(ErrorKind::DimensionMismatch, "vector length differs");
  // Reduce v against the echelon basis; v is in the span iff it reduces to 0.
  std::vector<Code> w(v.begin(), v.end());
  const auto& f = field();
  for (std::size_t r = 0; r < dim(); ++r) {
    const Code c = w[pivots_[r]];
    if (c == 0) continue;
    const Code* ms = f.mul_row(f.neg(c));
    for (std::size_t j = pivots_[r]; j < w.size(); ++j) w[j] = f.add(w[j], ms[basis_(r, j)]);
  }
  return std::all_of(w.begin(), w.end(), [](Code c) { return c == 0; });
}

bool Subspace::contains(const Subspace& s) const {
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (!contains(s.vector(i))) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) noexcept {
  if (auto c = a.ambient_dim() <=> b.ambient_dim(); c != 0) return c;
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  const auto da = a.basis_.data();
  const auto db = b.basis_.data();
  return std::lexicographical_compare_three_way(da.begin(), da.end(), db.begin(), db.end());
}

Subspace kernel_basis(const Matrix& m) {
  Matrix work(m);
  const auto pivots = kernels::rref_parallel(work);
  const auto& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix vecs(f, m.cols() - pivots.size(), m.cols());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    vecs(out, free) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) vecs(out, pivots[r]) = f.neg(work(r, free));
    ++out;
  }
  return Subspace::from_rows(std::move(vecs));
}

Subspace image_basis(const Matrix& m) { return Subspace::from_columns(m); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    fail(ErrorKind::DimensionMismatch, "subspaces in different ambient spaces");
  }
  // a ∩ b = (a^⊥ + b^⊥)^⊥ under the standard bilinear form.
  const Subspace ann_a = kernel_basis(a.rows());
  const Subspace ann_b = kernel_basis(b.rows());
  Matrix stacked(a.field(), ann_a.dim() + ann_b.dim(), a.ambient_dim());
  for (std::size_t r = 0; r < ann_a.dim(); ++r) {
    std::copy(ann_a.vector(r).begin(), ann_a.vector(r).end(), stacked.row(r).begin());
  }
  for (std::size_t r = 0; r < ann_b.dim(); ++r) {
    std::copy(ann_b.vector(r).begin(), ann_b.vector(r).end(),
              stacked.row(ann_a.dim() + r).begin());
  }
  return kernel_basis(stacked);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    fail(ErrorKind::DimensionMismatch, "subspaces in different ambient spaces");
  }
  Matrix stacked(a.field(), a.dim() + b.dim(), a.ambient_dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    std::copy(a.vector(r).begin(), a.vector(r).end(), stacked.row(r).begin());
  }
  for (std::size_t r = 0; r < b.dim(); ++r) {
    std::copy(b.vector(r).begin(), b.vector(r).end(), stacked.row(a.dim() + r).begin());
  }
  return Subspace::from_rows(std::move(stacked));
}

Subspace apply(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) fail(ErrorKind::DimensionMismatch, "matrix does not act on subspace");
  return Subspace::from_rows(s.rows() * m.transpose());
}

std::vector<std::size_t> complement_indices(const Subspace& s) {
  std::vector<bool> is_pivot(s.ambient_dim(), false);
  for (auto p : s.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.ambient_dim(); ++i) {
    if (!is_pivot[i]) out.push_back(i);
  }
  return out;
}

Matrix random_matrix(const FieldSpec& field, std::size_t rows, std::size_t cols,
                     std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(0, field.q() - 1);
  Matrix m(field, rows, cols);
  for (Code& c : m.data()) c = static_cast<Code>(dist(rng));
  return m;
}

Matrix random_unit(const FieldSpec& field, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = random_matrix(field, n, n, rng);
    if (is_invertible(m)) return m;
  }
}

Matrix random_rank(const FieldSpec& field, std::size_t n, std::size_t r, std::mt19937_64& rng) {
  if (r > n) fail(ErrorKind::InvalidArgument, "rank exceeds dimension");
  Matrix d(field, n, n);
  for (std::size_t i = 0; i < r; ++i) d(i, i) = 1;
  return random_unit(field, n, rng) * d * random_unit(field, n, rng);
}

}  // namespace rankmetric
