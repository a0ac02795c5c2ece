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

#include "rankmetric/kernels.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rankmetric::kernels {

namespace {

// acc[j] += row[j] * s for all j. In characteristic 2 addition of codes is
// XOR of the coefficient vectors.
inline void axpy(const FieldSpec& f, Code* acc, const Code* row, Code s, std::size_t n) {
  const Code* ms = f.mul_row(s);
  if (f.p() == 2) {
    if (s == 1) {
      for (std::size_t j = 0; j < n; ++j) acc[j] ^= row[j];
    } else {
      for (std::size_t j = 0; j < n; ++j) acc[j] ^= ms[row[j]];
    }
    return;
  }
  for (std::size_t j = 0; j < n; ++j) acc[j] = f.add(acc[j], ms[row[j]]);
}

inline void multiply_row(const Matrix& a, const Matrix& b, Matrix& c, std::size_t i) {
  const auto& f = a.field();
  const std::size_t inner = a.cols();
  const std::size_t m = b.cols();
  Code* out = c.data().data() + i * m;
  for (std::size_t k = 0; k < inner; ++k) {
    const Code aik = a(i, k);
    if (aik != 0) axpy(f, out, b.data().data() + k * m, aik, m);
  }
}

inline void kron_row(const Matrix& x, const Matrix& y, Matrix& out, std::size_t r) {
  const auto& f = x.field();
  const std::size_t xr = r / y.rows();
  const std::size_t yr = r % y.rows();
  Code* dst = out.data().data() + r * out.cols();
  for (std::size_t xc = 0; xc < x.cols(); ++xc) {
    const Code* ms = f.mul_row(x(xr, xc));
    for (std::size_t yc = 0; yc < y.cols(); ++yc) {
      dst[xc * y.cols() + yc] = ms[y(yr, yc)];
    }
  }
}

// Finds and normalizes the next pivot at or below row r in column c.
// Returns false when the column has no pivot.
bool place_pivot(Matrix& m, std::size_t r, std::size_t c) {
  const auto& f = m.field();
  std::size_t i = r;
  while (i < m.rows() && m(i, c) == 0) ++i;
  if (i == m.rows()) return false;
  if (i != r) {
    auto ri = m.row(i);
    auto rr = m.row(r);
    std::swap_ranges(ri.begin(), ri.end(), rr.begin());
  }
  const Code inv = f.inv(m(r, c));
  if (inv != 1) {
    const Code* mi = f.mul_row(inv);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = mi[m(r, j)];
  }
  return true;
}

inline void eliminate(Matrix& m, std::size_t r, std::size_t c, std::size_t i) {
  const auto& f = m.field();
  const Code factor = m(i, c);
  if (i == r || factor == 0) return;
  const std::size_t width = m.cols() - c;
  axpy(f, m.data().data() + i * m.cols() + c, m.data().data() + r * m.cols() + c,
       f.neg(factor), width);
}

}  // namespace

Matrix multiply_serial(const Matrix& a, const Matrix& b) {
  Matrix c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) multiply_row(a, b, c, i);
  return c;
}

Matrix multiply_parallel(const Matrix& a, const Matrix& b) {
  Matrix c(a.field(), a.rows(), b.cols());
  const auto n = static_cast<std::int64_t>(a.rows());
  const bool big = a.rows() * b.cols() >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (big)
  for (std::int64_t i = 0; i < n; ++i) multiply_row(a, b, c, static_cast<std::size_t>(i));
  return c;
}

std::vector<std::size_t> rref_serial(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    if (!place_pivot(m, r, c)) continue;
    for (std::size_t i = 0; i < m.rows(); ++i) eliminate(m, r, c, i);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::size_t> rref_parallel(Matrix& m) {
  std::vector<std::size_t> pivots;
  const bool big = m.rows() * m.cols() >= kParallelThreshold;
  const auto rows = static_cast<std::int64_t>(m.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    if (!place_pivot(m, r, c)) continue;
#pragma omp parallel for schedule(static) if (big)
    for (std::int64_t i = 0; i < rows; ++i) eliminate(m, r, c, static_cast<std::size_t>(i));
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Matrix kron_serial(const Matrix& x, const Matrix& y) {
  Matrix out(x.field(), x.rows() * y.rows(), x.cols() * y.cols());
  for (std::size_t r = 0; r < out.rows(); ++r) kron_row(x, y, out, r);
  return out;
}

Matrix kron_parallel(const Matrix& x, const Matrix& y) {
  Matrix out(x.field(), x.rows() * y.rows(), x.cols() * y.cols());
  const auto rows = static_cast<std::int64_t>(out.rows());
  const bool big = out.rows() * out.cols() >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (big)
  for (std::int64_t r = 0; r < rows; ++r) kron_row(x, y, out, static_cast<std::size_t>(r));
  return out;
}

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace rankmetric::kernels
