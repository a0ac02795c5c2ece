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

// Reference computations used only by the tests. They deliberately avoid the
// library's tables and elimination kernels.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "rankmetric/error.hpp"
#include "rankmetric/matrix.hpp"

namespace oracle {

/// The kind of the library error f raises, if any.
inline std::optional<rankmetric::ErrorKind> kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const rankmetric::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

using Poly = std::vector<int>;

/// Product of two polynomials over F_p reduced mod a monic modulus.
inline Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus, int p) {
  const std::size_t k = modulus.size() - 1;
  std::vector<int> prod(2 * k, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = prod.size(); d-- > k;) {
    const int c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= k; ++i) {
      prod[d - k + i] = ((prod[d - k + i] - c * modulus[i]) % p + p) % p;
    }
  }
  prod.resize(k);
  return prod;
}

inline int inv_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  return 0;
}

/// Rank over a prime field by plain modular elimination.
inline std::size_t rank_mod_p(std::vector<std::vector<int>> m, int p) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] % p == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const int inv = inv_mod(m[r][c], p);
    for (auto& v : m[r]) v = v * inv % p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const int f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

inline std::vector<std::vector<int>> to_rows(const rankmetric::Matrix& x) {
  std::vector<std::vector<int>> out(x.rows(), std::vector<int>(x.cols()));
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out[i][j] = x(i, j);
  return out;
}

/// Rank of a matrix over a prime field, computed independently.
inline std::size_t rank(const rankmetric::Matrix& x) { return rank_mod_p(to_rows(x), x.field().p()); }

/// Kronecker product entry by entry.
inline rankmetric::Matrix kron(const rankmetric::Matrix& x, const rankmetric::Matrix& y) {
  rankmetric::Matrix out(x.field(), x.rows() * y.rows(), x.cols() * y.cols());
  const auto& f = x.field();
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      for (std::size_t k = 0; k < y.rows(); ++k)
        for (std::size_t l = 0; l < y.cols(); ++l)
          out(i * y.rows() + k, j * y.cols() + l) = f.mul(x(i, j), y(k, l));
  return out;
}

/// x (x) I_k written out.
inline rankmetric::Matrix tensor_identity(const rankmetric::Matrix& x, std::size_t k) {
  return oracle::kron(x, rankmetric::Matrix::identity(x.field(), k));
}

/// Product by the schoolbook triple loop.
inline rankmetric::Matrix multiply(const rankmetric::Matrix& a, const rankmetric::Matrix& b) {
  const auto& f = a.field();
  rankmetric::Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      rankmetric::Code acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = f.add(acc, f.mul(a(i, k), b(k, j)));
      out(i, j) = acc;
    }
  return out;
}

/// Adds a random rank-t matrix to x.
inline rankmetric::Matrix perturb(const rankmetric::Matrix& x, std::size_t t, std::mt19937_64& rng) {
  if (t == 0) return x;
  for (;;) {
    const rankmetric::Matrix e = rankmetric::random_rank(x.field(), x.rows(), t, rng);
    if (rankmetric::rank(e) == t) return x + e;
  }
}

}  // namespace oracle
