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
#include <iosfwd>
#include <string>
#include <vector>

#include "rankmetric/embeddings.hpp"
#include "rankmetric/matrix.hpp"
#include "rankmetric/rational.hpp"

namespace rankmetric {

/// How far an approximate generator pair (x, y) in M_{n_K} is from
/// satisfying the relations of M_n.
struct RelationDefect {
  std::size_t n = 0;
  std::size_t ambient = 0;
  RankDistance d_xn;   // d(x^n, 0)
  RankDistance d_yn;   // d(y^n, 0)
  RankDistance d_rel;  // d(yx + x^{n-1} y^{n-1}, 1)
  Rational d_rx;       // |rank(x)/n_K - (n-1)/n|
  Rational d_ry;
  Rational delta;      // max of the five

  /// All five components over the common denominator n * n_K.
  std::string str() const;
};

/// yx + x^{n-1} y^{n-1} - 1.
Matrix relation_residual(const Matrix& x, const Matrix& y, std::size_t n);

/// Throws DimensionMismatch unless x, y are square of one size n_K >= n.
RelationDefect relation_defect(const Matrix& x, const Matrix& y, std::size_t n);

/// W_0 = ker y ∩ ker x^n ∩ ker R and W_k = x W_{k-1} ∩ ker R, k < n, where
/// R is the relation residual.
std::vector<Subspace> w_chain(const Matrix& x, const Matrix& y, std::size_t n);

/// V = W + yW + ... + y^{n-1} W for W = W_{n-1}.
Subspace v_space(const Matrix& x, const Matrix& y, std::size_t n, const Subspace& w_last);

struct RepairCertificate {
  std::size_t n = 0;
  std::size_t ambient = 0;
  std::size_t dim_V = 0;
  std::vector<std::size_t> dims_W;
  RankDistance d_x;
  RankDistance d_y;
  Rational delta;                    // relation defect of the input
  Rational bound;                    // (4 + n) n delta
  RankDistance residual_rank_bound;  // (n_K - dim V) / n_K
  std::size_t multiplicity = 0;      // floor(n_K / n)
  std::size_t fresh_copies = 0;      // copies placed outside V
  std::size_t kernel_padding = 0;    // padding vectors taken from ker x ∩ ker y

  /// True when delta < 1 / ((4 + n) n), the regime where bound < 1.
  bool bound_applies() const;
};

struct RepairResult {
  DeltaEmbedding psi;  // M_n -> M_{n_K}, multiplicity floor(n_K / n)
  Matrix basis_change; // the conjugator of psi
  Matrix x_repaired;   // psi(a)
  Matrix y_repaired;   // psi(b)
  Subspace v;
  RepairCertificate cert;
};

/**
 * Repairs an approximate pair to an exact (r / n_K)-embedding, n_K = m n + r.
 *
 * The conjugator is assembled from the echelon basis w_1..w_d of W_{n-1}:
 * copy j has columns y^{n-1} w_j, ..., y w_j, w_j, so psi agrees with (x, y)
 * on V. The remaining n_K - dim V columns hold up to r padding vectors
 * drawn from ker x ∩ ker y, then m - d fresh copies and any remaining
 * padding on standard basis vectors in index order.
 *
 * Throws NotRepairable when W_{n-1} = 0.
 */
RepairResult repair(const Matrix& x, const Matrix& y, std::size_t n);

/// Recomputes every certificate field, the exact relations of the repaired
/// pair and its agreement with (x, y) on V. Returns the list of mismatches.
std::vector<std::string> verify_repair(const Matrix& x, const Matrix& y, std::size_t n,
                                       const RepairResult& result);

/// The defect budget delta = eps / ((4 + n) n + 1) under which a repair
/// of a delta-close pair lands within eps of the pair's target.
Rational delta_for_epsilon(const Rational& eps, std::size_t n);

void write_certificate(std::ostream& os, const RepairCertificate& cert);

}  // namespace rankmetric
