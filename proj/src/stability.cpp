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

#include "rankmetric/stability.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "rankmetric/error.hpp"

namespace rankmetric {

namespace {

Rational abs_diff(const Rational& a, const Rational& b) { return a > b ? a - b : b - a; }

void check_pair(const Matrix& x, const Matrix& y, std::size_t n) {
  require_same_shape(x, y);
  require_square(x);
  if (n < 1 || x.rows() < n) {
    fail(ErrorKind::DimensionMismatch,
         "ambient dimension " + std::to_string(x.rows()) + " is below model dimension " +
             std::to_string(n));
  }
}

}  // namespace

std::string RelationDefect::str() const {
  const auto den = static_cast<std::int64_t>(n * ambient);
  auto over = [den](const Rational& r) {
    return std::to_string(r.numerator() * (den / r.denominator())) + "/" + std::to_string(den);
  };
  std::ostringstream os;
  os << over(d_xn.value()) << ' ' << over(d_yn.value()) << ' ' << over(d_rel.value()) << ' '
     << over(d_rx) << ' ' << over(d_ry) << ' ' << over(delta);
  return os.str();
}

Matrix relation_residual(const Matrix& x, const Matrix& y, std::size_t n) {
  const auto e = static_cast<unsigned>(n - 1);
  return y * x + x.pow(e) * y.pow(e) - Matrix::identity(x.field(), x.rows());
}

RelationDefect relation_defect(const Matrix& x, const Matrix& y, std::size_t n) {
  check_pair(x, y, n);
  RelationDefect d;
  d.n = n;
  d.ambient = x.rows();
  const auto e = static_cast<unsigned>(n);
  d.d_xn = normalized_rank(x.pow(e));
  d.d_yn = normalized_rank(y.pow(e));
  d.d_rel = normalized_rank(relation_residual(x, y, n));
  const Rational target(static_cast<std::int64_t>(n - 1), static_cast<std::int64_t>(n));
  d.d_rx = abs_diff(normalized_rank(x).value(), target);
  d.d_ry = abs_diff(normalized_rank(y).value(), target);
  d.delta = std::max({d.d_xn.value(), d.d_yn.value(), d.d_rel.value(), d.d_rx, d.d_ry});
  return d;
}

std::vector<Subspace> w_chain(const Matrix& x, const Matrix& y, std::size_t n) {
  check_pair(x, y, n);
  const Subspace ker_r = kernel_basis(relation_residual(x, y, n));
  std::vector<Subspace> chain;
  chain.reserve(n);
  chain.push_back(
      intersect(intersect(kernel_basis(y), kernel_basis(x.pow(static_cast<unsigned>(n)))), ker_r));
  for (std::size_t k = 1; k < n; ++k) chain.push_back(intersect(apply(x, chain.back()), ker_r));
  return chain;
}

Subspace v_space(const Matrix& x, const Matrix& y, std::size_t n, const Subspace& w_last) {
  check_pair(x, y, n);
  Subspace v = w_last;
  Subspace cur = w_last;
  for (std::size_t s = 1; s < n; ++s) {
    cur = apply(y, cur);
    v = subspace_sum(v, cur);
  }
  return v;
}

bool RepairCertificate::bound_applies() const {
  const auto nn = static_cast<std::int64_t>(n);
  return delta < Rational(1, (4 + nn) * nn);
}

RepairResult repair(const Matrix& x, const Matrix& y, std::size_t n) {
  const RelationDefect defect = relation_defect(x, y, n);
  const auto chain = w_chain(x, y, n);
  const Subspace& w = chain.back();
  if (w.dim() == 0) {
    fail(ErrorKind::NotRepairable, "W_{n-1} is trivial (relation defect " + to_string(defect.delta) + ")");
  }
  const Subspace v = v_space(x, y, n, w);
  const std::size_t nk = x.rows();
  const std::size_t d = w.dim();
  if (v.dim() != n * d) {
    fail(ErrorKind::NotRepairable, "dim V differs from n dim W_{n-1}");
  }
  const std::size_t m = nk / n;
  const std::size_t r = nk % n;
  const auto& f = x.field();

  Matrix b(f, nk, nk);
  std::size_t col = 0;
  auto put = [&](std::span<const Code> vec) {
    for (std::size_t i = 0; i < nk; ++i) b(i, col) = vec[i];
    ++col;
  };

  // Copies on V: column i of copy j is y^{n-1-i} w_j.
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<std::vector<Code>> powers(n);
    Matrix cur(f, nk, 1, std::vector<Code>(w.vector(j).begin(), w.vector(j).end()));
    for (std::size_t s = 0; s < n; ++s) {
      powers[s] = cur.column(0);
      cur = y * cur;
    }
    for (std::size_t i = 0; i < n; ++i) put(powers[n - 1 - i]);
  }

  // Padding drawn from ker x ∩ ker y, outside what is already spanned.
  Subspace spanned = v;
  std::vector<std::vector<Code>> padding;
  const Subspace dead = intersect(kernel_basis(x), kernel_basis(y));
  for (std::size_t i = 0; i < dead.dim() && padding.size() < r; ++i) {
    if (spanned.contains(dead.vector(i))) continue;
    padding.emplace_back(dead.vector(i).begin(), dead.vector(i).end());
    Matrix one(f, 1, nk, padding.back());
    spanned = subspace_sum(spanned, Subspace::from_rows(std::move(one)));
  }
  const std::size_t kernel_padding = padding.size();

  // Fresh copies, then the rest of the padding, on standard vectors.
  const auto free = complement_indices(spanned);
  std::size_t next = 0;
  auto standard = [&]() {
    std::vector<Code> e(nk, 0);
    e[free[next++]] = 1;
    return e;
  };
  for (std::size_t c = d; c < m; ++c) {
    for (std::size_t i = 0; i < n; ++i) put(standard());
  }
  for (const auto& p : padding) put(p);
  while (col < nk) put(standard());

  DeltaEmbedding psi(n, nk, m, b);
  const auto gens = kassabov_generators(n, f);
  Matrix xr = psi.apply(gens.a);
  Matrix yr = psi.apply(gens.b);

  RepairCertificate cert;
  cert.n = n;
  cert.ambient = nk;
  cert.dim_V = v.dim();
  for (const auto& wk : chain) cert.dims_W.push_back(wk.dim());
  cert.d_x = rank_distance(x, xr);
  cert.d_y = rank_distance(y, yr);
  cert.delta = defect.delta;
  const auto nn = static_cast<std::int64_t>(n);
  cert.bound = Rational((4 + nn) * nn) * defect.delta;
  cert.residual_rank_bound = {static_cast<std::int64_t>(nk - v.dim()), static_cast<std::int64_t>(nk)};
  cert.multiplicity = m;
  cert.fresh_copies = m - d;
  cert.kernel_padding = kernel_padding;

  return {std::move(psi), std::move(b), std::move(xr), std::move(yr), v, std::move(cert)};
}

std::vector<std::string> verify_repair(const Matrix& x, const Matrix& y, std::size_t n,
                                       const RepairResult& result) {
  std::vector<std::string> problems;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  };
  const auto& c = result.cert;
  const std::size_t nk = x.rows();
  const auto gens = kassabov_generators(n, x.field());
  const Matrix& bm = result.basis_change;
  const Matrix bi = invert(bm);
  const std::size_t m = nk / n;
  const std::size_t r = nk % n;

  // psi recomputed from the stored conjugator by direct multiplication.
  const Matrix xr = bm * repeat_block(gens.a, m, r) * bi;
  const Matrix yr = bm * repeat_block(gens.b, m, r) * bi;
  expect(xr == result.x_repaired && yr == result.y_repaired, "repaired pair does not match psi");
  expect(xr.pow(static_cast<unsigned>(n)).is_zero(), "x' ^ n != 0");
  expect(yr.pow(static_cast<unsigned>(n)).is_zero(), "y' ^ n != 0");
  const Matrix unit = bm * repeat_block(Matrix::identity(x.field(), n), m, r) * bi;
  const auto e = static_cast<unsigned>(n - 1);
  expect(yr * xr + xr.pow(e) * yr.pow(e) == unit, "y'x' + x'^{n-1} y'^{n-1} != psi(1)");

  expect(rank(x - xr) == static_cast<std::size_t>(c.d_x.rank), "d_x mismatch");
  expect(rank(y - yr) == static_cast<std::size_t>(c.d_y.rank), "d_y mismatch");
  expect(relation_defect(x, y, n).delta == c.delta, "delta mismatch");

  const auto chain = w_chain(x, y, n);
  std::vector<std::size_t> dims;
  for (const auto& w : chain) dims.push_back(w.dim());
  expect(dims == c.dims_W, "dims_W mismatch");
  const Subspace v = v_space(x, y, n, chain.back());
  expect(v == result.v && v.dim() == c.dim_V, "V mismatch");
  expect(c.dim_V == n * dims.back(), "dim V != n dim W_{n-1}");
  const Matrix vc = v.columns();
  expect(((x - xr) * vc).is_zero(), "x' disagrees with x on V");
  expect(((y - yr) * vc).is_zero(), "y' disagrees with y on V");
  expect(c.d_x <= c.residual_rank_bound && c.d_y <= c.residual_rank_bound,
         "distance exceeds (n_K - dim V) / n_K");
  if (c.bound_applies()) {
    expect(c.residual_rank_bound.value() <= c.bound, "(n_K - dim V) / n_K exceeds (4+n) n delta");
  }
  return problems;
}

Rational delta_for_epsilon(const Rational& eps, std::size_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  return eps / Rational((4 + nn) * nn + 1);
}

void write_certificate(std::ostream& os, const RepairCertificate& cert) {
  os << "REPAIR n " << cert.n << " n_K " << cert.ambient << '\n';
  os << "delta " << to_string(cert.delta) << '\n';
  os << "dims_W";
  for (auto d : cert.dims_W) os << ' ' << d;
  os << '\n';
  os << "dim_V " << cert.dim_V << '\n';
  os << "d_x " << cert.d_x.str() << " d_y " << cert.d_y.str() << '\n';
  os << "residual_rank_bound " << cert.residual_rank_bound.str() << '\n';
  os << "bound " << to_string(cert.bound) << (cert.bound_applies() ? "" : " (vacuous)") << '\n';
  os << "multiplicity " << cert.multiplicity << " fresh_copies " << cert.fresh_copies
     << " kernel_padding " << cert.kernel_padding << '\n';
  os << "psi_delta " << cert.ambient % cert.n << '/' << cert.ambient << '\n';
}

}  // namespace rankmetric
