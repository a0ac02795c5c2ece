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

#include "rankmetric/ramsey.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <deque>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "rankmetric/embeddings.hpp"
#include "rankmetric/error.hpp"
#include "rankmetric/gf.hpp"

namespace rankmetric {

namespace {

using BigFloat = boost::multiprecision::cpp_bin_float_50;

void require_prime_power(std::uint64_t q) {
  if (q < 2) fail(ErrorKind::NonPrime, std::to_string(q) + " is not a prime power");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint64_t r = q;
  while (r % p == 0) r /= p;
  if (r != 1) fail(ErrorKind::NonPrime, std::to_string(q) + " is not a prime power");
}

void require_divides(std::size_t a, std::size_t b) {
  if (a == 0 || b % a != 0) {
    fail(ErrorKind::NotDivisor, std::to_string(a) + " does not divide " + std::to_string(b));
  }
}

// q^{n^2}, or 0 if it exceeds the enumeration cap.
std::uint64_t matrix_count(std::uint64_t q, std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    total *= q;
    if (total > kMaxEnumeration) return 0;
  }
  return total;
}

std::uint64_t require_enumerable(const FieldSpec& field, std::size_t n) {
  const std::uint64_t total = matrix_count(field.q(), n);
  if (total == 0) {
    fail(ErrorKind::TooLarge, "enumerating " + std::to_string(field.q()) + "^" + std::to_string(n * n) +
                                  " matrices exceeds the cap of 2^20");
  }
  return total;
}

Matrix flatten(const std::vector<Matrix>& ms) {
  const std::size_t len = ms.empty() ? 0 : ms.front().rows() * ms.front().cols();
  Matrix out(ms.front().field(), ms.size(), len);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    std::copy(ms[i].data().begin(), ms[i].data().end(), out.row(i).begin());
  }
  return out;
}

std::size_t side_of(const Subspace& s) {
  std::size_t c = 0;
  while (c * c < s.ambient_dim()) ++c;
  if (c * c != s.ambient_dim()) fail(ErrorKind::DimensionMismatch, "fingerprint ambient is not a square");
  return c;
}

CopyCensus sorted_census(std::size_t a, std::size_t b, std::uint64_t units,
                         std::map<Subspace, std::uint64_t>&& first, const FieldSpec& field) {
  CopyCensus out;
  out.a = a;
  out.b = b;
  out.units = units;
  for (auto& [fp, idx] : first) out.copies.push_back({fp, matrix_from_index(field, b, idx)});
  return out;
}

}  // namespace

BigInt gl_order(std::size_t n, std::uint64_t q) {
  require_prime_power(q);
  BigInt qn = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n));
  BigInt qi = 1;
  BigInt out = 1;
  for (std::size_t i = 0; i < n; ++i) {
    out *= qn - qi;
    qi *= q;
  }
  return out;
}

BigInt sl_order(std::size_t n, std::uint64_t q) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "n must be positive");
  return gl_order(n, q) / (q - 1);
}

Subspace standard_copy(const FieldSpec& field, std::size_t a, std::size_t b) {
  require_divides(a, b);
  std::vector<Matrix> units;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j) units.push_back(iota(b, a, Matrix::unit(field, a, i, j)));
  }
  return span_of(units);
}

Subspace span_of(const std::vector<Matrix>& spanning) {
  if (spanning.empty()) fail(ErrorKind::InvalidArgument, "empty spanning set");
  return Subspace::from_rows(flatten(spanning));
}

Matrix basis_matrix(const Subspace& s, std::size_t i) {
  const std::size_t c = side_of(s);
  const auto v = s.vector(i);
  return Matrix(s.field(), c, c, std::vector<Code>(v.begin(), v.end()));
}

Subspace conjugate_copy(const Subspace& s, const Matrix& g, const Matrix& g_inv) {
  std::vector<Matrix> images;
  images.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) images.push_back(g * basis_matrix(s, i) * g_inv);
  return span_of(images);
}

bool is_unital_subalgebra(const Subspace& s) {
  const std::size_t c = side_of(s);
  if (!s.contains(Matrix::identity(s.field(), c).data())) return false;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Matrix x = basis_matrix(s, i);
    for (std::size_t j = 0; j < s.dim(); ++j) {
      if (!s.contains((x * basis_matrix(s, j)).data())) return false;
    }
  }
  return true;
}

Matrix matrix_from_index(const FieldSpec& field, std::size_t n, std::uint64_t index) {
  Matrix m(field, n, n);
  const std::uint64_t q = field.q();
  for (auto& e : m.data()) {
    e = static_cast<Code>(index % q);
    index /= q;
  }
  return m;
}

CopyCensus copy_census_serial(const FieldSpec& field, std::size_t a, std::size_t b) {
  require_divides(a, b);
  const std::uint64_t total = require_enumerable(field, b);
  const Subspace base = standard_copy(field, a, b);
  std::map<Subspace, std::uint64_t> first;
  std::uint64_t units = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const Matrix g = matrix_from_index(field, b, idx);
    if (!is_invertible(g)) continue;
    ++units;
    first.emplace(conjugate_copy(base, g, invert(g)), idx);
  }
  return sorted_census(a, b, units, std::move(first), field);
}

CopyCensus copy_census(const FieldSpec& field, std::size_t a, std::size_t b) {
  require_divides(a, b);
  const std::uint64_t total = require_enumerable(field, b);
  const Subspace base = standard_copy(field, a, b);
  std::map<Subspace, std::uint64_t> first;
  std::uint64_t units = 0;
#pragma omp parallel
  {
    std::map<Subspace, std::uint64_t> local;
    std::uint64_t local_units = 0;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
      const auto idx = static_cast<std::uint64_t>(i);
      const Matrix g = matrix_from_index(field, b, idx);
      if (!is_invertible(g)) continue;
      ++local_units;
      local.emplace(conjugate_copy(base, g, invert(g)), idx);
    }
#pragma omp critical(rankmetric_census_merge)
    {
      units += local_units;
      for (auto& [fp, idx] : local) {
        auto [it, inserted] = first.emplace(fp, idx);
        if (!inserted && idx < it->second) it->second = idx;
      }
    }
  }
  return sorted_census(a, b, units, std::move(first), field);
}

std::uint64_t stabilizer_order(const FieldSpec& field, std::size_t a, std::size_t b) {
  require_divides(a, b);
  const std::uint64_t total = require_enumerable(field, b);
  const Subspace base = standard_copy(field, a, b);
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < base.dim(); ++i) basis.push_back(basis_matrix(base, i));
  std::uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
    const Matrix g = matrix_from_index(field, b, static_cast<std::uint64_t>(i));
    if (!is_invertible(g)) continue;
    const Matrix gi = invert(g);
    bool fixes = true;
    for (const auto& x : basis) {
      if (!base.contains((g * x * gi).data())) {
        fixes = false;
        break;
      }
    }
    if (fixes) ++count;
  }
  return count;
}

std::vector<Subspace> conjugation_orbit(const FieldSpec& field, std::size_t a, std::size_t b) {
  std::vector<std::pair<Matrix, Matrix>> gens;
  const auto elems = enumerate_elements(field);
  for (const auto& lambda : elems) {
    if (lambda.code() == 0) continue;
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = 0; j < b; ++j) {
        Matrix g = Matrix::identity(field, b);
        if (i == j) {
          if (i != 0 || lambda.code() == 1) continue;
          g(0, 0) = lambda.code();
        } else {
          g(i, j) = lambda.code();
        }
        Matrix gi = invert(g);
        gens.emplace_back(std::move(g), std::move(gi));
      }
    }
  }
  std::set<Subspace> seen;
  std::deque<Subspace> queue;
  Subspace start = standard_copy(field, a, b);
  seen.insert(start);
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    const Subspace cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& [g, gi] : gens) {
      Subspace next = conjugate_copy(cur, g, gi);
      if (seen.insert(next).second) {
        if (seen.size() > kMaxEnumeration) fail(ErrorKind::TooLarge, "orbit exceeds the enumeration cap");
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

CopyCount count_copies(const FieldSpec& field, std::size_t a, std::size_t b, CountMethod method) {
  require_divides(a, b);
  CopyCount out;
  out.method = method;
  if (method == CountMethod::BruteForce) {
    const CopyCensus census = copy_census(field, a, b);
    out.k = census.copies.size();
    out.detail = "distinct conjugates of the standard copy over " + std::to_string(census.units) + " units";
    return out;
  }
  if (a == b || a == 1) {
    out.k = 1;
    out.detail = a == b ? "a = b: the whole algebra" : "a = 1: the scalars";
    return out;
  }
  const std::uint64_t q = field.q();
  const std::uint64_t stab = stabilizer_order(field, a, b);
  // |Aut(M_b)| = |GL_b| / (q - 1); the stabilizer in Aut is stab / (q - 1).
  const BigInt aut = sl_order(b, q);
  const BigInt stab_aut = BigInt(stab) / (q - 1);
  if (stab % (q - 1) != 0 || aut % stab_aut != 0) {
    fail(ErrorKind::InvalidArgument, "stabilizer order does not divide the automorphism count");
  }
  out.k = aut / stab_aut;
  out.detail = "|Aut(M_" + std::to_string(b) + ")| = " + aut.str() + ", |Stab| = " + stab_aut.str();
  return out;
}

RamseyBound ramsey_dimension(std::size_t a, std::size_t b, std::uint64_t q, const Rational& eps,
                             bool force_envelope) {
  require_divides(a, b);
  require_prime_power(q);
  if (eps <= Rational(0) || eps > Rational(1)) fail(ErrorKind::InvalidArgument, "eps must lie in (0, 1]");
  RamseyBound r;
  r.a = a;
  r.b = b;
  r.q = q;
  r.eps = eps;

  bool counted = false;
  if (!force_envelope) {
    if (a == b || a == 1) {
      r.k = 1;
      r.k_source = "trivial";
      counted = true;
    } else if (q <= kMaxBuiltinOrder && matrix_count(q, b) != 0) {
      r.k = count_copies(FieldSpec::builtin(static_cast<int>(q)), a, b, CountMethod::OrbitStabilizer).k;
      r.k_source = "orbit_stabilizer";
      counted = true;
    }
  }
  if (!counted) {
    r.k = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(b * b));
    r.k_source = "envelope";
  }

  r.coefficient = Rational(64) / (eps * eps);
  const std::int64_t inv_ceil = (eps.denominator() + eps.numerator() - 1) / eps.numerator();
  const BigInt two_k = 2 * r.k;
  const BigInt six = BigInt(6 * inv_ceil);
  r.log_argument = two_k > six ? two_k : six;
  r.expression = (r.coefficient.denominator() == 1 ? std::to_string(r.coefficient.numerator())
                                                   : to_string(r.coefficient)) +
                 "*ln(" + r.log_argument.str() + ")";
  const BigFloat bound = BigFloat(r.coefficient.numerator()) / BigFloat(r.coefficient.denominator()) *
                         boost::multiprecision::log(BigFloat(r.log_argument));
  r.decimal = bound.str(6, std::ios_base::fixed);
  r.decimal_short = bound.str(1, std::ios_base::fixed);
  // ln of an integer >= 6 is irrational, so the bound is never itself an integer.
  const BigInt floor_bound = static_cast<BigInt>(boost::multiprecision::floor(bound));
  r.c = (floor_bound / b + 1) * b;
  return r;
}

void write_report(std::ostream& os, const RamseyBound& r) {
  os << "k=" << r.k << " bound≈" << r.decimal_short << " c=" << r.c << '\n';
  os << "inputs a " << r.a << " b " << r.b << " q " << r.q << " eps " << to_string(r.eps) << '\n';
  os << "k " << r.k << " method " << r.k_source << '\n';
  os << "bound " << r.expression << " = " << r.decimal << '\n';
  os << "c " << r.c << '\n';
}

std::vector<Matrix> copy_elements(const Subspace& s) {
  const std::size_t c = side_of(s);
  const std::uint64_t q = s.field().q();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    total *= q;
    if (total > (std::uint64_t{1} << 12)) fail(ErrorKind::TooLarge, "copy has too many elements to list");
  }
  const auto& f = s.field();
  std::vector<Matrix> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Matrix m(f, c, c);
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < s.dim(); ++i) {
      const auto coef = static_cast<Code>(rest % q);
      rest /= q;
      if (coef == 0) continue;
      const auto v = s.vector(i);
      for (std::size_t e = 0; e < v.size(); ++e) m.data()[e] = f.add(m.data()[e], f.mul(coef, v[e]));
    }
    out.push_back(std::move(m));
  }
  return out;
}

Rational copy_distance(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim()) fail(ErrorKind::DimensionMismatch, "copies in different ambients");
  if (s == t) return Rational(0);
  const auto xs = copy_elements(s);
  const auto ys = copy_elements(t);
  const std::size_t c = side_of(s);
  std::vector<std::size_t> ranks(xs.size() * ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) ranks[i * ys.size() + j] = rank(xs[i] - ys[j]);
  }
  std::size_t worst = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::size_t best = c;
    for (std::size_t j = 0; j < ys.size(); ++j) best = std::min(best, ranks[i * ys.size() + j]);
    worst = std::max(worst, best);
  }
  for (std::size_t j = 0; j < ys.size(); ++j) {
    std::size_t best = c;
    for (std::size_t i = 0; i < xs.size(); ++i) best = std::min(best, ranks[i * ys.size() + j]);
    worst = std::max(worst, best);
  }
  return Rational(static_cast<std::int64_t>(worst), static_cast<std::int64_t>(c));
}

Coloring Coloring::constant(Rational value) {
  if (value < Rational(0) || value > Rational(1)) fail(ErrorKind::InvalidArgument, "coloring values lie in [0, 1]");
  Coloring g;
  g.constant_ = value;
  return g;
}

Coloring Coloring::distance_to(Subspace reference, Rational scale) {
  if (scale < 0) fail(ErrorKind::InvalidArgument, "scale must be non-negative");
  Coloring g;
  g.reference_ = std::move(reference);
  g.scale_ = scale;
  return g;
}

Rational Coloring::operator()(const Subspace& s) const {
  if (constant_) return *constant_;
  auto it = cache_.find(s);
  if (it != cache_.end()) return it->second;
  const Rational v = std::min(Rational(1), scale_ * copy_distance(s, *reference_));
  cache_.emplace(s, v);
  return v;
}

void Coloring::check_lipschitz(const std::vector<Subspace>& copies) const {
  if (constant_) return;
  for (std::size_t i = 0; i < copies.size(); ++i) {
    for (std::size_t j = i + 1; j < copies.size(); ++j) {
      const Rational gi = (*this)(copies[i]);
      const Rational gj = (*this)(copies[j]);
      const Rational diff = gi > gj ? gi - gj : gj - gi;
      if (diff == Rational(0)) continue;
      const Rational d = copy_distance(copies[i], copies[j]);
      if (diff > d) {
        fail(ErrorKind::NotLipschitz, "coloring changes by " + to_string(diff) + " across copies at distance " +
                                          to_string(d));
      }
    }
  }
}

std::string Coloring::describe() const {
  if (constant_) return "constant " + to_string(*constant_);
  return "distance-to-copy scale " + to_string(scale_);
}

Rational oscillation(const Coloring& gamma, const std::vector<Subspace>& copies) {
  if (copies.empty()) return Rational(0);
  Rational lo = gamma(copies.front());
  Rational hi = lo;
  for (const auto& s : copies) {
    const Rational v = gamma(s);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

std::vector<Subspace> copies_inside(const CopyCensus& small, const Matrix& g, std::size_t c) {
  require_divides(small.b, c);
  const Matrix gi = invert(g);
  std::vector<Subspace> out;
  out.reserve(small.copies.size());
  for (const auto& rec : small.copies) {
    std::vector<Matrix> images;
    for (std::size_t i = 0; i < rec.fingerprint.dim(); ++i) {
      images.push_back(g * iota(c, small.b, basis_matrix(rec.fingerprint, i)) * gi);
    }
    out.push_back(span_of(images));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SearchResult monochromatic_search(const FieldSpec& field, std::size_t a, std::size_t b, std::size_t c,
                                  const Coloring& gamma, const Rational& eps, const SearchStrategy& strategy) {
  require_divides(a, b);
  require_divides(b, c);
  const CopyCensus small = copy_census(field, a, b);
  SearchResult best;

  auto consider = [&](const Subspace& big, const Matrix& g) {
    const auto inner = copies_inside(small, g, c);
    gamma.check_lipschitz(inner);
    const Rational osc = oscillation(gamma, inner);
    ++best.examined;
    if (!best.copy || osc < best.oscillation) {
      best.copy = big;
      best.witness = g;
      best.oscillation = osc;
    }
    return osc <= eps;
  };

  if (strategy.exhaustive) {
    const CopyCensus big = copy_census(field, b, c);
    for (const auto& rec : big.copies) {
      if (consider(rec.fingerprint, rec.witness)) {
        // Earlier copies all exceeded eps, so the hit is also the minimum.
        best.found = true;
        return best;
      }
    }
  } else {
    if (strategy.trials == 0) fail(ErrorKind::InvalidArgument, "random search needs trials > 0");
    std::mt19937_64 rng(strategy.seed);
    const Subspace base = standard_copy(field, b, c);
    for (std::size_t t = 0; t < strategy.trials; ++t) {
      const Matrix g = random_unit(field, c, rng);
      consider(conjugate_copy(base, g, invert(g)), g);
    }
  }
  best.found = best.copy && best.oscillation <= eps;
  return best;
}

}  // namespace rankmetric
