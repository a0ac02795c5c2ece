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

#include "rankmetric/gf.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "rankmetric/error.hpp"

namespace rankmetric {

struct FieldSpec::Tables {
  int p = 0;
  int k = 0;
  int q = 0;
  std::vector<int> modulus;
  std::vector<Code> add, mul, neg, inv;
};

namespace {

// Conway polynomials for the non-prime orders up to 64.
const std::map<int, std::pair<int, std::vector<int>>>& builtin_table() {
  static const std::map<int, std::pair<int, std::vector<int>>> table = {
      {4, {2, {1, 1, 1}}},
      {8, {2, {1, 1, 0, 1}}},
      {16, {2, {1, 1, 0, 0, 1}}},
      {32, {2, {1, 0, 1, 0, 0, 1}}},
      {64, {2, {1, 1, 0, 1, 1, 0, 1}}},
      {9, {3, {2, 2, 1}}},
      {27, {3, {1, 2, 0, 1}}},
      {25, {5, {2, 4, 1}}},
      {49, {7, {3, 6, 1}}},
  };
  return table;
}

int ipow(int base, int e) {
  int r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// Remainder of num modulo the monic polynomial den over F_p, in place.
void poly_mod(std::vector<int>& num, std::span<const int> den, int p) {
  const std::size_t dd = den.size() - 1;
  for (std::size_t i = num.size(); i-- > dd;) {
    const int c = num[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      num[i - dd + j] = ((num[i - dd + j] - c * den[j]) % p + p) % p;
    }
  }
  num.resize(std::min(num.size(), dd));
}

}  // namespace

bool is_prime(int n) noexcept {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(int p, std::span<const int> poly) {
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  for (int d = 1; 2 * d <= deg; ++d) {
    // Every monic divisor candidate of degree d.
    const int count = ipow(p, d);
    for (int idx = 0; idx < count; ++idx) {
      std::vector<int> div(d + 1);
      int v = idx;
      for (int i = 0; i < d; ++i) {
        div[i] = v % p;
        v /= p;
      }
      div[d] = 1;
      std::vector<int> rem(poly.begin(), poly.end());
      poly_mod(rem, div, p);
      bool zero = true;
      for (int c : rem) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

FieldSpec::FieldSpec(std::shared_ptr<const Tables> t)
    : tables_(std::move(t)),
      q_(tables_->q),
      add_(tables_->add.data()),
      mul_(tables_->mul.data()),
      neg_(tables_->neg.data()),
      inv_(tables_->inv.data()) {}

FieldSpec FieldSpec::make(int p, int k, std::optional<std::vector<int>> modulus) {
  if (!is_prime(p)) fail(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  if (k < 1) fail(ErrorKind::InvalidArgument, "field degree must be positive");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      fail(ErrorKind::FieldTooLarge,
           "fields of order above " + std::to_string(kMaxFieldOrder) + " are not supported");
    }
  }
  std::vector<int> mod;
  if (modulus) {
    mod = *modulus;
  } else if (k == 1) {
    mod = {0, 1};
  } else {
    const auto& table = builtin_table();
    auto it = table.find(static_cast<int>(q));
    if (it == table.end() || it->second.first != p) {
      fail(ErrorKind::NoBuiltinModulus, "no built-in modulus for GF(" + std::to_string(p) + "^" +
                                            std::to_string(k) + ")");
    }
    mod = it->second.second;
  }
  if (static_cast<int>(mod.size()) != k + 1 || mod.back() != 1) {
    fail(ErrorKind::ReducibleModulus, "modulus must be monic of degree " + std::to_string(k));
  }
  for (int c : mod) {
    if (c < 0 || c >= p) fail(ErrorKind::InvalidArgument, "modulus coefficient out of range");
  }
  if (!is_irreducible(p, mod)) {
    fail(ErrorKind::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->k = k;
  t->q = static_cast<int>(q);
  t->modulus = mod;
  const int qq = t->q;
  t->add.resize(qq * qq);
  t->mul.resize(qq * qq);
  t->neg.resize(qq);
  t->inv.resize(qq);

  std::vector<std::vector<int>> digits(qq, std::vector<int>(k));
  for (int a = 0; a < qq; ++a) {
    int v = a;
    for (int i = 0; i < k; ++i) {
      digits[a][i] = v % p;
      v /= p;
    }
  }
  auto encode = [&](const std::vector<int>& c) {
    int code = 0;
    for (int i = k; i-- > 0;) code = code * p + (i < static_cast<int>(c.size()) ? c[i] : 0);
    return static_cast<Code>(code);
  };
  for (int a = 0; a < qq; ++a) {
    std::vector<int> n(k);
    for (int i = 0; i < k; ++i) n[i] = (p - digits[a][i]) % p;
    t->neg[a] = encode(n);
    for (int b = 0; b < qq; ++b) {
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i) s[i] = (digits[a][i] + digits[b][i]) % p;
      t->add[a * qq + b] = encode(s);
      std::vector<int> prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + digits[a][i] * digits[b][j]) % p;
      }
      poly_mod(prod, mod, p);
      t->mul[a * qq + b] = encode(prod);
    }
  }
  t->inv[0] = 0;
  for (int a = 1; a < qq; ++a) {
    for (int b = 1; b < qq; ++b) {
      if (t->mul[a * qq + b] == 1) {
        t->inv[a] = static_cast<Code>(b);
        break;
      }
    }
  }
  return FieldSpec(std::move(t));
}

FieldSpec FieldSpec::builtin(int q) {
  if (q < 2 || q > kMaxBuiltinOrder) {
    fail(ErrorKind::NoBuiltinModulus, "no built-in field of order " + std::to_string(q));
  }
  static std::mutex mu;
  static std::map<int, FieldSpec> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(q); it != cache.end()) return it->second;
  for (int p = 2; p <= q; ++p) {
    if (!is_prime(p) || q % p != 0) continue;
    int k = 0;
    int v = q;
    while (v % p == 0) {
      v /= p;
      ++k;
    }
    if (v != 1) break;
    auto spec = make(p, k);
    cache.emplace(q, spec);
    return spec;
  }
  fail(ErrorKind::NoBuiltinModulus, std::to_string(q) + " is not a prime power");
}

int FieldSpec::p() const noexcept { return tables_->p; }
int FieldSpec::k() const noexcept { return tables_->k; }
int FieldSpec::q() const noexcept { return q_; }
const std::vector<int>& FieldSpec::modulus() const noexcept { return tables_->modulus; }

Code FieldSpec::inv(Code a) const {
  if (a == 0) fail(ErrorKind::ZeroInverse, "inverse of zero");
  return inv_[a];
}

Code FieldSpec::pow(Code a, std::uint64_t e) const noexcept {
  Code result = 1;
  Code base = a;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

std::vector<int> FieldSpec::coeffs(Code a) const {
  std::vector<int> c(k());
  int v = a;
  for (int i = 0; i < k(); ++i) {
    c[i] = v % p();
    v /= p();
  }
  return c;
}

Code FieldSpec::encode(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > k()) {
    fail(ErrorKind::InvalidArgument, "too many coefficients");
  }
  int code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] < 0 || coeffs[i] >= p()) {
      fail(ErrorKind::InvalidArgument, "coefficient out of range");
    }
    code = code * p() + coeffs[i];
  }
  return static_cast<Code>(code);
}

std::string FieldSpec::serialize() const {
  std::ostringstream os;
  os << p() << ' ' << k();
  for (int c : modulus()) os << ' ' << c;
  return os.str();
}

FieldSpec FieldSpec::parse(const std::string& line) {
  std::istringstream is(line);
  int p = 0;
  int k = 0;
  if (!(is >> p >> k) || k < 1 || k > 16) fail(ErrorKind::ParseError, "malformed field line");
  std::vector<int> mod(k + 1);
  for (int& c : mod) {
    if (!(is >> c)) fail(ErrorKind::ParseError, "malformed field line");
  }
  std::string rest;
  if (is >> rest) fail(ErrorKind::ParseError, "trailing data in field line");
  return make(p, k, mod);
}

bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
  if (a.tables_ == b.tables_) return true;
  if (!a.tables_ || !b.tables_) return false;
  return a.tables_->p == b.tables_->p && a.tables_->modulus == b.tables_->modulus;
}

FieldElement::FieldElement(FieldSpec spec, Code code) : spec_(std::move(spec)), code_(code) {
  if (code_ >= spec_.q()) fail(ErrorKind::InvalidArgument, "element code out of range");
}

namespace {

const FieldSpec& common(const FieldElement& a, const FieldElement& b) {
  if (!(a.spec() == b.spec())) fail(ErrorKind::SpecMismatch, "operands from different fields");
  return a.spec();
}

}  // namespace

FieldElement FieldElement::inv() const { return {spec_, spec_.inv(code_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {spec_, spec_.pow(code_, e)}; }
FieldElement FieldElement::operator-() const { return {spec_, spec_.neg(code_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const auto& f = common(a, b);
  return {f, f.add(a.code(), b.code())};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const auto& f = common(a, b);
  return {f, f.sub(a.code(), b.code())};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const auto& f = common(a, b);
  return {f, f.mul(a.code(), b.code())};
}

std::vector<FieldElement> enumerate_elements(const FieldSpec& spec) {
  std::vector<FieldElement> out;
  out.reserve(spec.q());
  for (int c = 0; c < spec.q(); ++c) out.emplace_back(spec, static_cast<Code>(c));
  return out;
}

}  // namespace rankmetric
