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

#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "rankmetric/error.hpp"
#include "rankmetric/gf.hpp"

using namespace rankmetric;

using oracle::kind_of;

namespace {

const int kOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64};

}  // namespace

TEST_CASE("construction and validation") {
  const auto gf2 = FieldSpec::make(2, 1);
  CHECK(gf2.q() == 2);
  CHECK(gf2.modulus() == std::vector<int>{0, 1});
  const auto gf4 = FieldSpec::make(2, 2, std::vector<int>{1, 1, 1});
  CHECK(gf4.q() == 4);
  CHECK(gf4 == FieldSpec::builtin(4));

  CHECK(kind_of([] { FieldSpec::make(2, 2, std::vector<int>{0, 0, 1}); }) == ErrorKind::ReducibleModulus);
  CHECK(kind_of([] { FieldSpec::make(2, 2, std::vector<int>{1, 0, 1}); }) == ErrorKind::ReducibleModulus);
  CHECK(kind_of([] { FieldSpec::make(4, 1); }) == ErrorKind::NonPrime);
  CHECK(kind_of([] { FieldSpec::make(2, 9); }) == ErrorKind::FieldTooLarge);
  CHECK(kind_of([] { FieldSpec::make(3, 4); }) == ErrorKind::NoBuiltinModulus);
  CHECK(kind_of([] { FieldSpec::builtin(6); }) == ErrorKind::NoBuiltinModulus);

  // A valid custom modulus gives a field distinct from the built-in one.
  const auto gf8b = FieldSpec::make(2, 3, std::vector<int>{1, 0, 1, 1});
  CHECK(gf8b.q() == 8);
  CHECK_FALSE(gf8b == FieldSpec::builtin(8));
  CHECK(FieldSpec::make(2, 8, std::vector<int>{1, 1, 0, 1, 1, 0, 0, 0, 1}).q() == 256);
}

TEST_CASE("irreducibility by trial division") {
  CHECK(is_irreducible(2, std::vector<int>{1, 1, 1}));
  CHECK_FALSE(is_irreducible(2, std::vector<int>{1, 0, 1}));
  CHECK(is_irreducible(3, std::vector<int>{1, 0, 1}));
  CHECK_FALSE(is_irreducible(5, std::vector<int>{1, 0, 1}));  // 2^2 = -1 mod 5
  // Degree 4 over F_2 with no roots but a quadratic factor: (x^2+x+1)^2.
  CHECK_FALSE(is_irreducible(2, std::vector<int>{1, 0, 1, 0, 1}));
}

TEST_CASE("small worked values") {
  const auto gf2 = FieldSpec::builtin(2);
  CHECK(gf2.add(1, 1) == 0);
  const auto gf4 = FieldSpec::builtin(4);
  const Code x = gf4.encode(std::vector<int>{0, 1});
  const Code x1 = gf4.encode(std::vector<int>{1, 1});
  CHECK(gf4.mul(x, x) == x1);
  CHECK(gf4.inv(x) == x1);
  CHECK(kind_of([&] { gf4.inv(0); }) == ErrorKind::ZeroInverse);
  CHECK(FieldSpec::builtin(3).pow(2, 2) == 1);
}

TEST_CASE("multiplication agrees with polynomial arithmetic") {
  for (int q : kOrders) {
    CAPTURE(q);
    const auto f = FieldSpec::builtin(q);
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        const auto expect = oracle::mulmod(f.coeffs(static_cast<Code>(a)), f.coeffs(static_cast<Code>(b)),
                                           f.modulus(), f.p());
        REQUIRE(f.coeffs(f.mul(static_cast<Code>(a), static_cast<Code>(b))) == expect);
        // Addition is coefficientwise mod p.
        const auto ca = f.coeffs(static_cast<Code>(a));
        const auto cb = f.coeffs(static_cast<Code>(b));
        std::vector<int> sum(ca.size());
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = (ca[i] + cb[i]) % f.p();
        REQUIRE(f.coeffs(f.add(static_cast<Code>(a), static_cast<Code>(b))) == sum);
      }
    }
  }
}

TEST_CASE("field axioms") {
  std::mt19937_64 rng(7);
  for (int q : kOrders) {
    CAPTURE(q);
    const auto f = FieldSpec::builtin(q);
    auto check = [&](Code a, Code b, Code c) {
      REQUIRE(f.add(a, f.add(b, c)) == f.add(f.add(a, b), c));
      REQUIRE(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
      REQUIRE(f.add(a, b) == f.add(b, a));
      REQUIRE(f.mul(a, b) == f.mul(b, a));
      REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    };
    if (q <= 16) {
      for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
          for (int c = 0; c < q; ++c) check(static_cast<Code>(a), static_cast<Code>(b), static_cast<Code>(c));
    } else {
      std::uniform_int_distribution<int> d(0, q - 1);
      for (int i = 0; i < 5000; ++i) check(static_cast<Code>(d(rng)), static_cast<Code>(d(rng)), static_cast<Code>(d(rng)));
    }
    for (int a = 0; a < q; ++a) {
      const auto ca = static_cast<Code>(a);
      REQUIRE(f.add(ca, f.neg(ca)) == 0);
      REQUIRE(f.sub(ca, ca) == 0);
      if (a) REQUIRE(f.mul(ca, f.inv(ca)) == 1);
      for (int b = 0; b < q; ++b) {
        const auto cb = static_cast<Code>(b);
        // Frobenius.
        REQUIRE(f.pow(f.add(ca, cb), static_cast<std::uint64_t>(f.p())) ==
                f.add(f.pow(ca, static_cast<std::uint64_t>(f.p())), f.pow(cb, static_cast<std::uint64_t>(f.p()))));
      }
      REQUIRE(f.pow(ca, static_cast<std::uint64_t>(q)) == ca);
    }
  }
}

TEST_CASE("elements: enumeration, encoding, mixed fields") {
  for (int q : kOrders) {
    const auto f = FieldSpec::builtin(q);
    const auto elems = enumerate_elements(f);
    REQUIRE(elems.size() == static_cast<std::size_t>(q));
    CHECK(elems.front().is_zero());
    std::set<int> codes;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      codes.insert(elems[i].code());
      CHECK(f.encode(elems[i].coeffs()) == elems[i].code());
      if (i > 0) {
        // Lexicographic from the top coefficient down.
        auto prev = elems[i - 1].coeffs();
        auto cur = elems[i].coeffs();
        CHECK(std::lexicographical_compare(prev.rbegin(), prev.rend(), cur.rbegin(), cur.rend()));
      }
    }
    CHECK(codes.size() == static_cast<std::size_t>(q));
  }
  CHECK(enumerate_elements(FieldSpec::builtin(2)).back().code() == 1);

  const auto gf4 = FieldSpec::builtin(4);
  const FieldElement g(gf4, 2);
  CHECK((g * g) == FieldElement(gf4, 3));
  CHECK((g * g.inv()) == FieldElement(gf4, 1));
  CHECK((g - g).is_zero());
  CHECK((-g + g).is_zero());
  CHECK(g.pow(3) == FieldElement(gf4, 1));
  CHECK(kind_of([&] { (void)(g + FieldElement(FieldSpec::builtin(2), 1)); }) == ErrorKind::SpecMismatch);
  CHECK(kind_of([&] { FieldElement(gf4, 0).inv(); }) == ErrorKind::ZeroInverse);
  CHECK(kind_of([&] { FieldElement(gf4, 4); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("serialization") {
  for (int q : kOrders) {
    const auto f = FieldSpec::builtin(q);
    CHECK(FieldSpec::parse(f.serialize()) == f);
  }
  CHECK(FieldSpec::builtin(4).serialize() == "2 2 1 1 1");
  CHECK(kind_of([] { FieldSpec::parse("2 2 1 1 1 7"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { FieldSpec::parse("2 x"); }) == ErrorKind::ParseError);
}
