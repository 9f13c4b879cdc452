/*
   Copyright 2026 The hypermod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "hypermod/ffpoly.hpp"

using namespace hypermod;

namespace {

FpPoly P(uint64_t p, std::vector<uint64_t> c) { return FpPoly(PrimeField(p), std::move(c)); }

FpPoly random_poly(const PrimeField& f, size_t deg, std::mt19937_64& rng, bool monic = false) {
  std::vector<uint64_t> c(deg + 1);
  for (auto& x : c) x = f.random(rng);
  if (monic) c[deg] = 1;
  if (c[deg] == 0) c[deg] = 1;
  return FpPoly(f, c);
}

bool has_root(const FpPoly& a) {
  for (uint64_t x = 0; x < a.field().p(); ++x)
    if (a.eval(x) == 0) return true;
  return false;
}

// Brute force: is a = b^4 for some b over F_5? (leading coefficient of b^4 is 1)
bool is_fourth_power_f5(const FpPoly& a) {
  if (a.deg() % 4 != 0) return false;
  if (a.lead() != 1) return false;
  size_t db = static_cast<size_t>(a.deg() / 4);
  std::vector<uint64_t> c(db + 1, 0);
  c[db] = 1;
  PrimeField f(5);
  for (;;) {
    FpPoly b(f, c);
    if (pow(b, 4) == a) return true;
    size_t k = 0;
    while (k < db) {
      if (++c[k] < 5) break;
      c[k] = 0;
      ++k;
    }
    if (k == db) return false;
  }
}

}  // namespace

TEST_CASE("basic arithmetic") {
  PrimeField f5(5);
  auto g = gcd(P(5, {4, 0, 1}), P(5, {4, 1}));
  CHECK(g == P(5, {4, 1}));

  for (uint64_t p : {3, 5, 7, 13}) {
    PrimeField f(p);
    FpPoly x1 = P(p, {1, 1});
    CHECK(pow(x1, p) == P(p, {1}) + FpPoly::monomial(f, 1, p));
  }

  std::mt19937_64 rng(11);
  PrimeField f(97);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_poly(f, rng() % 30, rng);
    auto b = random_poly(f, rng() % 12, rng);
    auto [q, r] = divrem(a, b);
    CHECK(q * b + r == a);
    CHECK(r.deg() < b.deg());
  }
  CHECK_THROWS_AS(divrem(P(5, {1, 1}), FpPoly(f5)), PreconditionError);

  auto e = ext_gcd(P(7, {1, 2, 1}), P(7, {1, 0, 1, 3}));
  CHECK(e.s * P(7, {1, 2, 1}) + e.t * P(7, {1, 0, 1, 3}) == e.g);
}

TEST_CASE("series inverse") {
  std::mt19937_64 rng(3);
  PrimeField f(101);
  for (int i = 0; i < 20; ++i) {
    auto a = random_poly(f, 10, rng);
    a.set(0, 1 + rng() % 100);
    auto g = inv_series(a, 50);
    CHECK(mul_trunc(a, g, 50) == P(101, {1}));
  }
}

TEST_CASE("factor examples") {
  auto f5 = factor(P(5, {1, 0, 1}));
  REQUIRE(f5.factors.size() == 2);
  CHECK(f5.factors[0].first == P(5, {2, 1}));
  CHECK(f5.factors[1].first == P(5, {3, 1}));
  auto f7 = factor(P(7, {1, 0, 1}));
  REQUIRE(f7.factors.size() == 1);
  CHECK(f7.factors[0].first == P(7, {1, 0, 1}));
  CHECK(is_irreducible(P(7, {1, 0, 1})));
  CHECK_FALSE(is_irreducible(P(5, {1, 0, 1})));

  // char 2: x^4 + x = x (x+1) (x^2+x+1)
  auto f2 = factor(P(2, {0, 1, 0, 0, 1}));
  REQUIRE(f2.factors.size() == 3);
  CHECK(f2.factors[2].first == P(2, {1, 1, 1}));

  // inseparable input: (x^7 - 1)^3 over F_7 is (x-1)^21
  auto f21 = factor(pow(P(7, {6, 0, 0, 0, 0, 0, 0, 1}), 3));
  REQUIRE(f21.factors.size() == 1);
  CHECK(f21.factors[0].second == 21);
}

TEST_CASE("factor round trip") {
  std::mt19937_64 rng(5);
  for (uint64_t p : {2, 3, 5, 11, 31, 97}) {
    PrimeField f(p);
    for (int trial = 0; trial < 15; ++trial) {
      // product of random irreducibles of degree <= 3, certified by root checks
      std::map<std::vector<uint64_t>, unsigned long> want;
      FpPoly prod = FpPoly::constant(f, 1 + rng() % (p - 1 == 0 ? 1 : p - 1));
      if (p == 2) prod = FpPoly::constant(f, 1);
      long total = 0;
      while (total < 40) {
        size_t dg = 1 + rng() % 3;
        auto g = random_poly(f, dg, rng, true);
        if (dg > 1 && has_root(g)) continue;
        unsigned long e = 1 + rng() % 3;
        total += static_cast<long>(dg * e);
        want[g.coeffs()] += e;
        prod *= pow(g, e);
      }
      auto fz = factor(prod, 1234);
      CHECK(expand(fz, f) == prod);
      std::map<std::vector<uint64_t>, unsigned long> got;
      for (auto& [g, e] : fz.factors) {
        if (g.deg() <= 3) CHECK((g.deg() == 1 || !has_root(g)));
        got[g.coeffs()] += e;
      }
      CHECK(got == want);
    }
  }
  // larger degrees: reconstruction and irreducibility of each factor
  PrimeField f(89);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_poly(f, 64, rng);
    auto fz = factor(a, 99);
    CHECK(expand(fz, f) == a);
    for (auto& [g, e] : fz.factors) CHECK(is_irreducible(g));
  }
}

TEST_CASE("extension fields") {
  auto f49 = ExtField::make(7, 2);
  CHECK(f49.modulus() == std::vector<uint64_t>{1, 0, 1});
  CHECK(f49.size() == 49);
  auto y = f49.gen();
  // Frobenius has order exactly l on the generator
  auto fy = f49.frobenius(y);
  CHECK_FALSE(f49.eq(fy, y));
  CHECK(f49.eq(f49.frobenius(fy), y));
  CHECK(f49.eq(f49.mul(y, f49.inv(y)), f49.one()));
  CHECK(f49.eq(f49.pth_root(f49.frobenius(f49.add(y, f49.one()))), f49.add(y, f49.one())));

  // x^2 + 1 splits over F_49
  FqPoly a(f49, {f49.one(), f49.zero(), f49.one()});
  auto fz = factor(a);
  CHECK(fz.factors.size() == 2);
  CHECK(expand(fz, f49) == a);

  auto f8 = ExtField::make(2, 3);
  CHECK(f8.modulus() == std::vector<uint64_t>{1, 1, 0, 1});
  auto g = f8.gen();
  CHECK(f8.eq(f8.pow(g, Int(7)), f8.one()));
  // x^8 - x splits completely over F_8
  std::vector<ExtField::Elem> c(9, f8.zero());
  c[8] = f8.one();
  c[1] = f8.one();
  auto fz8 = factor(FqPoly(f8, c));
  CHECK(fz8.factors.size() == 8);
  for (auto& [h, e] : fz8.factors) CHECK(h.deg() == 1);

  auto f81 = ExtField::make(3, 4);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    auto u = f81.random(rng);
    if (f81.is_zero(u)) continue;
    auto v = u;
    for (int k = 0; k < 4; ++k) v = f81.frobenius(v);
    CHECK(f81.eq(u, v));
  }
}

TEST_CASE("perfect power data") {
  PrimeField f5(5);
  auto a = pow(P(5, {4, 1}), 6);
  auto pd = perfect_power_data(a);
  CHECK(pd.g_e == 6);
  CHECK(pd.d_c == 4);
  CHECK(pd.max_exponent == 6);

  auto b = P(5, {0, 0, 2});
  auto pb = perfect_power_data(b);
  CHECK(pb.g_e == 2);
  CHECK(pb.ord_c == 4);
  CHECK(pb.d_c == 1);
  CHECK(pb.max_exponent == 1);

  CHECK(perfect_power_data(P(5, {0, 1})).g_e == 1);
  CHECK(perfect_power_data(P(5, {3})).infinite);

  // reported maximal exponent admits an explicit root
  std::mt19937_64 rng(23);
  PrimeField f(13);
  for (int trial = 0; trial < 30; ++trial) {
    auto base = random_poly(f, 1 + rng() % 4, rng, true);
    unsigned long r = 1 + rng() % 6;
    uint64_t c = 1 + rng() % 12;
    auto A = pow(base, r).scale(c);
    auto d = perfect_power_data(A);
    unsigned long rr = d.max_exponent.get_ui();
    // root: prod g^{e/rr} times an rr-th root of c
    FpPoly B = FpPoly::constant(f, 1);
    for (auto& [g, e] : factor(A).factors) {
      REQUIRE(e % rr == 0);
      B *= pow(g, e / rr);
    }
    bool found = false;
    for (uint64_t b0 = 1; b0 < 13 && !found; ++b0) {
      if (pow(B.scale(b0), rr) == A) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("kummer order") {
  PrimeField f5(5);
  Int q = 5;
  // squarefree with monic lead -> q-1
  CHECK(kummer_order(P(5, {1, 1, 0, 1}), q) == 4);
  // B^{(q-1)/2}, B squarefree, lead square
  CHECK(kummer_order(pow(P(5, {1, 0, 1}), 2), q) == 2);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    auto A = random_poly(f5, 1 + rng() % 4, rng);
    A = A.scale(1 + rng() % 4);
    Int k = kummer_order(A, q);
    // oracle: smallest r with A^r a 4th power, by brute force over B
    unsigned long want = 0;
    for (unsigned long r : {1UL, 2UL, 4UL}) {
      if (is_fourth_power_f5(pow(A, r))) {
        want = r;
        break;
      }
    }
    CHECK(k == Int(want));
    // class invariance under multiplication by (q-1)-th powers
    auto C = random_poly(f5, 1 + rng() % 3, rng);
    CHECK(kummer_order(A * pow(C, 4), q) == k);
  }

  // over F_25: ord(2) = 4 forces 4 | r, the multiplicity 12 forces 2 | r
  CHECK(kummer_order(P(5, {0, 2}), Int(25)) == 24);
  CHECK(kummer_order(pow(P(5, {1, 1}), 12).scale(2), Int(25)) == 4);
}

TEST_CASE("rational function linear algebra") {
  PrimeField f(7);
  using RF = RatFunc<PrimeField>;
  auto X = FpPoly::x(f);
  auto one = FpPoly::constant(f, 1);
  MatRF<PrimeField> id{{RF(one), RF(f)}, {RF(f), RF(one)}};
  CHECK(rank_rf(id) == 2);
  MatRF<PrimeField> m{{RF(X), RF(X * X)}, {RF(one), RF(X)}};
  CHECK(rank_rf(m) == 1);
  auto ns = nullspace_rf(m, f);
  REQUIRE(ns.size() == 1);

  std::mt19937_64 rng(41);
  PrimeField g(11);
  for (int trial = 0; trial < 200; ++trial) {
    size_t n = 2 + rng() % 3;
    MatRF<PrimeField> a(n, std::vector<RF>(n, RF(g)));
    for (size_t i = 0; i + 1 < n; ++i)
      for (size_t j = 0; j < n; ++j)
        a[i][j] = RF(random_poly(g, rng() % 3, rng), random_poly(g, rng() % 2, rng, true));
    // last row: combination of the others
    for (size_t i = 0; i + 1 < n; ++i) {
      RF c(random_poly(g, rng() % 2, rng));
      for (size_t j = 0; j < n; ++j) a[n - 1][j] = a[n - 1][j] + c * a[i][j];
    }
    auto r = rank_rf(a);
    CHECK(r < n);
    auto basis = nullspace_rf(a, g);
    CHECK(basis.size() == n - r);
    for (const auto& v : basis) {
      for (size_t i = 0; i < n; ++i) {
        RF s(g);
        for (size_t j = 0; j < n; ++j) s = s + a[i][j] * v[j];
        CHECK(s.is_zero());
      }
    }
  }
}

TEST_CASE("dense matrices") {
  PrimeField f(5);
  FpMatrix m(f, 3, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  m.at(2, 2) = 3;
  CHECK(m.rank() == 2);
  auto ns = m.nullspace();
  REQUIRE(ns.size() == 1);
  CHECK(f.add(ns[0][0], f.mul(2, ns[0][1])) == 0);
}

TEST_CASE("series square root") {
  PrimeField f(101);
  CHECK(series_sqrt(P(101, {1}), 5) == P(101, {1}));
  CHECK(series_sqrt(P(101, {1, 2, 1}), 5) == P(101, {1, 1}));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10; ++i) {
    auto a = random_poly(f, 40, rng);
    a.set(0, 1);
    auto g = series_sqrt(a, 64);
    CHECK(mul_trunc(g, g, 64) == a.truncate(64));
  }
  CHECK_THROWS_AS(series_sqrt(P(101, {2}), 4), PreconditionError);
}
