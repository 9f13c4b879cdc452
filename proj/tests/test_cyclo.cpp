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

#include <numeric>
#include <random>

#include "hypermod/cyclo.hpp"
#include "hypermod/errors.hpp"

using namespace hypermod;

namespace {

Rat R(long a, long b = 1) { return make_rat(a, b); }

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

HParams random_params(std::mt19937_64& rng, unsigned max_n, long max_d) {
  std::uniform_int_distribution<unsigned> nd(1, max_n);
  std::uniform_int_distribution<long> dd(2, max_d);
  unsigned n = nd(rng);
  long d = dd(rng);
  std::uniform_int_distribution<long> num(1, d - 1);
  std::vector<Rat> a, b;
  for (unsigned i = 0; i < n; ++i) a.push_back(R(num(rng), d));
  for (unsigned j = 0; j + 1 < n; ++j) b.push_back(R(num(rng), d));
  return HParams(a, b);
}

// characteristic polynomial by Faddeev-LeVerrier, low degree first, monic
std::vector<CycElt> char_poly(const CycMatrix& A, long d) {
  size_t n = A.size();
  auto mat_mul = [&](const CycMatrix& X, const CycMatrix& Y) {
    CycMatrix Z(n, std::vector<CycElt>(n, CycElt(d)));
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j < n; ++j) Z[i][j] = Z[i][j] + X[i][k] * Y[k][j];
    return Z;
  };
  std::vector<CycElt> c(n + 1, CycElt(d));
  c[n] = CycElt::from_rat(d, 1);
  CycMatrix M(n, std::vector<CycElt>(n, CycElt(d)));
  for (size_t k = 1; k <= n; ++k) {
    CycMatrix AM = mat_mul(A, M);
    for (size_t i = 0; i < n; ++i) AM[i][i] = AM[i][i] + c[n - k + 1];
    M = AM;
    CycMatrix AMk = mat_mul(A, M);
    CycElt tr(d);
    for (size_t i = 0; i < n; ++i) tr = tr + AMk[i][i];
    c[n - k] = CycElt::from_rat(d, R(-1, static_cast<long>(k))) * tr;
  }
  return c;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == ints({-1, 1}));
  CHECK(cyclotomic_poly(2) == ints({1, 1}));
  CHECK(cyclotomic_poly(6) == ints({1, -1, 1}));
  CHECK(cyclotomic_poly(12) == ints({1, 0, -1, 0, 1}));
  for (long d = 1; d <= 60; ++d) {
    std::vector<Int> prod{1};
    for (long e = 1; e <= d; ++e)
      if (d % e == 0) prod = poly_mul(prod, cyclotomic_poly(e));
    std::vector<Int> want(static_cast<size_t>(d) + 1, 0);
    want[0] = -1;
    want.back() = 1;
    CHECK(prod == want);
  }
  // Phi_105 has a coefficient -2
  const auto& p105 = cyclotomic_poly(105);
  CHECK(std::count(p105.begin(), p105.end(), Int(-2)) >= 1);
}

TEST_CASE("cyclotomic arithmetic") {
  for (long d : {1, 2, 5, 8, 12, 15, 24}) {
    CycElt z = CycElt::zeta(d, 1), acc = CycElt::from_rat(d, 1), sum(d);
    for (long k = 0; k < d; ++k) {
      CHECK(acc == CycElt::zeta(d, k));
      sum = sum + acc;
      acc = acc * z;
    }
    CHECK(acc == CycElt::from_rat(d, 1));
    if (d > 1) CHECK(sum.is_zero());
  }
  CHECK(CycElt::zeta(4, 1) * CycElt::zeta(4, 1) == CycElt::from_rat(4, -1));
  CHECK_THROWS_AS(CycElt::zeta(4, 1) + CycElt::zeta(8, 1), PreconditionError);
}

TEST_CASE("galois action") {
  std::mt19937_64 rng(5);
  for (long d : {5, 8, 12, 21}) {
    auto units = units_mod(d);
    for (int t = 0; t < 10; ++t) {
      std::vector<Rat> c(static_cast<size_t>(d));
      for (auto& x : c) x = R(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
      CycElt x = CycElt::from_poly(d, c), y = CycElt::zeta(d, static_cast<long>(rng() % 10)) + CycElt::from_rat(d, 2);
      long a = units[rng() % units.size()], b = units[rng() % units.size()];
      CHECK(galois_action(galois_action(x, a), b) == galois_action(x, mod_floor(a * b, d)));
      CHECK(galois_action(x * y, a) == galois_action(x, a) * galois_action(y, a));
      CHECK(galois_action(x, 1) == x);
    }
    CycElt real = CycElt::zeta(d, 1) + CycElt::zeta(d, -1);
    CHECK(galois_action(real, -1) == real);
    CHECK(galois_action(CycElt::zeta(d, 1), -1) != CycElt::zeta(d, 1));
  }
  CHECK_THROWS_AS(galois_action(CycElt::zeta(8, 1), 2), PreconditionError);
}

TEST_CASE("symmetry group") {
  auto D = D_group(HParams({R(1, 8), R(3, 8)}, {R(1)}));
  CHECK(D.elements == std::vector<long>{1, 3});
  CHECK(D_group(HParams({R(1, 7), R(3, 7)}, {R(1)})).elements == std::vector<long>{1});
  auto D14 = D_group(HParams({R(1, 7), R(6, 7)}, {R(1, 2)}));
  CHECK(D14.d == 14);
  CHECK(D14.elements == std::vector<long>{1, 13});
  CHECK(residue_degree(D14, 13) == 1);
  CHECK(residue_degree(D, 7) == 2);
  CHECK(is_real(D_group(HParams({R(1, 3), R(2, 3)}, {R(1)}))));
  CHECK_FALSE(is_real(D));

  std::mt19937_64 rng(7);
  int checked = 0;
  while (checked < 100) {
    HParams h = random_params(rng, 3, 15);
    auto G = D_group(h);
    CHECK(G.contains(1));
    for (long a : G.elements)
      for (long b : G.elements) CHECK(G.contains(a * b));
    if (h.n() == 2) CHECK(G.elements.size() <= 2);
    for (uint64_t p : primes_in(17, 120)) {
      if (h.d() % static_cast<long>(p) == 0) continue;
      unsigned e = residue_degree(G, p);
      CHECK(e == ell_p_params(h.alpha(), h.beta(), p));
      if (h.d() > 1) CHECK(mult_order(static_cast<long>(p % static_cast<uint64_t>(h.d())), h.d()) % e == 0);
      ++checked;
      break;
    }
  }
  // full group gives degree 1
  SubgroupD full{9, units_mod(9)};
  for (uint64_t p : primes_in(11, 60)) CHECK(residue_degree(full, p) == 1);
}

TEST_CASE("power flag") {
  auto D = D_group(HParams({R(1, 8), R(3, 8)}, {R(1)}));
  for (uint64_t p : primes_in(11, 200)) {
    auto f = minus_power_in_D(D, p);
    auto g = minus_power_in_D(D, p, FlagReading::InversePower);
    switch (p % 8) {
      case 1:
      case 3:
        CHECK(f.ell == 1);
        CHECK_FALSE(f.flag);
        CHECK_FALSE(g.flag);
        break;
      case 5:
        // -5 = 3 mod 8 lies in D, 5^{-1} = 5 does not
        CHECK(f.ell == 2);
        CHECK(f.flag);
        CHECK_FALSE(g.flag);
        break;
      case 7:
        CHECK(f.ell == 2);
        CHECK(f.e == 1);
        CHECK(f.flag);
        CHECK_FALSE(g.flag);
        break;
    }
  }
  auto D7 = D_group(HParams({R(1, 7), R(3, 7)}, {R(1)}));
  for (uint64_t p : primes_in(11, 200)) {
    auto f = minus_power_in_D(D7, p);
    if (f.ell % 2) CHECK_FALSE(f.flag);
    // D = {1}: flag iff p^{ell/2} = -1 mod 7
    bool want = f.ell % 2 == 0 && powmod(p % 7, f.e, 7) == 6;
    CHECK(f.flag == want);
  }
}

TEST_CASE("zeta_m lies in the fixed field") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    long d = static_cast<long>(rng() % 20) + 2;
    long a1 = static_cast<long>(rng() % static_cast<unsigned long>(d - 1)) + 1;
    long a2 = static_cast<long>(rng() % static_cast<unsigned long>(d - 1)) + 1;
    HParams h({R(a1, d), R(a2, d)}, {R(1)});
    long dd = h.d();
    Rat s = R(a1, d) + R(a2, d);
    long m = Int(s.get_den()).get_si();
    CHECK(fixed_by(CycElt::zeta(dd, dd / m), D_group(h)));
  }
}

TEST_CASE("monodromy matrices") {
  auto m = monodromy_matrices(HParams({R(1, 2), R(1, 2)}, {R(1)}));
  CHECK(m.a_coeffs[0] == CycElt::from_rat(2, 1));
  CHECK(m.a_coeffs[1] == CycElt::from_rat(2, 2));
  CHECK(m.b_coeffs[0] == CycElt::from_rat(2, 1));
  CHECK(m.b_coeffs[1] == CycElt::from_rat(2, -2));
  CHECK_THROWS_AS(monodromy_matrices(HParams({R(1, 2), R(3, 2)}, {R(1, 2)})), PreconditionError);

  std::mt19937_64 rng(13);
  for (int t = 0; t < 25; ++t) {
    HParams h = random_params(rng, 3, 12);
    Monodromy mm;
    try {
      mm = monodromy_matrices(h);
    } catch (const PreconditionError&) {
      continue;
    }
    long d = h.d();
    auto D = D_group(h);
    // det(xI - A) = prod (x - zeta^{d alpha_i})
    std::vector<CycElt> want{CycElt::from_rat(d, 1)};
    for (const auto& a : h.alpha()) {
      CycElt root = CycElt::zeta(d, Int(Rat(a * d).get_num()).get_si());
      std::vector<CycElt> next(want.size() + 1, CycElt(d));
      for (size_t i = 0; i < want.size(); ++i) {
        next[i + 1] = next[i + 1] + want[i];
        next[i] = next[i] - root * want[i];
      }
      want = next;
    }
    CHECK(char_poly(mm.A, d) == want);
    for (const auto& row : mm.A)
      for (const auto& x : row) CHECK(fixed_by(x, D));
    for (const auto& row : mm.B)
      for (const auto& x : row) CHECK(fixed_by(x, D));
    const CycElt& a0 = mm.a_coeffs[0];
    CHECK(a0 * galois_action(a0, -1) == CycElt::from_rat(d, 1));
  }
}
