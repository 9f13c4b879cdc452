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

#include "hypermod/cyclo.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "hypermod/errors.hpp"

namespace hypermod {

namespace {

using IntPoly = std::vector<Int>;

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// exact division by a monic polynomial
IntPoly div_exact(IntPoly a, const IntPoly& b) {
  size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (size_t k = a.size(); k-- > db;) {
    Int c = a[k];
    q[k - db] = c;
    for (size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  return q;
}

IntPoly x_pow_minus_one(long k) {
  IntPoly r(static_cast<size_t>(k) + 1, 0);
  r[0] = -1;
  r.back() = 1;
  return r;
}

IntPoly compute_cyclotomic(long d) {
  IntPoly num{1}, den{1};
  for (long e = 1; e <= d; ++e) {
    if (d % e) continue;
    int mu = mobius(e);
    if (mu == 1) num = mul(num, x_pow_minus_one(d / e));
    if (mu == -1) den = mul(den, x_pow_minus_one(d / e));
  }
  return div_exact(num, den);
}

long positive_mod(long a, long d) { return mod_floor(a, d); }

}  // namespace

const std::vector<Int>& cyclotomic_poly(long d) {
  if (d < 1) throw PreconditionError("cyclotomic polynomial needs d >= 1");
  static std::mutex mu;
  static std::map<long, std::unique_ptr<IntPoly>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[d];
  if (!slot) slot = std::make_unique<IntPoly>(compute_cyclotomic(d));
  return *slot;
}

CycElt::CycElt(long d) : d_(d), c_(cyclotomic_poly(d).size() - 1, Rat(0)) {}

CycElt CycElt::reduce(long d, std::vector<Rat> c) {
  const auto& phi = cyclotomic_poly(d);
  size_t n = phi.size() - 1;
  for (size_t k = c.size(); k-- > n;) {
    if (c[k] == 0) continue;
    Rat lead = c[k];
    for (size_t i = 0; i <= n; ++i) c[k - n + i] -= lead * Rat(phi[i]);
  }
  c.resize(n, Rat(0));
  CycElt r;
  r.d_ = d;
  r.c_ = std::move(c);
  return r;
}

CycElt CycElt::from_rat(long d, const Rat& c) {
  CycElt r(d);
  r.c_[0] = c;
  return r;
}

CycElt CycElt::from_poly(long d, std::vector<Rat> c) {
  if (c.empty()) return CycElt(d);
  return reduce(d, std::move(c));
}

CycElt CycElt::zeta(long d, long k) {
  std::vector<Rat> c(static_cast<size_t>(positive_mod(k, d)) + 1, Rat(0));
  c.back() = 1;
  return reduce(d, std::move(c));
}

bool CycElt::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

namespace {
void same_field(const CycElt& a, const CycElt& b) {
  if (a.conductor() != b.conductor()) throw PreconditionError("cyclotomic elements of different conductors");
}
}  // namespace

CycElt operator+(const CycElt& a, const CycElt& b) {
  same_field(a, b);
  CycElt r = a;
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

CycElt operator-(const CycElt& a, const CycElt& b) {
  same_field(a, b);
  CycElt r = a;
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
  return r;
}

CycElt operator*(const CycElt& a, const CycElt& b) {
  same_field(a, b);
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return CycElt::reduce(a.d_, std::move(c));
}

CycElt CycElt::operator-() const {
  CycElt r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

std::string CycElt::str() const {
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += to_string(c_[i]);
      continue;
    }
    if (c_[i] != 1) out += to_string(c_[i]) + "*";
    out += "z";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

CycElt galois_action(const CycElt& x, long lam) {
  long d = x.conductor();
  if (std::gcd(lam, d) != 1) throw PreconditionError("galois action needs gcd(lambda, d) = 1");
  std::vector<Rat> c(static_cast<size_t>(d), Rat(0));
  for (size_t i = 0; i < x.coeffs().size(); ++i)
    c[static_cast<size_t>(positive_mod(static_cast<long>(i) * lam, d))] += x.coeffs()[i];
  return CycElt::from_poly(d, std::move(c));
}

bool SubgroupD::contains(long x) const {
  long r = d == 1 ? 1 : positive_mod(x, d);
  return std::binary_search(elements.begin(), elements.end(), r);
}

SubgroupD D_group(const HParams& h) {
  SubgroupD D;
  D.d = h.d();
  for (long lam : h.lambdas()) {
    std::vector<Rat> a, b;
    for (const auto& x : h.alpha()) a.push_back(x * lam);
    for (const auto& x : h.beta()) b.push_back(x * lam);
    if (same_classes_mod1(a, h.alpha()) && same_classes_mod1(b, h.beta())) D.elements.push_back(lam);
  }
  return D;
}

bool fixed_by(const CycElt& x, const SubgroupD& D) {
  return std::all_of(D.elements.begin(), D.elements.end(), [&](long lam) { return galois_action(x, lam) == x; });
}

unsigned residue_degree(const SubgroupD& D, uint64_t p) {
  if (D.d == 1) return 1;
  long pm = static_cast<long>(p % static_cast<uint64_t>(D.d));
  if (std::gcd(pm, D.d) != 1) throw PreconditionError("p divides d");
  long x = pm;
  for (unsigned e = 1;; ++e) {
    if (D.contains(x)) return e;
    x = positive_mod(x * pm, D.d);
  }
}

bool is_real(const SubgroupD& D) { return D.contains(-1); }

PowerFlag minus_power_in_D(const SubgroupD& D, uint64_t p, FlagReading reading) {
  PowerFlag out;
  out.ell = residue_degree(D, p);
  if (out.ell % 2) return out;
  out.e = out.ell / 2;
  long pe = static_cast<long>(powmod(p % static_cast<uint64_t>(D.d), out.e, static_cast<uint64_t>(D.d)));
  if (reading == FlagReading::MinusPower) out.flag = D.contains(-pe);
  else out.flag = D.d == 1 || D.contains(modinv_signed(pe, D.d));
  return out;
}

namespace {

// coefficients of prod (x - zeta^{e_i}), low degree first, leading 1 dropped
std::vector<CycElt> char_coeffs(long d, const std::vector<Rat>& gammas) {
  std::vector<CycElt> poly{CycElt::from_rat(d, 1)};
  for (const auto& g : gammas) {
    Rat e = g * d;
    CycElt root = CycElt::zeta(d, Int(e.get_num()).get_si());
    std::vector<CycElt> next(poly.size() + 1, CycElt(d));
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = next[i + 1] + poly[i];
      next[i] = next[i] - root * poly[i];
    }
    poly = std::move(next);
  }
  poly.pop_back();
  return poly;
}

CycMatrix companion(long d, const std::vector<CycElt>& c) {
  size_t n = c.size();
  CycMatrix m(n, std::vector<CycElt>(n, CycElt(d)));
  for (size_t i = 1; i < n; ++i) m[i][i - 1] = CycElt::from_rat(d, 1);
  for (size_t i = 0; i < n; ++i) m[i][n - 1] = -c[i];
  return m;
}

}  // namespace

Monodromy monodromy_matrices(const HParams& h) {
  for (const auto& a : h.alpha())
    for (const auto& b : h.beta())
      if (Rat(a - b).get_den() == 1) throw PreconditionError("alpha_i - beta_j is an integer");
  long d = h.d();
  Monodromy m;
  m.a_coeffs = char_coeffs(d, h.alpha());
  m.b_coeffs = char_coeffs(d, h.beta());
  m.A = companion(d, m.a_coeffs);
  m.B = companion(d, m.b_coeffs);
  return m;
}

}  // namespace hypermod
