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

// Dense univariate polynomials over F_p and F_{p^l}, factorization,
// perfect-power data, Kummer orders and linear algebra over F_q(x).

#ifndef HYPERMOD_FFPOLY_HPP
#define HYPERMOD_FFPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hypermod/arith_core.hpp"
#include "hypermod/errors.hpp"

namespace hypermod {

inline constexpr uint64_t kDefaultSeed = 0x6879706572ULL;

// ---- fields ---------------------------------------------------------------

class PrimeField {
 public:
  using Elem = uint64_t;

  PrimeField() = default;
  explicit PrimeField(uint64_t p);

  uint64_t p() const { return p_; }
  uint64_t characteristic() const { return p_; }
  unsigned degree() const { return 1; }
  Int size() const { return Int(static_cast<unsigned long>(p_)); }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long v) const { return static_cast<Elem>(mod_floor(v % static_cast<long>(p_), static_cast<long>(p_))); }
  Elem from_int(const Int& v) const;
  Elem from_rat(const Rat& v) const;  // throws if p divides the denominator

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }  // p < 2^31
  Elem inv(Elem a) const;
  Elem pow(Elem a, const Int& e) const;
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  bool less(Elem a, Elem b) const { return a < b; }
  Elem pth_root(Elem a) const { return a; }
  template <class Rng>
  Elem random(Rng& rng) const {
    return static_cast<Elem>(rng() % p_);
  }
  std::string str(Elem a) const { return std::to_string(a); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  uint64_t p_ = 2;
};

// F_{p^l} = F_p[y]/(m(y)). Elements are coefficient vectors of length l.
class ExtField {
 public:
  using Elem = std::vector<uint64_t>;

  ExtField() = default;
  // Smallest monic irreducible of degree ell, coefficients compared as the
  // sequence (c_{l-1}, ..., c_0).
  static ExtField make(uint64_t p, unsigned ell);
  ExtField(uint64_t p, std::vector<uint64_t> modulus);  // monic, low degree first

  uint64_t p() const { return data_->base.p(); }
  uint64_t characteristic() const { return p(); }
  unsigned degree() const { return data_->ell; }
  const Int& size() const { return data_->q; }
  const std::vector<uint64_t>& modulus() const { return data_->modulus; }
  const PrimeField& base() const { return data_->base; }

  Elem zero() const { return Elem(degree(), 0); }
  Elem one() const;
  Elem gen() const;  // class of y
  Elem from_int(long v) const;
  Elem from_int(const Int& v) const;
  Elem embed(uint64_t c) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, const Int& e) const;
  bool is_zero(const Elem& a) const;
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool less(const Elem& a, const Elem& b) const;
  Elem frobenius(const Elem& a) const { return pow(a, Int(static_cast<unsigned long>(p()))); }
  Elem pth_root(const Elem& a) const;
  template <class Rng>
  Elem random(Rng& rng) const {
    Elem e(degree());
    for (auto& c : e) c = rng() % p();
    return e;
  }
  std::string str(const Elem& a) const;

  bool operator==(const ExtField& o) const {
    return data_ == o.data_ || (p() == o.p() && modulus() == o.modulus());
  }

 private:
  struct Data {
    PrimeField base;
    unsigned ell = 1;
    std::vector<uint64_t> modulus;
    Int q;
  };
  std::shared_ptr<const Data> data_;
};

// ---- polynomials ------------------------------------------------------------

template <class F>
class Poly {
 public:
  using Elem = typename F::Elem;

  Poly() = default;
  explicit Poly(F f) : f_(std::move(f)) {}
  Poly(F f, std::vector<Elem> c) : f_(std::move(f)), c_(std::move(c)) { normalize(); }

  static Poly constant(const F& f, const Elem& a) { return Poly(f, {a}); }
  static Poly monomial(const F& f, const Elem& a, size_t k) {
    std::vector<Elem> c(k + 1, f.zero());
    c[k] = a;
    return Poly(f, std::move(c));
  }
  static Poly x(const F& f) { return monomial(f, f.one(), 1); }

  const F& field() const { return f_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  long deg() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && f_.eq(c_[0], f_.one()); }
  size_t size() const { return c_.size(); }
  Elem coeff(size_t k) const { return k < c_.size() ? c_[k] : f_.zero(); }
  Elem lead() const { return c_.empty() ? f_.zero() : c_.back(); }
  void set(size_t k, const Elem& a) {
    if (k >= c_.size()) {
      if (f_.is_zero(a)) return;
      c_.resize(k + 1, f_.zero());
    }
    c_[k] = a;
    normalize();
  }

  // lowest index with a nonzero coefficient; 0 for the zero polynomial
  size_t valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (!f_.is_zero(c_[i])) return i;
    return 0;
  }

  Poly operator-() const {
    Poly r(f_);
    r.c_.reserve(c_.size());
    for (const auto& a : c_) r.c_.push_back(f_.neg(a));
    return r;
  }
  Poly& operator+=(const Poly& b) {
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), f_.zero());
    for (size_t i = 0; i < b.c_.size(); ++i) c_[i] = f_.add(c_[i], b.c_[i]);
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& b) {
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), f_.zero());
    for (size_t i = 0; i < b.c_.size(); ++i) c_[i] = f_.sub(c_[i], b.c_[i]);
    normalize();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) { return mul_trunc(a, b, static_cast<size_t>(-1)); }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly scale(const Elem& a) const {
    Poly r(f_);
    if (f_.is_zero(a)) return r;
    r.c_.reserve(c_.size());
    for (const auto& x : c_) r.c_.push_back(f_.mul(x, a));
    r.normalize();
    return r;
  }
  Poly shift(size_t k) const {  // times x^k
    if (is_zero()) return *this;
    Poly r(f_);
    r.c_.assign(k, f_.zero());
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }
  Poly truncate(size_t n) const {  // mod x^n
    if (c_.size() <= n) return *this;
    return Poly(f_, std::vector<Elem>(c_.begin(), c_.begin() + static_cast<long>(n)));
  }
  // c(x) -> c(x^k), truncated mod x^limit when limit > 0
  Poly expand(size_t k, size_t limit = 0) const {
    Poly r(f_);
    if (is_zero()) return r;
    size_t top = (c_.size() - 1) * k + 1;
    if (limit && top > limit) top = limit;
    r.c_.assign(top, f_.zero());
    for (size_t i = 0; i < c_.size() && i * k < top; ++i) r.c_[i * k] = c_[i];
    r.normalize();
    return r;
  }
  Poly derivative() const {
    Poly r(f_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = f_.mul(c_[i], f_.from_int(static_cast<long>(i % f_.characteristic())));
    r.normalize();
    return r;
  }
  Poly monic() const {
    if (is_zero()) return *this;
    return scale(f_.inv(lead()));
  }
  Elem eval(const Elem& x) const {
    Elem acc = f_.zero();
    for (size_t i = c_.size(); i-- > 0;) acc = f_.add(f_.mul(acc, x), c_[i]);
    return acc;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!a.f_.eq(a.c_[i], b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  // degree, then coefficients from the top
  friend bool poly_less(const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (size_t i = a.c_.size(); i-- > 0;) {
      if (!a.f_.eq(a.c_[i], b.c_[i])) return a.f_.less(a.c_[i], b.c_[i]);
    }
    return false;
  }

  // "x^2 + 4*x + 1" style, highest degree first
  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
      if (f_.is_zero(c_[i])) continue;
      if (!out.empty()) out += " + ";
      std::string cs = f_.str(c_[i]);
      bool unit = f_.eq(c_[i], f_.one());
      if (i == 0) {
        out += cs;
      } else {
        if (!unit) out += (cs.find('+') != std::string::npos ? "(" + cs + ")" : cs) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

  // product mod x^n
  friend Poly mul_trunc(const Poly& a, const Poly& b, size_t n) {
    Poly r(a.f_);
    if (a.is_zero() || b.is_zero() || n == 0) return r;
    size_t len = std::min(a.c_.size() + b.c_.size() - 1, n);
    const F& f = a.f_;
    if constexpr (std::is_same_v<F, PrimeField>) {
      const uint64_t p = f.p();
      r.c_.assign(len, 0);
      // products are < 2^62; flush the accumulator before it can overflow
      for (size_t k = 0; k < len; ++k) {
        size_t lo = k >= b.c_.size() ? k - b.c_.size() + 1 : 0;
        size_t hi = std::min(k, a.c_.size() - 1);
        unsigned __int128 acc = 0;
        for (size_t i = lo; i <= hi; ++i) acc += static_cast<unsigned __int128>(a.c_[i] * b.c_[k - i]);
        r.c_[k] = static_cast<uint64_t>(acc % p);
      }
    } else {
      r.c_.assign(len, f.zero());
      for (size_t i = 0; i < a.c_.size() && i < len; ++i) {
        if (f.is_zero(a.c_[i])) continue;
        for (size_t j = 0; j < b.c_.size() && i + j < len; ++j) r.c_[i + j] = f.add(r.c_[i + j], f.mul(a.c_[i], b.c_[j]));
      }
    }
    r.normalize();
    return r;
  }

 private:
  void normalize() {
    while (!c_.empty() && f_.is_zero(c_.back())) c_.pop_back();
  }

  F f_;
  std::vector<Elem> c_;
};

using FpPoly = Poly<PrimeField>;
using FqPoly = Poly<ExtField>;

template <class F>
std::pair<Poly<F>, Poly<F>> divrem(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  const F& f = a.field();
  if (a.deg() < b.deg()) return {Poly<F>(f), a};
  std::vector<typename F::Elem> r = a.coeffs();
  std::vector<typename F::Elem> q(static_cast<size_t>(a.deg() - b.deg() + 1), f.zero());
  auto li = f.inv(b.lead());
  const auto& bc = b.coeffs();
  size_t db = static_cast<size_t>(b.deg());
  for (size_t k = r.size(); k-- > db;) {
    if (f.is_zero(r[k])) continue;
    auto c = f.mul(r[k], li);
    q[k - db] = c;
    for (size_t i = 0; i <= db; ++i) r[k - db + i] = f.sub(r[k - db + i], f.mul(c, bc[i]));
  }
  r.resize(db);
  return {Poly<F>(f, std::move(q)), Poly<F>(f, std::move(r))};
}

template <class F>
Poly<F> operator/(const Poly<F>& a, const Poly<F>& b) {
  return divrem(a, b).first;
}
template <class F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
  return divrem(a, b).second;
}

// monic gcd (zero if both are zero)
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// g = s*a + t*b, g monic
template <class F>
struct ExtGcd {
  Poly<F> g, s, t;
};
template <class F>
ExtGcd<F> ext_gcd(const Poly<F>& a, const Poly<F>& b) {
  const F& f = a.field();
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(f, f.one()), s1(f);
  Poly<F> t0(f), t1 = Poly<F>::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<F> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  auto li = f.inv(r0.lead());
  return {r0.scale(li), s0.scale(li), t0.scale(li)};
}

template <class F>
Poly<F> pow(const Poly<F>& a, unsigned long e) {
  Poly<F> r = Poly<F>::constant(a.field(), a.field().one());
  Poly<F> b = a;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

template <class F>
Poly<F> pow_mod(const Poly<F>& a, const Int& e, const Poly<F>& m) {
  Poly<F> r = Poly<F>::constant(a.field(), a.field().one()) % m;
  if (e == 0) return r;
  Poly<F> b = a % m;
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = (r * r) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % m;
  }
  return r;
}

// power series inverse mod x^n; a(0) must be nonzero
template <class F>
Poly<F> inv_series(const Poly<F>& a, size_t n) {
  const F& f = a.field();
  if (f.is_zero(a.coeff(0))) throw PreconditionError("series inverse needs a unit constant term");
  Poly<F> g = Poly<F>::constant(f, f.inv(a.coeff(0)));
  size_t prec = 1;
  while (prec < n) {
    prec = std::min(2 * prec, n);
    // g <- g*(2 - a*g)
    Poly<F> e = mul_trunc(a.truncate(prec), g, prec);
    Poly<F> two = Poly<F>::constant(f, f.from_int(2));
    g = mul_trunc(g, two - e, prec);
  }
  return g.truncate(n);
}

// ---- factorization ------------------------------------------------------------

template <class F>
struct Factorization {
  typename F::Elem lead;
  std::vector<std::pair<Poly<F>, unsigned long>> factors;  // monic irreducible, multiplicity
};

// Monic squarefree parts with multiplicities, f = lc * prod g_i^{e_i}.
template <class F>
std::vector<std::pair<Poly<F>, unsigned long>> squarefree_decomposition(const Poly<F>& f0) {
  if (f0.is_zero()) throw PreconditionError("squarefree decomposition of zero");
  const F& f = f0.field();
  std::vector<std::pair<Poly<F>, unsigned long>> out;
  Poly<F> a = f0.monic();
  if (a.deg() <= 0) return out;
  Poly<F> c = gcd(a, a.derivative());
  Poly<F> w = a / c;
  unsigned long i = 1;
  while (w.deg() > 0) {
    Poly<F> y = gcd(w, c);
    Poly<F> fac = w / y;
    if (fac.deg() > 0) out.emplace_back(fac, i);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.deg() > 0) {
    // c is a p-th power
    uint64_t p = f.characteristic();
    std::vector<typename F::Elem> rc;
    for (size_t k = 0; k < c.size(); k += p) rc.push_back(f.pth_root(c.coeff(k)));
    auto sub = squarefree_decomposition(Poly<F>(f, std::move(rc)));
    for (auto& [g, e] : sub) out.emplace_back(g, e * p);
  }
  std::sort(out.begin(), out.end(), [](const auto& u, const auto& v) { return u.second < v.second; });
  return out;
}

// Input monic squarefree; returns (product of all irreducible factors of
// degree k, k).
template <class F>
std::vector<std::pair<Poly<F>, unsigned>> distinct_degree(const Poly<F>& a) {
  const F& f = a.field();
  std::vector<std::pair<Poly<F>, unsigned>> out;
  Poly<F> rest = a;
  Poly<F> xx = Poly<F>::x(f);
  Poly<F> h = xx;
  const Int q = f.size();
  for (unsigned k = 1; 2 * static_cast<long>(k) <= rest.deg(); ++k) {
    h = pow_mod(h, q, rest);
    Poly<F> g = gcd(rest, h - xx);
    if (g.deg() > 0) {
      out.emplace_back(g, k);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.deg() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.deg()));
  return out;
}

// Splits a monic squarefree product of irreducibles of degree k.
template <class F, class Rng>
void equal_degree(const Poly<F>& a, unsigned k, Rng& rng, std::vector<Poly<F>>& out) {
  if (a.deg() <= static_cast<long>(k)) {
    out.push_back(a);
    return;
  }
  const F& f = a.field();
  const Int q = f.size();
  Int qk = ipow(q, k);
  const bool odd = f.characteristic() != 2;
  for (;;) {
    std::vector<typename F::Elem> rc(static_cast<size_t>(a.deg()));
    for (auto& c : rc) c = f.random(rng);
    Poly<F> r(f, std::move(rc));
    if (r.deg() <= 0) continue;
    Poly<F> g;
    if (odd) {
      Int e = (qk - 1) / 2;
      g = pow_mod(r, e, a) - Poly<F>::constant(f, f.one());
    } else {
      // trace from F_{2^{km}} down to F_2
      unsigned long bits = k * static_cast<unsigned long>(f.degree());
      Poly<F> t = r % a, acc = r % a;
      for (unsigned long i = 1; i < bits; ++i) {
        t = (t * t) % a;
        acc += t;
      }
      g = acc;
    }
    Poly<F> d = gcd(a, g);
    if (d.deg() > 0 && d.deg() < a.deg()) {
      equal_degree(d, k, rng, out);
      equal_degree(a / d, k, rng, out);
      return;
    }
  }
}

template <class F>
Factorization<F> factor(const Poly<F>& a, uint64_t seed = kDefaultSeed) {
  if (a.is_zero()) throw PreconditionError("factor of zero polynomial");
  Factorization<F> out;
  out.lead = a.lead();
  std::mt19937_64 rng(seed);
  for (auto& [sq, e] : squarefree_decomposition(a)) {
    for (auto& [g, k] : distinct_degree(sq)) {
      std::vector<Poly<F>> parts;
      equal_degree(g, k, rng, parts);
      for (auto& part : parts) out.factors.emplace_back(part, e);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& u, const auto& v) {
    if (poly_less(u.first, v.first)) return true;
    if (poly_less(v.first, u.first)) return false;
    return u.second < v.second;
  });
  return out;
}

template <class F>
Poly<F> expand(const Factorization<F>& fz, const F& f) {
  Poly<F> r = Poly<F>::constant(f, fz.lead);
  for (const auto& [g, e] : fz.factors) r *= pow(g, e);
  return r;
}

template <class F>
bool is_irreducible(const Poly<F>& a) {
  if (a.deg() <= 0) return false;
  Poly<F> m = a.monic();
  auto sq = squarefree_decomposition(m);
  if (sq.size() != 1 || sq[0].second != 1) return false;
  auto dd = distinct_degree(m);
  return dd.size() == 1 && static_cast<long>(dd[0].second) == m.deg();
}

// ---- perfect powers and Kummer orders -------------------------------------------

// Multiplicative order of a nonzero field element.
template <class F>
Int element_order(const F& f, const typename F::Elem& c) {
  if (f.is_zero(c)) throw PreconditionError("order of zero");
  Int n = f.size() - 1;
  Int ord = n;
  for (const auto& [q, e] : factor_int(n)) {
    for (unsigned i = 0; i < e; ++i) {
      if (ord % q != 0) break;
      if (f.eq(f.pow(c, ord / q), f.one()))
        ord /= q;
      else
        break;
    }
  }
  return ord;
}

struct PerfectPowerData {
  bool infinite = false;  // constant input: g_e = +infinity
  Int g_e;                // gcd of the multiplicities
  Int ord_c;              // order of the leading coefficient
  Int d_c;                // (|F|-1)/ord_c
  Int max_exponent;       // largest r | g_e with gcd(r, |F|-1) | d_c; 0 when unbounded
};

// From multiplicities, ord(c) and |F| (used for products of p-powers).
PerfectPowerData perfect_power_from(const std::vector<Int>& mults, const Int& ord_c, const Int& field_size);

template <class F>
PerfectPowerData perfect_power_data(const Poly<F>& a) {
  if (a.is_zero()) throw PreconditionError("perfect power data of zero");
  const F& f = a.field();
  std::vector<Int> mults;
  for (const auto& [g, e] : squarefree_decomposition(a)) mults.emplace_back(e);
  return perfect_power_from(mults, element_order(f, a.lead()), f.size());
}

// Order of the class of A modulo (q-1)-th powers: (q-1)/gcd(q-1, g_e, d_c).
// q must be a power of |F|; d_c is taken in F_q.
Int kummer_order_from(const std::vector<Int>& mults, const Int& ord_c, const Int& q);

template <class F>
Int kummer_order(const Poly<F>& a, const Int& q) {
  if (a.is_zero()) throw PreconditionError("Kummer order of zero");
  std::vector<Int> mults;
  for (const auto& [g, e] : squarefree_decomposition(a)) mults.emplace_back(e);
  return kummer_order_from(mults, element_order(a.field(), a.lead()), q);
}

// ---- dense matrices over a field ------------------------------------------------

template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;
  Matrix() = default;
  Matrix(F f, size_t rows, size_t cols) : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, f_.zero()) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const F& field() const { return f_; }
  Elem& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Elem& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  // In-place reduced row echelon form; returns pivot columns.
  std::vector<size_t> rref() {
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
      size_t k = r;
      while (k < rows_ && f_.is_zero(at(k, c))) ++k;
      if (k == rows_) continue;
      if (k != r)
        for (size_t j = 0; j < cols_; ++j) std::swap(at(k, j), at(r, j));
      Elem iv = f_.inv(at(r, c));
      for (size_t j = c; j < cols_; ++j) at(r, j) = f_.mul(at(r, j), iv);
      for (size_t i = 0; i < rows_; ++i) {
        if (i == r || f_.is_zero(at(i, c))) continue;
        Elem m = at(i, c);
        for (size_t j = c; j < cols_; ++j) at(i, j) = f_.sub(at(i, j), f_.mul(m, at(r, j)));
      }
      piv.push_back(c);
      ++r;
    }
    return piv;
  }
  size_t rank() const {
    Matrix t = *this;
    return t.rref().size();
  }
  // Basis of {v : M v = 0}.
  std::vector<std::vector<Elem>> nullspace() const {
    Matrix t = *this;
    auto piv = t.rref();
    std::vector<bool> is_piv(cols_, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<Elem>> out;
    for (size_t free = 0; free < cols_; ++free) {
      if (is_piv[free]) continue;
      std::vector<Elem> v(cols_, f_.zero());
      v[free] = f_.one();
      for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = f_.neg(t.at(r, free));
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  F f_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> a_;
};

using FpMatrix = Matrix<PrimeField>;

// ---- rational functions and matrices over F_q(x) --------------------------------

template <class F>
class RatFunc {
 public:
  using P = Poly<F>;
  RatFunc() = default;
  explicit RatFunc(const F& f) : num_(f), den_(P::constant(f, f.one())) {}
  explicit RatFunc(P num) : num_(std::move(num)), den_(P::constant(num_.field(), num_.field().one())) {}
  RatFunc(P num, P den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  const P& num() const { return num_; }
  const P& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  const F& field() const { return num_.field(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc(a.field());
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw PreconditionError("rational function division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  // c(x) -> c(x^k)
  RatFunc expand(size_t k) const {
    RatFunc r;
    r.num_ = num_.expand(k);
    r.den_ = den_.expand(k);
    return r;
  }

 private:
  void reduce() {
    if (den_.is_zero()) throw PreconditionError("zero denominator");
    if (num_.is_zero()) {
      den_ = P::constant(num_.field(), num_.field().one());
      return;
    }
    P g = gcd(num_, den_);
    if (g.deg() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    auto li = num_.field().inv(den_.lead());
    num_ = num_.scale(li);
    den_ = den_.scale(li);
  }

  P num_;
  P den_;
};

template <class F>
using MatRF = std::vector<std::vector<RatFunc<F>>>;

// Rank over F_q(x): clear row denominators, then fraction-free elimination
// on polynomial rows (content removed after every step).
template <class F>
size_t rank_rf(const MatRF<F>& m) {
  if (m.empty()) return 0;
  using P = Poly<F>;
  const size_t cols = m[0].size();
  std::vector<std::vector<P>> rows;
  for (const auto& row : m) {
    if (row.empty()) continue;
    const F& f = row[0].field();
    P l = P::constant(f, f.one());
    for (const auto& e : row) l = l / gcd(l, e.den()) * e.den();
    std::vector<P> pr;
    for (const auto& e : row) pr.push_back(e.num() * (l / e.den()));
    rows.push_back(std::move(pr));
  }
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t k = r;
    while (k < rows.size() && rows[k][c].is_zero()) ++k;
    if (k == rows.size()) continue;
    std::swap(rows[k], rows[r]);
    for (size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      P g = gcd(rows[r][c], rows[i][c]);
      P a = rows[r][c] / g, b = rows[i][c] / g;
      P content(rows[r][c].field());
      for (size_t j = c; j < cols; ++j) {
        rows[i][j] = rows[i][j] * a - rows[r][j] * b;
        content = gcd(content, rows[i][j]);
      }
      if (content.deg() > 0)
        for (size_t j = c; j < cols; ++j) rows[i][j] = rows[i][j] / content;
    }
    ++r;
  }
  return r;
}

// In-place RREF over F_q(x); returns pivot columns.
template <class F>
std::vector<size_t> rref_rf(MatRF<F>& m) {
  std::vector<size_t> piv;
  if (m.empty()) return piv;
  const size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t k = r;
    while (k < m.size() && m[k][c].is_zero()) ++k;
    if (k == m.size()) continue;
    std::swap(m[k], m[r]);
    RatFunc<F> iv = RatFunc<F>(Poly<F>::constant(m[r][c].field(), m[r][c].field().one())) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * iv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      RatFunc<F> f = m[i][c];
      for (size_t j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] = m[i][j] - f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

// Basis of {v : M v = 0} by back-substitution from the RREF.
template <class F>
std::vector<std::vector<RatFunc<F>>> nullspace_rf(const MatRF<F>& m, const F& f) {
  std::vector<std::vector<RatFunc<F>>> out;
  if (m.empty()) return out;
  MatRF<F> t = m;
  auto piv = rref_rf(t);
  const size_t cols = m[0].size();
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  for (size_t free = 0; free < cols; ++free) {
    if (is_piv[free]) continue;
    std::vector<RatFunc<F>> v(cols, RatFunc<F>(f));
    v[free] = RatFunc<F>(Poly<F>::constant(f, f.one()));
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -t[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

// ---- series helpers over F_p ----------------------------------------------------

// g with g^2 = f mod x^n, g(0) = 1. Needs f(0) = 1 and p odd.
FpPoly series_sqrt(const FpPoly& f, size_t n);

}  // namespace hypermod

#endif
