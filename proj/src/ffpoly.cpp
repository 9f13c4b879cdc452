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

#include "hypermod/ffpoly.hpp"

namespace hypermod {

PrimeField::PrimeField(uint64_t p) : p_(p) {
  if (p >= (1ULL << 31) || !is_prime(p)) throw PreconditionError("field size must be a prime below 2^31");
}

PrimeField::Elem PrimeField::from_int(const Int& v) const {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return r.get_ui();
}

PrimeField::Elem PrimeField::from_rat(const Rat& v) const {
  Elem d = from_int(Int(v.get_den()));
  if (d == 0) throw PreconditionError("p divides the denominator of " + to_string(v));
  return mul(from_int(Int(v.get_num())), inv(d));
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw PreconditionError("inverse of zero in F_p");
  return invmod(a, p_);
}

PrimeField::Elem PrimeField::pow(Elem a, const Int& e) const {
  Int m;
  mpz_fdiv_r_ui(m.get_mpz_t(), e.get_mpz_t(), p_ - 1);
  if (a == 0) return e == 0 ? 1 % p_ : 0;
  return powmod(a, m.get_ui(), p_);
}

// ---- extension fields -------------------------------------------------------------

ExtField::ExtField(uint64_t p, std::vector<uint64_t> modulus) {
  auto d = std::make_shared<Data>();
  d->base = PrimeField(p);
  if (modulus.size() < 2 || modulus.back() != 1) throw PreconditionError("extension modulus must be monic of degree >= 1");
  d->ell = static_cast<unsigned>(modulus.size() - 1);
  d->modulus = std::move(modulus);
  d->q = ipow(Int(static_cast<unsigned long>(p)), d->ell);
  if (!is_irreducible(FpPoly(d->base, d->modulus))) throw PreconditionError("extension modulus is reducible");
  data_ = std::move(d);
}

ExtField ExtField::make(uint64_t p, unsigned ell) {
  if (ell == 0) throw PreconditionError("extension degree must be positive");
  PrimeField fp(p);
  // counter over (c_{l-1}, ..., c_0), most significant first
  std::vector<uint64_t> digits(ell, 0);
  for (;;) {
    std::vector<uint64_t> m(ell + 1, 0);
    for (unsigned i = 0; i < ell; ++i) m[ell - 1 - i] = digits[i];
    m[ell] = 1;
    FpPoly f(fp, m);
    if (is_irreducible(f)) return ExtField(p, m);
    size_t k = ell;
    while (k-- > 0) {
      if (++digits[k] < p) break;
      digits[k] = 0;
    }
    if (k == static_cast<size_t>(-1)) break;
  }
  throw PreconditionError("no irreducible polynomial found");
}

ExtField::Elem ExtField::one() const {
  Elem e = zero();
  e[0] = 1 % p();
  return e;
}

ExtField::Elem ExtField::gen() const {
  if (degree() == 1) return Elem{(p() - modulus()[0]) % p()};
  Elem e = zero();
  e[1] = 1;
  return e;
}

ExtField::Elem ExtField::embed(uint64_t c) const {
  Elem e = zero();
  e[0] = c % p();
  return e;
}

ExtField::Elem ExtField::from_int(long v) const { return embed(base().from_int(v)); }
ExtField::Elem ExtField::from_int(const Int& v) const { return embed(base().from_int(v)); }

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
  Elem r(degree());
  for (unsigned i = 0; i < degree(); ++i) r[i] = base().add(a[i], b[i]);
  return r;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const {
  Elem r(degree());
  for (unsigned i = 0; i < degree(); ++i) r[i] = base().sub(a[i], b[i]);
  return r;
}

ExtField::Elem ExtField::neg(const Elem& a) const {
  Elem r(degree());
  for (unsigned i = 0; i < degree(); ++i) r[i] = base().neg(a[i]);
  return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
  const unsigned l = degree();
  const PrimeField& f = base();
  std::vector<uint64_t> t(2 * l - 1, 0);
  for (unsigned i = 0; i < l; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < l; ++j) t[i + j] = f.add(t[i + j], f.mul(a[i], b[j]));
  }
  const auto& m = modulus();
  for (size_t k = t.size(); k-- > l;) {
    uint64_t c = t[k];
    if (c == 0) continue;
    for (unsigned i = 0; i < l; ++i) t[k - l + i] = f.sub(t[k - l + i], f.mul(c, m[i]));
  }
  t.resize(l);
  return t;
}

ExtField::Elem ExtField::pow(const Elem& a, const Int& e) const {
  Elem r = one();
  if (e == 0) return r;
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
  }
  return r;
}

ExtField::Elem ExtField::inv(const Elem& a) const {
  if (is_zero(a)) throw PreconditionError("inverse of zero in F_q");
  return pow(a, size() - 2);
}

bool ExtField::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](uint64_t c) { return c == 0; });
}

bool ExtField::less(const Elem& a, const Elem& b) const {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

ExtField::Elem ExtField::pth_root(const Elem& a) const {
  // inverse of Frobenius is Frobenius^{l-1}
  return pow(a, ipow(Int(static_cast<unsigned long>(p())), degree() - 1));
}

std::string ExtField::str(const Elem& a) const {
  std::string out;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || a[i] != 1) out += std::to_string(a[i]);
    if (i > 0) out += (a[i] != 1 ? "*y" : "y") + (i > 1 ? "^" + std::to_string(i) : std::string());
  }
  return out.empty() ? "0" : out;
}

// ---- perfect powers --------------------------------------------------------------

PerfectPowerData perfect_power_from(const std::vector<Int>& mults, const Int& ord_c, const Int& field_size) {
  PerfectPowerData out;
  Int qm1 = field_size - 1;
  out.ord_c = ord_c;
  out.d_c = qm1 / ord_c;
  Int g = 0;
  for (const auto& e : mults) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  if (g == 0) {
    out.infinite = true;
    out.g_e = 0;
    out.max_exponent = 0;
    return out;
  }
  out.g_e = g;
  // largest divisor r of g_e with gcd(r, q-1) | d_c
  std::vector<Int> divs{1};
  for (const auto& [pr, e] : factor_int(g)) {
    std::vector<Int> next;
    for (const auto& d : divs) {
      Int pk = 1;
      for (unsigned i = 0; i <= e; ++i) {
        next.push_back(d * pk);
        pk *= pr;
      }
    }
    divs = std::move(next);
  }
  Int best = 1;
  for (const auto& r : divs) {
    Int gg;
    mpz_gcd(gg.get_mpz_t(), r.get_mpz_t(), qm1.get_mpz_t());
    if (out.d_c % gg == 0 && r > best) best = r;
  }
  out.max_exponent = best;
  return out;
}

Int kummer_order_from(const std::vector<Int>& mults, const Int& ord_c, const Int& q) {
  Int qm1 = q - 1;
  if (qm1 % ord_c != 0) throw PreconditionError("leading coefficient order does not divide q-1");
  Int g = qm1 / ord_c;  // d_c in F_q
  for (const auto& e : mults) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  return qm1 / g;
}

// ---- series ----------------------------------------------------------------------

FpPoly series_sqrt(const FpPoly& f, size_t n) {
  const PrimeField& fp = f.field();
  if (fp.p() == 2) throw PreconditionError("series square root needs odd p");
  if (f.coeff(0) != 1) throw PreconditionError("series square root needs constant term 1");
  std::vector<uint64_t> g(n, 0);
  if (n == 0) return FpPoly(fp);
  g[0] = 1;
  const uint64_t half = fp.inv(2);
  for (size_t k = 1; k < n; ++k) {
    // 2 g_k = f_k - sum_{0<i<k} g_i g_{k-i}
    unsigned __int128 acc = 0;
    for (size_t i = 1; i < k; ++i) acc += static_cast<unsigned __int128>(g[i] * g[k - i]);
    uint64_t s = static_cast<uint64_t>(acc % fp.p());
    g[k] = fp.mul(fp.sub(f.coeff(k), s), half);
  }
  return FpPoly(fp, std::move(g));
}

}  // namespace hypermod
