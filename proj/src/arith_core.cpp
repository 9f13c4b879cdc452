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

#include "hypermod/arith_core.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hypermod/errors.hpp"

namespace hypermod {

Rat make_rat(long num, long den) {
  if (den == 0) throw PreconditionError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.empty()) throw PreconditionError("empty rational literal");
  auto ok_int = [](const std::string& t) {
    size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + i, t.end(), ::isdigit);
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!ok_int(num) || !ok_int(den)) throw PreconditionError("bad rational literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Int n(num), m(den);
  if (m == 0) throw PreconditionError("zero denominator in '" + s + "'");
  Rat r(n, m);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& x) { return x.get_str(); }
std::string to_string(const Int& x) { return x.get_str(); }

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a, uint64_t m) {
  long long t = 0, nt = 1;
  long long r = static_cast<long long>(m), nr = static_cast<long long>(a % m);
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw PreconditionError("element is not invertible modulo " + std::to_string(m));
  if (t < 0) t += static_cast<long long>(m);
  return static_cast<uint64_t>(t);
}

long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

long modinv_signed(long a, long m) {
  if (m == 1) return 0;
  return static_cast<long>(invmod(static_cast<uint64_t>(mod_floor(a, m)), static_cast<uint64_t>(m)));
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic for 64-bit inputs
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

std::vector<uint64_t> primes_in(uint64_t lo, uint64_t hi) {
  std::vector<uint64_t> out;
  for (uint64_t n = std::max<uint64_t>(lo, 2); n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

long gcd_l(long a, long b) { return std::gcd(a, b); }
long lcm_l(long a, long b) { return std::lcm(a, b); }

long mult_order(long a, long m) {
  if (m == 1) return 1;
  a = mod_floor(a, m);
  if (std::gcd(a, m) != 1) throw PreconditionError("mult_order: not a unit");
  long k = 1;
  long x = a;
  while (x != 1) {
    x = static_cast<long>((static_cast<__int128>(x) * a) % m);
    ++k;
  }
  return k;
}

std::vector<long> units_mod(long d) {
  std::vector<long> out;
  if (d == 1) return {0};
  for (long a = 1; a < d; ++a) {
    if (std::gcd(a, d) == 1) out.push_back(a);
  }
  return out;
}

std::vector<long> cyclic_subgroup(long a, long d) {
  std::vector<long> out;
  if (d == 1) return {0};
  long x = 1 % d;
  do {
    out.push_back(x);
    x = mod_floor(x * a, d);
  } while (x != 1 % d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Int, unsigned>> factor_int(Int n) {
  std::vector<std::pair<Int, unsigned>> out;
  if (n < 0) n = -n;
  if (n <= 1) return out;
  for (Int q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q == 0) {
      unsigned e = 0;
      while (n % q == 0) {
        n /= q;
        ++e;
      }
      out.emplace_back(q, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int mobius(long n) {
  int mu = 1;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      n /= q;
      if (n % q == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

Int ipow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

long vp(const Int& x, uint64_t p) {
  if (x == 0) return kValInf;
  Int pp(static_cast<unsigned long>(p));
  Int y = x;
  long v = 0;
  while (y % pp == 0) {
    y /= pp;
    ++v;
  }
  return v;
}

long vp(const Rat& x, uint64_t p) {
  if (x == 0) return kValInf;
  return vp(Int(x.get_num()), p) - vp(Int(x.get_den()), p);
}

Int floor_rat(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rat frac0(const Rat& x) { return x - Rat(floor_rat(x)); }

Rat frac1(const Rat& x) {
  Rat f = frac0(x);
  return f == 0 ? Rat(1) : f;
}

bool christol_leq(const Rat& a, const Rat& b) {
  Rat fa = frac1(a), fb = frac1(b);
  if (fa != fb) return fa < fb;
  return a >= b;
}

Int neg_residue(const Rat& gamma, const Int& q) {
  Int den(gamma.get_den());
  Int g;
  mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), q.get_mpz_t());
  if (g != 1) throw PreconditionError("negative valuation: " + to_string(gamma) + " modulo " + to_string(q));
  Int inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), q.get_mpz_t());
  Int r = -Int(gamma.get_num()) * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t());
  return r;
}

uint64_t neg_residue(const Rat& gamma, uint64_t p) {
  return neg_residue(gamma, Int(static_cast<unsigned long>(p))).get_ui();
}

EuclidRQ euclid_rq(const Rat& gamma, const Int& q) {
  EuclidRQ out;
  out.R = neg_residue(gamma, q);
  out.Q = (gamma + Rat(out.R)) / Rat(q);
  out.Q.canonicalize();
  return out;
}

Rat dwork(const Rat& gamma, uint64_t p) {
  return euclid_rq(gamma, Int(static_cast<unsigned long>(p))).Q;
}

Rat dwork_iter(const Rat& gamma, uint64_t p, unsigned k) {
  Rat g = gamma;
  for (unsigned i = 0; i < k; ++i) g = dwork(g, p);
  return g;
}

std::vector<Rat> dwork_r(const std::vector<Rat>& gamma, uint64_t p, uint64_t r) {
  std::vector<Rat> out;
  out.reserve(gamma.size());
  for (const auto& g : gamma) {
    // (g)_r vanishes mod p iff some g + j, j < r, is divisible by p
    uint64_t res = neg_residue(g, p);
    Rat d = dwork(g, p);
    if (res < r) d += 1;
    out.push_back(d);
  }
  return out;
}

uint64_t digit(const Rat& gamma, uint64_t p, unsigned k) {
  return neg_residue(dwork_iter(gamma, p, k), p);
}

uint64_t PAdicDigitSeq::at(size_t k) const {
  if (k < preperiod.size()) return preperiod[k];
  return period[(k - preperiod.size()) % period.size()];
}

PAdicDigitSeq digit_seq(const Rat& gamma, uint64_t p) {
  PAdicDigitSeq out;
  out.gamma = gamma;
  out.p = p;
  std::map<Rat, size_t> seen;
  std::vector<uint64_t> digits;
  Rat g = gamma;
  while (!seen.count(g)) {
    seen[g] = digits.size();
    digits.push_back(neg_residue(g, p));
    g = dwork(g, p);
  }
  size_t start = seen[g];
  out.preperiod.assign(digits.begin(), digits.begin() + static_cast<long>(start));
  out.period.assign(digits.begin() + static_cast<long>(start), digits.end());
  return out;
}

unsigned ell_p_single(const Rat& gamma, uint64_t p) {
  if (gamma <= 0 || gamma > 1) throw PreconditionError("ell_p_single expects gamma in (0,1]");
  Rat g = dwork(gamma, p);
  unsigned ell = 1;
  while (g != gamma) {
    g = dwork(g, p);
    ++ell;
  }
  return ell;
}

long common_denominator(const std::vector<Rat>& xs) {
  long d = 1;
  for (const auto& x : xs) d = std::lcm(d, static_cast<long>(Int(x.get_den()).get_si()));
  return d;
}

bool same_classes_mod1(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.size() != b.size()) return false;
  std::vector<Rat> fa, fb;
  for (const auto& x : a) fa.push_back(frac0(x));
  for (const auto& x : b) fb.push_back(frac0(x));
  std::sort(fa.begin(), fa.end());
  std::sort(fb.begin(), fb.end());
  return fa == fb;
}

unsigned ell_p_params(const std::vector<Rat>& alpha, const std::vector<Rat>& beta, uint64_t p) {
  std::vector<Rat> a = alpha, b = beta;
  std::vector<Rat> all = alpha;
  all.insert(all.end(), beta.begin(), beta.end());
  long d = common_denominator(all);
  if (d % static_cast<long>(p) == 0) throw PreconditionError("p divides a parameter denominator");
  long bound = mult_order(static_cast<long>(p % static_cast<uint64_t>(d)), d);
  for (unsigned ell = 1; ell <= static_cast<unsigned>(bound); ++ell) {
    for (auto& x : a) x = dwork(x, p);
    for (auto& x : b) x = dwork(x, p);
    if (same_classes_mod1(a, alpha) && same_classes_mod1(b, beta)) return ell;
  }
  return static_cast<unsigned>(bound);
}

LinPoly gamma_poly(const Rat& gamma, long d, long t) {
  if (std::gcd(t, d) != 1) throw PreconditionError("gamma_poly: gcd(t, d) != 1");
  Rat ad = gamma * d;
  if (ad.get_den() != 1) throw PreconditionError("gamma_poly: gamma*d not integral");
  if (gamma <= 0 || gamma >= 1) throw PreconditionError("gamma_poly: gamma not in (0,1)");
  long a = Int(ad.get_num()).get_si();
  long u = modinv_signed(t, d);  // canonical Bezout pair with 0 <= u < d
  long v = (1 - u * t) / d;
  long f = (a * u) / d;  // a*u >= 0
  LinPoly out;
  out.slope = Int(a * u - f * d);
  out.constant = Int(-a * v - f * t);
  return out;
}

PrimeContext PrimeContext::make(uint64_t p, long d) {
  PrimeContext c;
  c.p = p;
  c.d = d;
  if (d <= 0) throw PreconditionError("PrimeContext: d must be positive");
  c.t = static_cast<long>(p % static_cast<uint64_t>(d));
  if (d == 1) {
    c.delta = 1;
    return c;
  }
  if (std::gcd(c.t, d) != 1) throw PreconditionError("PrimeContext: p divides d");
  c.delta = modinv_signed(c.t, d);
  return c;
}

}  // namespace hypermod
