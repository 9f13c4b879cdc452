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

// Exact rationals, p-adic valuations and digits, the Dwork map, Christol's
// order and the linear digit polynomials in s (p = d*s + t).

#ifndef HYPERMOD_ARITH_CORE_HPP
#define HYPERMOD_ARITH_CORE_HPP

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hypermod {

using Int = mpz_class;
using Rat = mpq_class;  // always canonical (lowest terms, positive denominator)

inline constexpr long kValInf = LONG_MAX;  // valuation of zero

Rat make_rat(long num, long den = 1);
Rat parse_rat(std::string_view text);  // "a/b", "a", "-a/b"
std::string to_string(const Rat& x);
std::string to_string(const Int& x);

// ---- elementary number theory on machine words -------------------------

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod(uint64_t a, uint64_t e, uint64_t m);
uint64_t invmod(uint64_t a, uint64_t m);   // throws PreconditionError if not a unit
long modinv_signed(long a, long m);        // result in [0, m)
long mod_floor(long a, long m);            // result in [0, m)
bool is_prime(uint64_t n);
std::vector<uint64_t> primes_in(uint64_t lo, uint64_t hi);  // primes in [lo, hi]
long mult_order(long a, long m);           // order of a in (Z/mZ)^x
std::vector<long> units_mod(long d);       // (Z/dZ)^x, sorted
std::vector<long> cyclic_subgroup(long a, long d);  // <a mod d>, sorted
long gcd_l(long a, long b);
long lcm_l(long a, long b);
std::vector<std::pair<Int, unsigned>> factor_int(Int n);  // trial division
int mobius(long n);
Int ipow(const Int& b, unsigned long e);

// ---- valuations and fractional parts -----------------------------------

long vp(const Int& x, uint64_t p);
long vp(const Rat& x, uint64_t p);

Rat frac0(const Rat& x);  // in [0, 1)
Rat frac1(const Rat& x);  // in (0, 1]
Int floor_rat(const Rat& x);

// a "precedes" b: frac1(a) < frac1(b), or equal fractional parts and a >= b.
bool christol_leq(const Rat& a, const Rat& b);

// gamma = q*Q - R with 0 <= R < q. q is a prime power p^r.
struct EuclidRQ {
  Int R;
  Rat Q;
};
EuclidRQ euclid_rq(const Rat& gamma, const Int& q);

// Residue of -gamma modulo q in [0, q).
Int neg_residue(const Rat& gamma, const Int& q);
uint64_t neg_residue(const Rat& gamma, uint64_t p);

Rat dwork(const Rat& gamma, uint64_t p);
Rat dwork_iter(const Rat& gamma, uint64_t p, unsigned k);
std::vector<Rat> dwork_r(const std::vector<Rat>& gamma, uint64_t p, uint64_t r);

// k-th p-adic digit of -gamma.
uint64_t digit(const Rat& gamma, uint64_t p, unsigned k);

struct PAdicDigitSeq {
  Rat gamma;
  uint64_t p = 0;
  std::vector<uint64_t> preperiod;
  std::vector<uint64_t> period;
  uint64_t at(size_t k) const;
};
PAdicDigitSeq digit_seq(const Rat& gamma, uint64_t p);

unsigned ell_p_single(const Rat& gamma, uint64_t p);
unsigned ell_p_params(const std::vector<Rat>& alpha, const std::vector<Rat>& beta,
                      uint64_t p);

// Common denominator of a list of rationals.
long common_denominator(const std::vector<Rat>& xs);

// True iff the two lists agree as multisets modulo Z.
bool same_classes_mod1(const std::vector<Rat>& a, const std::vector<Rat>& b);

// ---- digit polynomials ---------------------------------------------------

// slope*s + constant, integer coefficients.
struct LinPoly {
  Int slope;
  Int constant;
  Int eval(const Int& s) const { return slope * s + constant; }
  bool operator==(const LinPoly& o) const {
    return slope == o.slope && constant == o.constant;
  }
};

// Gamma_t(s): the representative of (-gamma mod p) in [0, p) for every prime
// p = d*s + t. gamma in (0,1) with gamma*d integral, gcd(t,d) = 1.
LinPoly gamma_poly(const Rat& gamma, long d, long t);

struct PrimeContext {
  uint64_t p = 0;
  long d = 1;
  long t = 0;      // p mod d
  long delta = 1;  // delta*p = 1 mod d, 1 <= delta < d (delta = 1 when d = 1)
  static PrimeContext make(uint64_t p, long d);
};

}  // namespace hypermod

#endif
