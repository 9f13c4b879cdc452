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

#include "hypermod/sporadic.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "hypermod/errors.hpp"
#include "hypermod/hyperg.hpp"

namespace hypermod {

namespace {

Int binom(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int central2(unsigned long n) {
  Int c = binom(2 * n, n);
  return c * c;
}

Int central3(unsigned long n) {
  Int c = binom(2 * n, n);
  return c * c * c;
}

Int apery(unsigned long n) {
  Int s = 0;
  for (unsigned long k = 0; k <= n; ++k) {
    Int t = binom(n, k) * binom(n + k, k);
    s += t * t;
  }
  return s;
}

Int domb(unsigned long n) {
  Int s = 0;
  for (unsigned long k = 0; k <= n; ++k) {
    Int b = binom(n, k);
    s += binom(2 * k, k) * binom(2 * (n - k), n - k) * b * b;
  }
  return s;
}

// (3k)!/k!^3 = C(3k, k) C(2k, k)
Int almkvist_zudilin(unsigned long n) {
  Int s = 0;
  for (unsigned long k = 0; 3 * k <= n; ++k) {
    Int t = binom(3 * k, k) * binom(2 * k, k) * binom(n, 3 * k) * binom(n + k, k) * ipow(Int(3), n - 3 * k);
    if ((n - k) % 2) s -= t;
    else s += t;
  }
  return s;
}

FpPoly from_longs(const PrimeField& F, const std::vector<long>& c) {
  std::vector<uint64_t> v;
  for (long x : c) v.push_back(F.from_int(x));
  return FpPoly(F, v);
}

std::optional<uint64_t> sqrt_mod(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  for (uint64_t x = 1; x < p; ++x)
    if (mulmod(x, x, p) == a) return x;
  return std::nullopt;
}

// B with Q = B^2, lowest nonzero coefficient of B in [1, (p-1)/2]
std::optional<FpPoly> poly_sqrt(const FpPoly& Q) {
  const PrimeField& F = Q.field();
  if (Q.is_zero()) return Q;
  auto s = sqrt_mod(Q.lead(), F.p());
  if (!s) return std::nullopt;
  FpPoly B = FpPoly::constant(F, *s);
  for (const auto& [piece, e] : squarefree_decomposition(Q)) {
    if (e % 2) return std::nullopt;
    B *= pow(piece, e / 2);
  }
  if (B.coeff(B.valuation()) > (F.p() - 1) / 2) B = -B;
  return B;
}

}  // namespace

SporadicSeries builtin(const std::string& name) {
  SporadicSeries s;
  s.name = name;
  if (name == "central2") {
    s.coeff = central2;
    s.ode_order = 2;
    s.theta_leading = {1, -16};
  } else if (name == "central3") {
    s.coeff = central3;
    s.ode_order = 3;
    s.theta_leading = {1, -64};
  } else if (name == "apery") {
    s.coeff = apery;
    s.ode_order = 3;
    s.theta_leading = {1, -34, 1};
    s.twist_candidates = {{1, -34, 1}};
  } else if (name == "domb") {
    s.coeff = domb;
    s.ode_order = 3;
    s.theta_leading = {1, -20, 64};
  } else if (name == "AZ") {
    s.coeff = almkvist_zudilin;
    s.ode_order = 3;
    s.theta_leading = {1, 14, 81};
  } else {
    throw PreconditionError("unknown series '" + name + "' (known: central2, central3, apery, domb, AZ)");
  }
  return s;
}

std::vector<std::string> builtin_names() { return {"central2", "central3", "apery", "domb", "AZ"}; }

std::vector<Int> coefficients(const SporadicSeries& s, size_t count) {
  std::vector<Int> out;
  out.reserve(count);
  for (size_t n = 0; n < count; ++n) out.push_back(s.coeff(n));
  return out;
}

FpPoly truncation_Ap(const std::vector<Int>& coeffs, uint64_t p) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  if (coeffs.size() < p) throw PreconditionError("need at least p coefficients");
  PrimeField F(p);
  std::vector<uint64_t> c;
  for (size_t n = 0; n < p; ++n) c.push_back(F.from_int(coeffs[n]));
  return FpPoly(F, c);
}

FpPoly truncation_Ap(const SporadicSeries& s, uint64_t p) { return truncation_Ap(coefficients(s, p), p); }

bool p_lucas_check(const std::vector<Int>& coeffs, uint64_t p, unsigned V) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  size_t need = static_cast<size_t>(p) * (V + 1);
  if (coeffs.size() < need) throw PreconditionError("not enough coefficients for the p-Lucas check");
  PrimeField F(p);
  for (uint64_t v = 0; v <= V; ++v)
    for (uint64_t u = 0; u < p; ++u)
      if (F.from_int(coeffs[u + p * v]) != F.mul(F.from_int(coeffs[u]), F.from_int(coeffs[v]))) return false;
  return true;
}

bool p_lucas_check(const SporadicSeries& s, uint64_t p, unsigned V) {
  return p_lucas_check(coefficients(s, static_cast<size_t>(p) * (V + 1)), p, V);
}

const char* to_string(SquareTag t) {
  switch (t) {
    case SquareTag::PerfectSquare: return "square";
    case SquareTag::QuadraticTwist: return "twisted_square";
    case SquareTag::NotSquare: return "not_square";
  }
  return "?";
}

SquareClass classify_Ap(const SporadicSeries& s, const FpPoly& A, const std::vector<std::vector<long>>& twist_candidates) {
  const PrimeField& F = A.field();
  uint64_t p = F.p();
  if (p == 2) throw PreconditionError("classify_Ap needs an odd prime");
  if (A.is_zero()) throw PreconditionError("A_p is zero");
  SquareClass out;
  out.p = p;
  auto pp = perfect_power_data(A);
  out.max_power = pp.infinite ? Int(0) : pp.max_exponent;

  FpPoly sing = FpPoly::x(F) * from_longs(F, s.theta_leading);
  for (const auto& [piece, e] : squarefree_decomposition(A)) {
    FpPoly ordinary = piece / gcd(piece, sing);
    if (ordinary.deg() > 0) out.max_ordinary_multiplicity = std::max<unsigned>(out.max_ordinary_multiplicity, static_cast<unsigned>(e));
  }
  out.multiplicity_bound = out.max_ordinary_multiplicity < s.ode_order;

  if (auto B = poly_sqrt(A)) {
    out.tag = SquareTag::PerfectSquare;
    out.B = *B;
    return out;
  }
  for (const auto& cl : twist_candidates) {
    FpPoly c = from_longs(F, cl);
    if (c.deg() <= 0) continue;
    auto [q, r] = divrem(A, c);
    if (!r.is_zero()) continue;
    if (auto B = poly_sqrt(q)) {
      out.tag = SquareTag::QuadraticTwist;
      out.twist = c;
      out.B = *B;
      return out;
    }
  }
  return out;
}

SquareClass classify_Ap(const SporadicSeries& s, uint64_t p) {
  return classify_Ap(s, truncation_Ap(s, p), s.twist_candidates);
}

SporadicGalois galois_report_sporadic(const FpPoly& A) {
  SporadicGalois g;
  g.p = A.field().p();
  Int q(static_cast<unsigned long>(g.p));
  g.order = kummer_order(A, q);
  g.index = (q - 1) / g.order;
  if (g.index == 1) g.group = "F_p^x";
  else if (g.index == 2) g.group = "squares";
  else g.group = "index " + to_string(g.index);
  return g;
}

SporadicGalois galois_report_sporadic(const SporadicSeries& s, uint64_t p) {
  if (p == 2) throw PreconditionError("galois_report_sporadic needs an odd prime");
  auto coeffs = coefficients(s, 2 * p);
  if (!p_lucas_check(coeffs, p, 1)) throw PreconditionError(s.name + " is not p-Lucas at p = " + std::to_string(p));
  return galois_report_sporadic(truncation_Ap(coeffs, p));
}

AperySqrtReport apery_sqrt_relations(uint64_t p, size_t N) {
  if (p < 5 || !is_prime(p)) throw PreconditionError("apery_sqrt_relations needs a prime p >= 5");
  SporadicSeries s = builtin("apery");
  auto coeffs = coefficients(s, std::max<size_t>(N, p));
  PrimeField F(p);
  FpPoly A = truncation_Ap(coeffs, p);
  SquareClass sc = classify_Ap(s, A, s.twist_candidates);

  AperySqrtReport rep;
  rep.p = p;
  rep.N = N;
  rep.tag = sc.tag;
  rep.intertwined = sc.tag == SquareTag::QuadraticTwist;
  if (sc.tag == SquareTag::NotSquare) return rep;

  std::vector<uint64_t> fc;
  for (size_t n = 0; n < N; ++n) fc.push_back(F.from_int(coeffs[n]));
  FpPoly f(F, fc);
  FpPoly c = from_longs(F, {1, -34, 1});
  FpPoly g = series_sqrt(f, N);
  FpPoly h = series_sqrt(mul_trunc(f, inv_series(c, N), N), N);
  const FpPoly& B = *sc.B;
  FpPoly gp = g.expand(p, N), hp = h.expand(p, N);
  auto check = [&](const std::string& name, const FpPoly& lhs, const FpPoly& coef, const FpPoly& frob) {
    rep.relations.push_back({name, lhs == mul_trunc(coef.truncate(N), frob, N)});
  };
  if (!rep.intertwined) {
    check("g = B g^p", g, B, gp);
    check("h = c^((p-1)/2) B h^p", h, mul_trunc(pow(c, (p - 1) / 2), B, N), hp);
  } else {
    FpPoly cB = mul_trunc(pow(c, (p + 1) / 2), B, N);
    FpPoly Bp1 = mul_trunc(B.expand(p, N), B, N);
    check("g = c^((p+1)/2) B h^p", g, cB, hp);
    check("h = B g^p", h, B, gp);
    check("g = c^((p+1)/2) B^(p+1) g^(p^2)", g, mul_trunc(pow(c, (p + 1) / 2), Bp1, N), g.expand(p * p, N));
    // c^(p(p+1)/2) = (c^((p+1)/2))(x^p) over F_p
    check("h = c^(p(p+1)/2) B^(p+1) h^(p^2)", h, mul_trunc(pow(c, (p + 1) / 2).expand(p, N), Bp1, N),
          h.expand(p * p, N));
  }
  rep.all_hold = std::all_of(rep.relations.begin(), rep.relations.end(), [](const RelationCheck& r) { return r.holds; });
  return rep;
}

bool clausen_check(uint64_t p) {
  if (!is_prime(p) || p % 4 != 1) throw PreconditionError("clausen_check needs a prime p = 1 mod 4");
  SporadicSeries s = builtin("central3");
  SquareClass sc = classify_Ap(s, p);
  if (sc.tag != SquareTag::PerfectSquare) return false;
  PrimeField F(p);
  auto h = h_exact_list(HParams({make_rat(1, 4), make_rat(1, 4)}, {Rat(1)}), p);
  std::vector<uint64_t> c;
  uint64_t w = 1;
  for (size_t k = 0; k < p; ++k) {
    c.push_back(F.mul(F.from_rat(h[k]), w));
    w = F.mul(w, 64 % p);
  }
  return *sc.B == FpPoly(F, c);
}

PatternReport congruence_pattern(const SporadicSeries& s, long modulus, uint64_t p_max, unsigned threads) {
  if (modulus < 1) throw PreconditionError("modulus must be positive");
  PatternReport rep;
  rep.series = s.name;
  rep.modulus = modulus;
  rep.p_max = p_max;
  std::vector<uint64_t> primes;
  for (uint64_t p : primes_in(3, p_max))
    if (modulus % static_cast<long>(p) != 0) primes.push_back(p);
  if (primes.empty()) return rep;
  auto coeffs = coefficients(s, 2 * primes.back());
  rep.rows.resize(primes.size());

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(primes.size()));
  std::atomic<size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto work = [&] {
    for (size_t i; (i = next++) < primes.size();) {
      try {
        uint64_t p = primes[i];
        FpPoly A = truncation_Ap(coeffs, p);
        SquareClass sc = classify_Ap(s, A, s.twist_candidates);
        SporadicGalois g = galois_report_sporadic(A);
        PatternRow& row = rep.rows[i];
        row.p = p;
        row.residue = static_cast<long>(p % static_cast<uint64_t>(modulus));
        row.tag = sc.tag;
        row.order = g.order;
        row.group = g.group;
        row.lucas = p_lucas_check(coeffs, p, 1);
        row.multiplicity_bound = sc.multiplicity_bound;
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);

  for (const auto& row : rep.rows) rep.observed[row.residue].insert(std::string(to_string(row.tag)) + "/" + row.group);
  for (const auto& [r, labels] : rep.observed)
    if (labels.size() > 1) rep.inconsistent.push_back(r);
  return rep;
}

std::string pattern_csv(const PatternReport& r) {
  std::ostringstream os;
  os << "p,residue,classification,galois_order\n";
  for (const auto& row : r.rows) os << row.p << ',' << row.residue << ',' << to_string(row.tag) << ',' << row.order << '\n';
  return os.str();
}

}  // namespace hypermod
