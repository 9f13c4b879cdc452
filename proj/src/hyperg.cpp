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

#include "hypermod/hyperg.hpp"

#include <algorithm>
#include <numeric>

#include "hypermod/errors.hpp"

namespace hypermod {

namespace {

bool in_minus_N(const Rat& x) { return x.get_den() == 1 && x <= 0; }

Int upow(uint64_t p, unsigned r) { return ipow(Int(static_cast<unsigned long>(p)), r); }

long inverse_power_mod(uint64_t p, unsigned r, long d) {
  if (d == 1) return 1;
  long t = static_cast<long>(p % static_cast<uint64_t>(d));
  long pr = 1;
  for (unsigned i = 0; i < r; ++i) pr = mod_floor(pr * t, d);
  return modinv_signed(pr, d);
}

}  // namespace

HParams::HParams(std::vector<Rat> alpha, std::vector<Rat> beta_given) : alpha_(std::move(alpha)), beta_(std::move(beta_given)) {
  if (beta_.size() + 1 != alpha_.size())
    throw PreconditionError("expected " + std::to_string(alpha_.size() > 0 ? alpha_.size() - 1 : 0) + " bottom parameters, got " +
                            std::to_string(beta_.size()));
  beta_.push_back(Rat(1));
  validate();
}

HParams HParams::from_full(std::vector<Rat> alpha, std::vector<Rat> beta_full) {
  if (beta_full.empty() || beta_full.back() != 1) throw PreconditionError("full bottom list must end with 1");
  HParams h;
  h.alpha_ = std::move(alpha);
  h.beta_ = std::move(beta_full);
  if (h.beta_.size() != h.alpha_.size()) throw PreconditionError("parameter lists of different lengths");
  h.validate();
  return h;
}

void HParams::validate() {
  if (alpha_.empty()) throw PreconditionError("at least one top parameter is required");
  for (const auto& a : alpha_)
    if (in_minus_N(a)) throw PreconditionError("top parameter " + to_string(a) + " lies in -N");
  for (const auto& b : beta_)
    if (in_minus_N(b)) throw PreconditionError("bottom parameter " + to_string(b) + " lies in -N");
  std::vector<Rat> all = alpha_;
  all.insert(all.end(), beta_.begin(), beta_.end());
  d_ = common_denominator(all);
}

Rat HParams::max_abs() const {
  Rat m = 1;
  for (const auto& a : alpha_) m = std::max<Rat>(m, abs(a));
  for (const auto& b : beta_) m = std::max<Rat>(m, abs(b));
  return m;
}

Rat HParams::large_prime_bound() const { return Rat(2 * d_) * max_abs() + 1; }

std::vector<long> HParams::lambdas() const {
  if (d_ == 1) return {1};
  return units_mod(d_);
}

std::vector<long> HParams::p_orbit(uint64_t p) const {
  if (d_ == 1) return {1};
  return cyclic_subgroup(static_cast<long>(p % static_cast<uint64_t>(d_)), d_);
}

std::string HParams::str() const {
  std::string s = "(";
  for (size_t i = 0; i < alpha_.size(); ++i) s += (i ? "," : "") + to_string(alpha_[i]);
  s += "; ";
  for (size_t j = 0; j + 1 < beta_.size(); ++j) s += (j ? "," : "") + to_string(beta_[j]);
  return s + ")";
}

bool HParams::operator<(const HParams& o) const {
  if (alpha_ != o.alpha_) return std::lexicographical_compare(alpha_.begin(), alpha_.end(), o.alpha_.begin(), o.alpha_.end());
  return std::lexicographical_compare(beta_.begin(), beta_.end(), o.beta_.begin(), o.beta_.end());
}

Rat h_exact(const HParams& h, unsigned long k) {
  Rat c = 1;
  for (unsigned long i = 0; i < k; ++i) {
    Rat num = 1, den = 1;
    for (const auto& a : h.alpha()) num *= a + i;
    for (const auto& b : h.beta()) den *= b + i;  // beta_n = 1 gives the (i+1)
    c = c * num / den;
  }
  return c;
}

std::vector<Rat> h_exact_list(const HParams& h, unsigned long count) {
  std::vector<Rat> out;
  out.reserve(count);
  Rat c = 1;
  for (unsigned long i = 0; i < count; ++i) {
    out.push_back(c);
    Rat num = 1, den = 1;
    for (const auto& a : h.alpha()) num *= a + i;
    for (const auto& b : h.beta()) den *= b + i;
    c = c * num / den;
  }
  return out;
}

long M_func(const HParams& h, const Rat& x, long lambda) {
  long lam = h.d() == 1 ? 1 : mod_floor(lambda, h.d());
  if (lam == 0) lam = h.d();
  long m = 0;
  for (const auto& a : h.alpha())
    if (christol_leq(Rat(lam) * a, x)) ++m;
  for (const auto& b : h.beta())
    if (christol_leq(Rat(lam) * b, x)) --m;
  return m;
}

bool interlacing_ok(const HParams& h, long lambda) {
  for (const auto& b : h.beta())
    if (M_func(h, Rat(lambda) * b, lambda) < 0) return false;
  return true;
}

bool globally_bounded(const HParams& h) {
  for (long lam : h.lambdas())
    if (!interlacing_ok(h, lam)) return false;
  return true;
}

Algebraicity algebraic(const HParams& h) {
  for (const auto& a : h.alpha()) {
    if (a.get_den() == 1) return Algebraicity::NotApplicable;
    for (const auto& b : h.beta())
      if (Rat(a - b).get_den() == 1) return Algebraicity::NotApplicable;
  }
  for (long lam : h.lambdas()) {
    // (position on the circle, is_alpha)
    std::vector<std::pair<Rat, bool>> pts;
    for (const auto& a : h.alpha()) pts.emplace_back(frac1(Rat(lam) * a), true);
    for (const auto& b : h.beta()) pts.emplace_back(frac1(Rat(lam) * b), false);
    std::sort(pts.begin(), pts.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
    for (size_t i = 0; i < pts.size(); ++i) {
      if (pts[i].second != (i % 2 == 0)) return Algebraicity::No;
      if (i + 1 < pts.size() && pts[i].first == pts[i + 1].first) return Algebraicity::No;
    }
  }
  return Algebraicity::Yes;
}

const char* to_string(Algebraicity a) {
  switch (a) {
    case Algebraicity::Yes:
      return "yes";
    case Algebraicity::No:
      return "no";
    default:
      return "not applicable";
  }
}

long V_func(const HParams& h, const Rat& x, uint64_t p, unsigned r) {
  long dl = inverse_power_mod(p, r, h.d());
  Rat q(upow(p, r));
  long v = 0;
  for (const auto& a : h.alpha())
    if (frac1(Rat(dl) * a) - a / q < x) ++v;
  for (const auto& b : h.beta())
    if (frac1(Rat(dl) * b) - b / q < x) --v;
  return v;
}

long vp_hk_levels(const HParams& h, uint64_t p, const Int& k, unsigned r_lo, unsigned r_hi) {
  // v_p((gamma)_k) = sum_r (floor(k/p^r) + [R(gamma, p^r) < k mod p^r]); the
  // floor terms cancel since top and bottom lists have equal length.
  long v = 0;
  for (unsigned r = r_lo; r <= r_hi; ++r) {
    Int q = upow(p, r);
    Int km = k % q;
    for (const auto& a : h.alpha())
      if (neg_residue(a, q) < km) ++v;
    for (const auto& b : h.beta())
      if (neg_residue(b, q) < km) --v;
  }
  return v;
}

long vp_hk(const HParams& h, uint64_t p, const Int& k) {
  if (k == 0) return 0;
  if (h.d() % static_cast<long>(p) == 0) throw PreconditionError("p divides the parameter denominator");
  // past p^r > 2d*max(k, |params|) every residue exceeds k
  Rat lim = Rat(2 * h.d()) * std::max<Rat>(Rat(k), h.max_abs());
  unsigned r = 1;
  while (Rat(upow(p, r)) <= lim) ++r;
  return vp_hk_levels(h, p, k, 1, r);
}

long vp_hk(const HParams& h, uint64_t p, unsigned long k) { return vp_hk(h, p, Int(k)); }

const char* to_string(ReductionStatus s) {
  switch (s) {
    case ReductionStatus::Reducible:
      return "reducible";
    case ReductionStatus::Divergent:
      return "divergent";
    default:
      return "small-prime-empirical";
  }
}

namespace {

// First violating lambda in the order Delta, Delta^2, ... with the minimizing j.
std::optional<Witness> find_violation(const HParams& h, uint64_t p) {
  long d = h.d();
  long ord = d == 1 ? 1 : mult_order(static_cast<long>(p % static_cast<uint64_t>(d)), d);
  for (unsigned m = 1; m <= static_cast<unsigned>(ord); ++m) {
    long lam = inverse_power_mod(p, m, d);
    if (interlacing_ok(h, lam)) continue;
    Witness w;
    w.lambda = lam;
    w.m = m;
    w.M_value = 0;
    bool first = true;
    for (size_t j = 0; j < h.beta().size(); ++j) {
      long v = M_func(h, Rat(lam) * h.beta()[j], lam);
      if (first || v < w.M_value) {
        w.M_value = v;
        w.j = j;
        first = false;
      }
    }
    return w;
  }
  return std::nullopt;
}

}  // namespace

ReductionVerdict reducible_mod_p(const HParams& h, uint64_t p, unsigned long scan_K) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  if (h.d() % static_cast<long>(p) == 0) throw PreconditionError("p divides the parameter denominator");
  ReductionVerdict out;
  out.bound_used = h.large_prime_bound();
  auto viol = find_violation(h, p);
  if (Rat(static_cast<unsigned long>(p)) > out.bound_used) {
    out.status = viol ? ReductionStatus::Divergent : ReductionStatus::Reducible;
    out.witness = viol;
    return out;
  }
  out.status = ReductionStatus::SmallPrimeEmpirical;
  out.witness = viol;
  out.tail_nonnegative = !viol.has_value();
  unsigned r0 = 1;
  while (Rat(upow(p, r0)) <= out.bound_used) ++r0;
  out.r0 = r0;
  out.period = upow(p, r0 - 1);
  if (r0 >= 2) {
    bool first = true;
    for (Int k = 0; k < out.period; ++k) {
      long v = vp_hk_levels(h, p, k, 1, r0 - 1);
      if (first || v < out.partial_min) {
        out.partial_min = v;
        out.partial_argmin = k;
        first = false;
      }
    }
  }
  out.scan_K = scan_K;
  out.scan_min = 0;
  out.scan_argmin = 0;
  for (unsigned long k = 1; k <= scan_K; ++k) {
    long v = vp_hk(h, p, k);
    if (v < out.scan_min) {
      out.scan_min = v;
      out.scan_argmin = k;
    }
  }
  return out;
}

DivergenceWitness divergence_witness(const HParams& h, uint64_t p, unsigned a) {
  if (a == 0) throw PreconditionError("witness depth a must be positive");
  if (h.d() % static_cast<long>(p) == 0) throw PreconditionError("p divides the parameter denominator");
  if (Rat(static_cast<unsigned long>(p)) <= h.large_prime_bound())
    throw PreconditionError("p = " + std::to_string(p) + " is not above the bound " + to_string(h.large_prime_bound()));
  auto viol = find_violation(h, p);
  if (!viol) throw PreconditionError("interlacing holds on <p mod d>; no divergence witness");
  DivergenceWitness out;
  out.w = *viol;
  const Rat& bj = h.beta()[viol->j];
  long d = h.d();
  unsigned ell = d == 1 ? 1 : static_cast<unsigned>(mult_order(static_cast<long>(p % static_cast<uint64_t>(d)), d));
  unsigned top = viol->m + (a - 1) * ell;
  // level 1 has no lower digits to lift k above R, so it takes R + 1
  Int k = neg_residue(bj, upow(p, top)) + (top == 1 ? 1 : 0);
  out.chain.push_back(k);
  for (unsigned i = top - 1; i >= 1; --i) {
    Int q = upow(p, i);
    Int target = (i % ell == viol->m % ell) ? neg_residue(bj, q) + (i == 1 ? 1 : 0) : Int(0);
    Int di = target - k;
    mpz_fdiv_r(di.get_mpz_t(), di.get_mpz_t(), q.get_mpz_t());
    k += di;
    out.chain.push_back(k);
  }
  out.k = k;
  out.vp = vp_hk(h, p, k);
  if (out.vp <= -static_cast<long>(a)) return out;
  for (const auto& x : h.alpha())
    for (const auto& y : h.beta())
      if (Rat(x - y).get_den() == 1)
        throw PreconditionError("top and bottom parameters differ by an integer; the interlacing violation at lambda = " +
                                std::to_string(viol->lambda) + " does not force unbounded valuations");
  throw std::logic_error("witness construction failed its valuation check");
}

}  // namespace hypermod
