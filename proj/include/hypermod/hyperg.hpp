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

// Hypergeometric parameters nF_{n-1}(alpha, beta; x), Christol's counting
// function M, p-adic valuations of the coefficients, and the classifications
// (globally bounded, algebraic, reducible mod p, divergence witnesses).

#ifndef HYPERMOD_HYPERG_HPP
#define HYPERMOD_HYPERG_HPP

#include <optional>
#include <string>
#include <vector>

#include "hypermod/arith_core.hpp"

namespace hypermod {

class HParams {
 public:
  HParams() = default;
  // beta_given has n-1 entries; beta_n = 1 is appended.
  HParams(std::vector<Rat> alpha, std::vector<Rat> beta_given);
  // beta_full has n entries and already ends with 1 (graph vertices).
  static HParams from_full(std::vector<Rat> alpha, std::vector<Rat> beta_full);

  const std::vector<Rat>& alpha() const { return alpha_; }
  const std::vector<Rat>& beta() const { return beta_; }  // n entries, last is 1
  std::vector<Rat> beta_given() const { return {beta_.begin(), beta_.end() - 1}; }
  size_t n() const { return alpha_.size(); }
  long d() const { return d_; }
  // max{|alpha_i|, |beta_j|, 1}
  Rat max_abs() const;
  // 2d * max{|alpha_i|, |beta_j|, 1} + 1
  Rat large_prime_bound() const;
  // units mod d as positive representatives ({1} when d = 1)
  std::vector<long> lambdas() const;
  // residues of p^k mod d for k >= 1, as representatives in [1, d)
  std::vector<long> p_orbit(uint64_t p) const;

  std::string str() const;  // "(1/2,2/3; 1/3)"
  bool operator==(const HParams& o) const { return alpha_ == o.alpha_ && beta_ == o.beta_; }
  bool operator<(const HParams& o) const;

 private:
  void validate();
  std::vector<Rat> alpha_;
  std::vector<Rat> beta_;
  long d_ = 1;
};

// h(alpha, beta; k) by the ratio recurrence.
Rat h_exact(const HParams& h, unsigned long k);
std::vector<Rat> h_exact_list(const HParams& h, unsigned long count);

// M(x, lambda) = #{i : lambda alpha_i <= x} - #{j : lambda beta_j <= x} in
// Christol's order; lambda is used through its representative in [1, d).
long M_func(const HParams& h, const Rat& x, long lambda);
bool interlacing_ok(const HParams& h, long lambda);
bool globally_bounded(const HParams& h);

enum class Algebraicity { Yes, No, NotApplicable };
// Strict alternation of the merged point lists for every lambda.
Algebraicity algebraic(const HParams& h);
const char* to_string(Algebraicity a);

// V(x, p^r) with Delta_r = (p^r)^{-1} mod d.
long V_func(const HParams& h, const Rat& x, uint64_t p, unsigned r);

// v_p(h_k), computed exactly from the residues R(gamma, p^r).
long vp_hk(const HParams& h, uint64_t p, const Int& k);
long vp_hk(const HParams& h, uint64_t p, unsigned long k);
// Contribution of the levels r in [r_lo, r_hi].
long vp_hk_levels(const HParams& h, uint64_t p, const Int& k, unsigned r_lo, unsigned r_hi);

enum class ReductionStatus { Reducible, Divergent, SmallPrimeEmpirical };
const char* to_string(ReductionStatus s);

struct Witness {
  long lambda = 0;
  size_t j = 0;    // index into beta (0-based, beta includes beta_n = 1)
  unsigned m = 0;  // minimal m >= 1 with Delta^m = lambda mod d
  long M_value = 0;
};

struct ReductionVerdict {
  ReductionStatus status = ReductionStatus::Reducible;
  std::optional<Witness> witness;
  Rat bound_used;
  // SmallPrimeEmpirical only
  unsigned r0 = 0;
  Int period;                    // p^{r0-1}
  long partial_min = 0;          // min over one period of sum_{r < r0}
  Int partial_argmin;
  bool tail_nonnegative = false;  // interlacing holds on <p mod d>
  unsigned long scan_K = 0;
  long scan_min = 0;
  unsigned long scan_argmin = 0;
};

ReductionVerdict reducible_mod_p(const HParams& h, uint64_t p, unsigned long scan_K = 2000);

struct DivergenceWitness {
  Witness w;
  Int k;
  std::vector<Int> chain;  // k_top, ..., k_1
  long vp = 0;
};

// Throws PreconditionError if p is at or below the bound or no lambda in
// <p mod d> violates interlacing.
DivergenceWitness divergence_witness(const HParams& h, uint64_t p, unsigned a);

}  // namespace hypermod

#endif
