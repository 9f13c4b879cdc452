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

// Solutions of the hypergeometric operator modulo p.
//
// H(alpha, beta) x^k = B(k) x^k - A(k) x^{k+1} with A(k) = prod (k + alpha_i)
// and B(k) = prod (k + beta_j - 1). Zeros of A mod p are "green" residues
// -alpha_i mod p, zeros of B are "yellow" residues 1 - beta_j mod p.

#ifndef HYPERMOD_MODP_BASIS_HPP
#define HYPERMOD_MODP_BASIS_HPP

#include <map>
#include <set>
#include <vector>

#include "hypermod/ffpoly.hpp"
#include "hypermod/hyperg.hpp"

namespace hypermod {

struct CircleColoring {
  uint64_t p = 0;
  std::vector<uint64_t> greens;   // -alpha_i mod p, one per i
  std::vector<uint64_t> yellows;  // 1 - beta_j mod p, one per j

  // Points in increasing angle: green g sits at (2g+1)/(2p), yellow y at
  // y/p, so a yellow precedes a green of the same residue. Repeated points
  // of one colour are merged. true = green.
  std::vector<std::pair<uint64_t, bool>> cyclic_order() const;
};

CircleColoring coloring(const HParams& h, uint64_t p);

// Yellow residues followed by a green before the next yellow, with the
// exponent of that green (g + 1, unwrapped past p when needed, so t < k_t <= 2p).
std::map<uint64_t, uint64_t> T_p_set(const HParams& h, uint64_t p);
unsigned p_interlacing_number(const HParams& h, uint64_t p);

struct BasisEntry {
  uint64_t t = 0;
  uint64_t k_t = 0;
  FpPoly f;
};

struct SolutionBasis {
  uint64_t p = 0;
  std::vector<BasisEntry> entries;
};

// Requires p > n and p not dividing d.
SolutionBasis solution_basis(const HParams& h, uint64_t p);
// f_t alone; t must lie in T_p.
FpPoly basis_poly(const HParams& h, uint64_t p, uint64_t t);

FpPoly apply_operator(const HParams& h, const FpPoly& f);
PrimeField::Elem A_mod(const HParams& h, const PrimeField& F, uint64_t k);
PrimeField::Elem B_mod(const HParams& h, const PrimeField& F, uint64_t k);

// {r < p : r = 1 - beta_j mod p for some j and v_p(h_r) = 0}
std::set<uint64_t> S_p_set(const HParams& h, uint64_t p);

// Unit part of h_k reduced mod p.
PrimeField::Elem unit_part_mod(const Rat& x, const PrimeField& F);

// Interlacing number shared by all large primes p = t mod d, keyed by t.
std::map<long, unsigned> dim_table(const HParams& h);
unsigned dim_for_class(const HParams& h, long t);

}  // namespace hypermod

#endif
