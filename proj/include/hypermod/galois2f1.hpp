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

// Gaussian 2F1(alpha, (1); x) mod p: the polynomial A with H = A * H^q, exact
// Galois group orders through Kummer theory, the conjectured group G and the
// per-class symbolic certificates bounding the index of Gal in G_p.

#ifndef HYPERMOD_GALOIS2F1_HPP
#define HYPERMOD_GALOIS2F1_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hypermod/cyclo.hpp"
#include "hypermod/ffpoly.hpp"
#include "hypermod/qpoly.hpp"

namespace hypermod {

struct G2F1 {
  Rat alpha1, alpha2;  // in (0, 1), alpha1 <= alpha2
  long d = 1;
  long m = 1;  // denominator of alpha1 + alpha2
  HParams params() const;
  std::string str() const;  // "(1/8, 3/8)"
};

// alpha in (0,1)^2, no integer entries
G2F1 make_g2f1(const Rat& a1, const Rat& a2);

struct Normalization {
  std::array<Rat, 2> original;
  bool binomial = false;  // some alpha_i is an integer: (1 - x)^{-a}
  Rat binomial_exponent;  // the other parameter, when binomial
  bool shifted = false;   // original differs from the normalized pair
  G2F1 g;                 // valid when !binomial
};
Normalization normalize(const Rat& a1, const Rat& a2);

// 2F1(original) = Atilde * H_0^{p^k} mod p, where H_0 is the normalized series
// and k is the number of Dwork steps until the normalized pair is reached.
struct Bridge {
  uint64_t p = 0;
  unsigned steps = 0;
  FpPoly Atilde;  // truncated at x^N
};
Bridge bridge(const Normalization& n, uint64_t p, size_t N);
// Checks the bridge identity mod (p, x^N) against the series of both pairs.
bool bridge_holds(const Normalization& n, uint64_t p, size_t N);

struct BinomialGroup {
  long d = 1;
  uint64_t p = 0;
  std::vector<long> residue_part;  // <p mod d>
  Int order;                       // d * |<p mod d>|
};
BinomialGroup binomial_case(long a, long d, uint64_t p);

// Truncation at x^p of 2F1(gamma, (1); x) mod p.
FpPoly truncB(const Rat& g1, const Rat& g2, uint64_t p);

struct AData {
  uint64_t p = 0;
  unsigned ell = 1;
  Int q;
  std::vector<std::array<Rat, 2>> levels;  // D_p^k(alpha), k < ell
  std::vector<FpPoly> B;                   // B_k = truncB(levels[k])
  Int nu_inf;                              // deg A
  Int nu_1;                                // val_1 A
  // A = lead * prod P^M over pairwise coprime monic squarefree pieces P; every
  // irreducible factor of P has multiplicity M in A. exps[i][k] is the
  // multiplicity in B_k, so M = sum_k exps[i][k] p^k.
  std::vector<std::pair<FpPoly, Int>> factors;
  std::vector<std::vector<unsigned>> exps;
  uint64_t lead = 1;
  // Expanded A (only when deg A <= expand_limit)
  FpPoly expand(size_t expand_limit = 2000000) const;
};
AData build_A(const G2F1& g, uint64_t p);

struct GaloisResult {
  uint64_t p = 0;
  unsigned ell = 1;
  Int q;
  Int exact_order;
  Int conjectured_order;
  Int h;
  bool flag = false;
  unsigned e = 0;
  Rat index;  // conjectured / exact
  Int max_power;  // largest r with A an r-th power over F_q
};
GaloisResult galois_order(const G2F1& g, uint64_t p);
GaloisResult galois_order(const G2F1& g, const AData& a);

enum class GCase { Real, MTwo, General };
const char* to_string(GCase c);
struct ConjecturedG {
  GCase tag = GCase::Real;
  SubgroupD D;
  long m = 1;
};
ConjecturedG conjectured_G(const G2F1& g);

// Explicit r-th root R of A for r = (1 + p^e)/m in the flagged case, checked
// by comparing lead * R^r with the expanded A. nullopt when the flag does not
// hold or deg A exceeds expand_limit.
std::optional<bool> flagged_root_check(const G2F1& g, uint64_t p, size_t expand_limit = 20000);

struct MultiplicityReport {
  bool simple_ordinary_roots = true;  // roots outside {0, 1} of each B_k are simple
  bool digit_form = true;             // multiplicities are sums of distinct p^j
  bool flagged = false;
  bool flagged_divisible = true;      // multiplicities divisible by (1 + p^e)/m
  size_t factors = 0;
};
MultiplicityReport ordinary_root_multiplicity_check(const G2F1& g, uint64_t p);

// ---- symbolic certificates ------------------------------------------------

struct JPrimeData {
  std::vector<unsigned> Jprime;
  QPoly nu;         // p^{j_ell} + sum_{j in J'} p^j
  QPoly G;          // primitive gcd over Q[s] of nu_inf, nu_1, nu, p^ell - 1
  Int N;            // integer Bezout constant of the quotients
  bool empirical = false;
  bool admissible = true;  // h divides G * N
  QPoly g() const;  // G * N
};

struct TieChoice {
  unsigned j_ell = 0;
  unsigned c = 0;
  std::vector<unsigned> order;  // levels other than j_ell in increasing order
  std::vector<unsigned> J;
  std::vector<JPrimeData> rows;
  std::optional<Int> index_bound;  // nullopt: unbounded
};

struct SymbolicRow {
  long d = 1;
  long t = 1;
  long s_min = 0;  // valid for s > s_min
  unsigned ell = 1;
  unsigned e = 0;
  bool flag = false;
  QPoly p_of_s;
  std::vector<std::array<QPoly, 2>> digits;  // per level
  QPoly nu_inf, nu_1;
  std::vector<std::pair<QPoly, QPoly>> b_list;  // (deg B_k, val_1 B_k)
  std::vector<QPoly> b;                         // deg - val_1
  QPoly h_poly;
  QPoly gcd_col_G;  // gcd(nu_inf, nu_1, p^ell - 1) = G * N
  Int gcd_col_N;
  std::vector<TieChoice> choices;  // first one is the displayed one
  std::optional<Int> index_bound;  // max over choices, nullopt: unbounded
  bool empirical = false;

  // displayed quantities (first tie choice)
  QPoly lcm_nu() const;     // lcm over all J' of nu_{J'}
  QPoly lcm_g() const;      // lcm over admissible J' of g_{J'}
  QPoly gcd_col_over_h() const;
  QPoly lcm_g_over_h() const;
  std::string label() const;  // "p = 8s + 5"
};
SymbolicRow symbolic_certificate(const G2F1& g, long t);
std::vector<SymbolicRow> certificate_table(const G2F1& g);

// Text layout of the published tables (tab separated) and CSV.
enum class TableLayout { Nu, Ratio };  // Nu: lcm(nu_J') columns, Ratio: gcd/h columns
std::string format_table_text(const std::vector<SymbolicRow>& rows, TableLayout layout);
std::string format_table_csv(const std::vector<SymbolicRow>& rows, TableLayout layout);
std::vector<std::vector<std::string>> table_cells(const std::vector<SymbolicRow>& rows, TableLayout layout);

// ---- sweep ---------------------------------------------------------------

struct SweepCheck {
  uint64_t p = 0;
  bool coherent = true;  // symbolic row evaluated at s matches the numerics
  Int exact_order, conjectured_order;
};

struct SweepEntry {
  G2F1 g;
  std::vector<long> classes;
  std::vector<std::optional<Int>> bounds;  // per class
  std::optional<Int> max_bound;            // nullopt: some class unbounded
  bool passes = false;                     // every class has bound 1
  std::vector<SweepCheck> checks;
  bool numerics_ok = true;
};

struct SweepReport {
  long d = 0;
  std::vector<SweepEntry> entries;
  bool all_pass = true;
  std::optional<Int> worst;  // nullopt: unbounded somewhere
  bool numerics_ok = true;
};
// samples numeric primes per (pair, class) when samples > 0
SweepReport sweep_verify(long d, unsigned samples = 3, unsigned threads = 0);
std::vector<G2F1> sweep_pairs(long d);

}  // namespace hypermod

#endif
