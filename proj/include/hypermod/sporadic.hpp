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

// p-Lucas integer sequences (central binomial powers, Apery, Domb,
// Almkvist-Zudilin): truncations A_p, perfect-power and square-class
// classification, Galois orders and congruence-pattern sweeps.

#ifndef HYPERMOD_SPORADIC_HPP
#define HYPERMOD_SPORADIC_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hypermod/ffpoly.hpp"

namespace hypermod {

struct SporadicSeries {
  std::string name;
  std::function<Int(unsigned long)> coeff;  // exact a_n
  unsigned ode_order = 1;
  // Coefficient of theta^r in the operator (theta = x d/dx), low degree first.
  // Singular points are 0 and its roots.
  std::vector<long> theta_leading;
  // Candidate c(x) for A_p = c * B^2, integer coefficients low first.
  std::vector<std::vector<long>> twist_candidates;
};

// central2, central3, apery, domb, AZ
SporadicSeries builtin(const std::string& name);
std::vector<std::string> builtin_names();

std::vector<Int> coefficients(const SporadicSeries& s, size_t count);

// sum_{n < p} a_n x^n mod p
FpPoly truncation_Ap(const SporadicSeries& s, uint64_t p);
FpPoly truncation_Ap(const std::vector<Int>& coeffs, uint64_t p);

// a_{u + p v} = a_u a_v mod p for u < p, v <= V
bool p_lucas_check(const SporadicSeries& s, uint64_t p, unsigned V);
bool p_lucas_check(const std::vector<Int>& coeffs, uint64_t p, unsigned V);

enum class SquareTag { PerfectSquare, QuadraticTwist, NotSquare };
const char* to_string(SquareTag t);

struct SquareClass {
  uint64_t p = 0;
  SquareTag tag = SquareTag::NotSquare;
  std::optional<FpPoly> twist;  // c when tag == QuadraticTwist
  std::optional<FpPoly> B;      // A = B^2 or A = c B^2, normalized so B(0) = 1
  Int max_power;                // largest e with A = B^e up to the leading-coefficient class; 0 if A is constant
  unsigned max_ordinary_multiplicity = 0;
  bool multiplicity_bound = true;  // every ordinary root has multiplicity < ode_order
};

SquareClass classify_Ap(const SporadicSeries& s, uint64_t p);
SquareClass classify_Ap(const SporadicSeries& s, const FpPoly& A, const std::vector<std::vector<long>>& twist_candidates);

struct SporadicGalois {
  uint64_t p = 0;
  Int order;          // kummer_order(A_p, p)
  Int index;          // (p - 1) / order
  std::string group;  // "F_p^x", "squares" or "index k"
};
SporadicGalois galois_report_sporadic(const SporadicSeries& s, uint64_t p);
SporadicGalois galois_report_sporadic(const FpPoly& A);

// Square-root relations for the Apery series g = sqrt(f), h = sqrt(f / c),
// c = x^2 - 34x + 1, checked mod (p, x^N).
struct RelationCheck {
  std::string name;
  bool holds = false;
};
struct AperySqrtReport {
  uint64_t p = 0;
  size_t N = 0;
  SquareTag tag = SquareTag::NotSquare;
  bool intertwined = false;  // A_p = c B^2
  std::vector<RelationCheck> relations;
  bool all_hold = false;
};
AperySqrtReport apery_sqrt_relations(uint64_t p, size_t N);

// B_p for central3 against the truncation of 2F1((1/4, 1/4), (1); 64x) mod p.
bool clausen_check(uint64_t p);

struct PatternRow {
  uint64_t p = 0;
  long residue = 0;
  SquareTag tag = SquareTag::NotSquare;
  Int order;
  std::string group;
  bool lucas = true;
  bool multiplicity_bound = true;
};
struct PatternReport {
  std::string series;
  long modulus = 1;
  uint64_t p_max = 0;
  std::vector<PatternRow> rows;  // sorted by p
  // residue -> observed "tag/group" labels
  std::map<long, std::set<std::string>> observed;
  std::vector<long> inconsistent;
};
// odd primes p <= p_max not dividing the modulus
PatternReport congruence_pattern(const SporadicSeries& s, long modulus, uint64_t p_max, unsigned threads = 0);
std::string pattern_csv(const PatternReport& r);

}  // namespace hypermod

#endif
