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

// Elements of Q(zeta_d), the symmetry group D(alpha, beta) inside (Z/dZ)^x
// and the monodromy companion matrices.

#ifndef HYPERMOD_CYCLO_HPP
#define HYPERMOD_CYCLO_HPP

#include <string>
#include <vector>

#include "hypermod/hyperg.hpp"

namespace hypermod {

// Phi_d with integer coefficients, low degree first. Cached per d.
const std::vector<Int>& cyclotomic_poly(long d);

class CycElt {
 public:
  CycElt() = default;
  explicit CycElt(long d);  // zero
  static CycElt from_rat(long d, const Rat& c);
  static CycElt zeta(long d, long k);  // zeta_d^k
  static CycElt from_poly(long d, std::vector<Rat> c);  // sum c_i zeta^i

  long conductor() const { return d_; }
  const std::vector<Rat>& coeffs() const { return c_; }  // length phi(d)
  bool is_zero() const;

  friend CycElt operator+(const CycElt& a, const CycElt& b);
  friend CycElt operator-(const CycElt& a, const CycElt& b);
  friend CycElt operator*(const CycElt& a, const CycElt& b);
  CycElt operator-() const;
  friend bool operator==(const CycElt& a, const CycElt& b) { return a.d_ == b.d_ && a.c_ == b.c_; }
  friend bool operator!=(const CycElt& a, const CycElt& b) { return !(a == b); }

  std::string str() const;  // "1/2 + 3*z^2" in powers of z = zeta_d

 private:
  static CycElt reduce(long d, std::vector<Rat> c);
  long d_ = 1;
  std::vector<Rat> c_;
};

// zeta -> zeta^lam
CycElt galois_action(const CycElt& x, long lam);

struct SubgroupD {
  long d = 1;
  std::vector<long> elements;  // sorted representatives in [1, d) ({1} for d = 1)
  bool contains(long x) const;
};

SubgroupD D_group(const HParams& h);
bool fixed_by(const CycElt& x, const SubgroupD& D);
// min{e > 0 : p^e mod d in D}
unsigned residue_degree(const SubgroupD& D, uint64_t p);
bool is_real(const SubgroupD& D);

// The sign convention of the flag condition is configurable. MinusPower tests
// -p^e in D; InversePower tests p^{-e} in D. MinusPower is the default.
enum class FlagReading { MinusPower, InversePower };
struct PowerFlag {
  unsigned ell = 1;
  unsigned e = 0;  // ell / 2 when ell is even, else 0
  bool flag = false;
};
PowerFlag minus_power_in_D(const SubgroupD& D, uint64_t p, FlagReading reading = FlagReading::MinusPower);

using CycMatrix = std::vector<std::vector<CycElt>>;
struct Monodromy {
  CycMatrix A, B;
  std::vector<CycElt> a_coeffs, b_coeffs;  // monic char polys, low degree first, without the leading 1
};
// Companion matrices of prod (x - zeta^{d alpha_i}) and prod (x - zeta^{d beta_j}).
Monodromy monodromy_matrices(const HParams& h);

}  // namespace hypermod

#endif
