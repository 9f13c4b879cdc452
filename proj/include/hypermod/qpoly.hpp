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

// Polynomials in one variable s over Q, used for the per-class certificates.

#ifndef HYPERMOD_QPOLY_HPP
#define HYPERMOD_QPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "hypermod/arith_core.hpp"

namespace hypermod {

class QPoly {
 public:
  QPoly() = default;
  QPoly(std::vector<Rat> c);  // low degree first
  static QPoly constant(const Rat& c) { return QPoly(std::vector<Rat>{c}); }
  static QPoly from_lin(const LinPoly& l) { return QPoly({Rat(l.constant), Rat(l.slope)}); }
  static QPoly s() { return QPoly({Rat(0), Rat(1)}); }
  // d*s + t
  static QPoly linear(long d, long t) { return QPoly({Rat(t), Rat(d)}); }

  const std::vector<Rat>& coeffs() const { return c_; }
  long deg() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rat coeff(size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }
  bool integral() const;

  Rat eval(const Rat& s) const;
  Int eval_int(const Int& s) const;  // throws unless integral

  // Sign of p(s) for all large s.
  int eventual_sign() const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  std::string str() const;  // "8s^2 + 10s + 3"

 private:
  void trim();
  std::vector<Rat> c_;
};

// Eventual comparison: a < b for all large s.
bool eventually_less(const QPoly& a, const QPoly& b);
// max(0, a) for large s
QPoly eventual_pos(const QPoly& a);

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly pow(const QPoly& a, unsigned e);
QPoly monic_gcd(QPoly a, QPoly b);
QPoly gcd_all(const std::vector<QPoly>& xs);  // primitive, positive leading coefficient
// Integer coefficients with content 1 and positive leading coefficient.
QPoly primitive(const QPoly& a);
QPoly lcm_primitive(const QPoly& a, const QPoly& b);

// Smallest positive integer reached by an integer combination sum_i c_i(s) f_i(s)
// with deg c_i <= shift_degree, found by integer row reduction of the lattice
// spanned by the coefficient vectors of s^j f_i. 0 when the span holds no
// nonzero constant.
Int int_ideal_const(const std::vector<QPoly>& polys, unsigned shift_degree);

}  // namespace hypermod

#endif
