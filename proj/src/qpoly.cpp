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

#include "hypermod/qpoly.hpp"

#include <algorithm>
#include <cstdlib>

#include "hypermod/errors.hpp"

namespace hypermod {

QPoly::QPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool QPoly::integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x.get_den() == 1; });
}

Rat QPoly::eval(const Rat& s) const {
  Rat r = 0;
  for (size_t k = c_.size(); k-- > 0;) r = r * s + c_[k];
  return r;
}

Int QPoly::eval_int(const Int& s) const {
  if (!integral()) throw PreconditionError("eval_int on a non-integral polynomial");
  Int r = 0;
  for (size_t k = c_.size(); k-- > 0;) r = r * s + Int(c_[k].get_num());
  return r;
}

int QPoly::eventual_sign() const { return c_.empty() ? 0 : sgn(c_.back()); }

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return QPoly(std::move(c));
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(c));
}

std::string QPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t k = c_.size(); k-- > 0;) {
    const Rat& c = c_[k];
    if (c == 0) continue;
    Rat a = abs(c);
    if (out.empty()) out = c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (k == 0 || a != 1) out += to_string(a);
    if (k >= 1) out += "s";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

bool eventually_less(const QPoly& a, const QPoly& b) { return (b - a).eventual_sign() > 0; }

QPoly eventual_pos(const QPoly& a) { return a.eventual_sign() > 0 ? a : QPoly(); }

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  std::vector<Rat> r = a.coeffs();
  if (a.deg() < b.deg()) return {QPoly(), a};
  std::vector<Rat> q(static_cast<size_t>(a.deg() - b.deg() + 1), Rat(0));
  const auto& bc = b.coeffs();
  size_t db = static_cast<size_t>(b.deg());
  for (size_t k = r.size(); k-- > db;) {
    Rat c = r[k] / bc.back();
    q[k - db] = c;
    if (c == 0) continue;
    for (size_t i = 0; i <= db; ++i) r[k - db + i] -= c * bc[i];
  }
  r.resize(db);
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly pow(const QPoly& a, unsigned e) {
  QPoly r = QPoly::constant(1);
  for (unsigned i = 0; i < e; ++i) r = r * a;
  return r;
}

QPoly monic_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  std::vector<Rat> c = a.coeffs();
  Rat l = c.back();
  for (auto& x : c) x /= l;
  return QPoly(std::move(c));
}

QPoly primitive(const QPoly& a) {
  if (a.is_zero()) return a;
  Int den = 1, g = 0;
  for (const auto& x : a.coeffs()) den = lcm(den, Int(x.get_den()));
  std::vector<Rat> c;
  for (const auto& x : a.coeffs()) c.emplace_back(x * den);
  for (const auto& x : c) g = gcd(g, Int(x.get_num()));
  if (c.back() < 0) g = -g;
  for (auto& x : c) x /= g;
  return QPoly(std::move(c));
}

QPoly gcd_all(const std::vector<QPoly>& xs) {
  QPoly g;
  for (const auto& x : xs) g = monic_gcd(g, x);
  return primitive(g);
}

QPoly lcm_primitive(const QPoly& a, const QPoly& b) {
  QPoly g = monic_gcd(a, b);
  return primitive(divmod(a * b, g).first);
}

Int int_ideal_const(const std::vector<QPoly>& polys, unsigned shift_degree) {
  long maxd = 0;
  std::vector<const QPoly*> used;
  for (const auto& f : polys) {
    if (f.is_zero()) continue;
    if (!f.integral()) throw PreconditionError("int_ideal_const needs integer polynomials");
    used.push_back(&f);
    maxd = std::max(maxd, f.deg());
  }
  if (used.empty()) return 0;
  size_t width = static_cast<size_t>(maxd) + shift_degree + 1;
  std::vector<std::vector<Int>> rows;
  for (const QPoly* f : used)
    for (unsigned j = 0; j <= shift_degree; ++j) {
      std::vector<Int> r(width, 0);
      for (size_t i = 0; i < f->coeffs().size(); ++i) r[i + j] = Int(f->coeffs()[i].get_num());
      rows.push_back(std::move(r));
    }
  // Euclidean elimination from the top column down
  size_t r0 = 0;
  for (size_t col = width; col-- > 1;) {
    for (;;) {
      std::vector<size_t> piv;
      for (size_t i = r0; i < rows.size(); ++i)
        if (rows[i][col] != 0) piv.push_back(i);
      if (piv.size() <= 1) {
        if (!piv.empty()) {
          std::swap(rows[r0], rows[piv[0]]);
          ++r0;
        }
        break;
      }
      size_t i0 = *std::min_element(piv.begin(), piv.end(), [&](size_t a, size_t b) {
        return abs(rows[a][col]) < abs(rows[b][col]);
      });
      for (size_t i : piv) {
        if (i == i0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[i0][col].get_mpz_t());
        for (size_t k = 0; k < width; ++k) rows[i][k] -= q * rows[i0][k];
      }
    }
  }
  Int g = 0;
  for (size_t i = r0; i < rows.size(); ++i) g = gcd(g, rows[i][0]);
  return abs(g);
}

}  // namespace hypermod
