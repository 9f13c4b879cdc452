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

#include "hypermod/modp_basis.hpp"

#include <algorithm>

#include "hypermod/errors.hpp"

namespace hypermod {

namespace {

void check_prime(const HParams& h, uint64_t p) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  if (h.d() % static_cast<long>(p) == 0) throw PreconditionError("p divides the parameter denominator");
}

}  // namespace

std::vector<std::pair<uint64_t, bool>> CircleColoring::cyclic_order() const {
  std::vector<std::pair<uint64_t, bool>> pts;
  for (auto g : greens) pts.emplace_back(2 * g + 1, true);
  for (auto y : yellows) pts.emplace_back(2 * y, false);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (auto& [pos, green] : pts) pos = green ? (pos - 1) / 2 : pos / 2;
  return pts;
}

CircleColoring coloring(const HParams& h, uint64_t p) {
  check_prime(h, p);
  CircleColoring c;
  c.p = p;
  PrimeField F(p);
  for (const auto& a : h.alpha()) c.greens.push_back(F.neg(F.from_rat(a)));
  for (const auto& b : h.beta()) c.yellows.push_back(F.sub(F.one(), F.from_rat(b)));
  return c;
}

std::map<uint64_t, uint64_t> T_p_set(const HParams& h, uint64_t p) {
  auto pts = coloring(h, p).cyclic_order();
  std::map<uint64_t, uint64_t> out;
  const size_t m = pts.size();
  for (size_t i = 0; i < m; ++i) {
    if (pts[i].second) continue;
    const auto& nx = pts[(i + 1) % m];
    if (!nx.second) continue;
    uint64_t t = pts[i].first, g = nx.first;
    out[t] = (g >= t ? g : g + p) + 1;
  }
  return out;
}

unsigned p_interlacing_number(const HParams& h, uint64_t p) { return static_cast<unsigned>(T_p_set(h, p).size()); }

PrimeField::Elem A_mod(const HParams& h, const PrimeField& F, uint64_t k) {
  auto acc = F.one();
  auto kk = F.from_int(Int(static_cast<unsigned long>(k)));
  for (const auto& a : h.alpha()) acc = F.mul(acc, F.add(kk, F.from_rat(a)));
  return acc;
}

PrimeField::Elem B_mod(const HParams& h, const PrimeField& F, uint64_t k) {
  auto acc = F.one();
  auto kk = F.from_int(Int(static_cast<unsigned long>(k)));
  for (const auto& b : h.beta()) acc = F.mul(acc, F.sub(F.add(kk, F.from_rat(b)), F.one()));
  return acc;
}

PrimeField::Elem unit_part_mod(const Rat& x, const PrimeField& F) {
  if (x == 0) throw PreconditionError("unit part of zero");
  long v = vp(x, F.p());
  Rat pv(ipow(Int(static_cast<unsigned long>(F.p())), static_cast<unsigned long>(std::abs(v))));
  return F.from_rat(v >= 0 ? Rat(x / pv) : Rat(x * pv));
}

FpPoly basis_poly(const HParams& h, uint64_t p, uint64_t t) {
  auto T = T_p_set(h, p);
  auto it = T.find(t);
  if (it == T.end()) throw PreconditionError(std::to_string(t) + " is not in T_p");
  PrimeField F(p);
  std::vector<uint64_t> c(it->second, 0);
  c[t] = unit_part_mod(h_exact(h, t), F);
  for (uint64_t k = t; k + 1 < it->second; ++k) c[k + 1] = F.mul(c[k], F.mul(A_mod(h, F, k), F.inv(B_mod(h, F, k + 1))));
  return FpPoly(F, std::move(c));
}

SolutionBasis solution_basis(const HParams& h, uint64_t p) {
  check_prime(h, p);
  if (p <= h.n()) throw PreconditionError("solution basis needs p > n");
  SolutionBasis out;
  out.p = p;
  for (const auto& [t, kt] : T_p_set(h, p)) out.entries.push_back({t, kt, basis_poly(h, p, t)});
  return out;
}

FpPoly apply_operator(const HParams& h, const FpPoly& f) {
  const PrimeField& F = f.field();
  std::vector<uint64_t> out(f.size() + 1, 0);
  for (size_t k = 0; k < f.size(); ++k) {
    auto c = f.coeff(k);
    if (c == 0) continue;
    out[k] = F.add(out[k], F.mul(B_mod(h, F, k), c));
    out[k + 1] = F.sub(out[k + 1], F.mul(A_mod(h, F, k), c));
  }
  return FpPoly(F, std::move(out));
}

std::set<uint64_t> S_p_set(const HParams& h, uint64_t p) {
  auto col = coloring(h, p);
  std::set<uint64_t> out;
  for (auto y : col.yellows)
    if (vp_hk(h, p, static_cast<unsigned long>(y)) == 0) out.insert(y);
  return out;
}

unsigned dim_for_class(const HParams& h, long t) {
  long d = h.d();
  long delta = d == 1 ? 1 : modinv_signed(mod_floor(t, d), d);
  struct Pt {
    Rat v;
    bool alpha;
  };
  std::vector<Pt> pts;
  for (const auto& a : h.alpha()) pts.push_back({Rat(delta) * a, true});
  for (const auto& b : h.beta()) pts.push_back({Rat(delta) * b, false});
  // Christol order; an alpha equal to a beta comes first (its residue is one below)
  std::sort(pts.begin(), pts.end(), [](const Pt& x, const Pt& y) {
    Rat fx = frac1(x.v), fy = frac1(y.v);
    if (fx != fy) return fx < fy;
    if (x.v != y.v) return x.v > y.v;
    return x.alpha && !y.alpha;
  });
  // M rises at alpha points and falls at beta points; local minima of the
  // cyclic M sequence are the beta -> alpha transitions.
  unsigned count = 0;
  for (size_t i = 0; i < pts.size(); ++i)
    if (!pts[i].alpha && pts[(i + 1) % pts.size()].alpha) ++count;
  return count;
}

std::map<long, unsigned> dim_table(const HParams& h) {
  std::map<long, unsigned> out;
  for (long t : h.lambdas()) out[t] = dim_for_class(h, t);
  return out;
}

}  // namespace hypermod
