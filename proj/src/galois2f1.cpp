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

#include "hypermod/galois2f1.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "hypermod/errors.hpp"

namespace hypermod {

namespace {

Int pow_p(uint64_t p, unsigned k) { return ipow(Int(static_cast<unsigned long>(p)), k); }

std::array<Rat, 2> sorted2(const Rat& a, const Rat& b) {
  return a <= b ? std::array<Rat, 2>{a, b} : std::array<Rat, 2>{b, a};
}

bool is_integer(const Rat& x) { return x.get_den() == 1; }

}  // namespace

HParams G2F1::params() const { return HParams({alpha1, alpha2}, {Rat(1)}); }

std::string G2F1::str() const { return "(" + to_string(alpha1) + ", " + to_string(alpha2) + ")"; }

G2F1 make_g2f1(const Rat& a1, const Rat& a2) {
  for (const Rat& a : {a1, a2})
    if (a <= 0 || a >= 1) throw PreconditionError("2F1 parameters must lie in (0, 1), got " + to_string(a));
  G2F1 g;
  auto s = sorted2(a1, a2);
  g.alpha1 = s[0];
  g.alpha2 = s[1];
  g.d = common_denominator({a1, a2});
  g.m = Int(Rat(a1 + a2).get_den()).get_si();
  return g;
}

Normalization normalize(const Rat& a1, const Rat& a2) {
  for (const Rat& a : {a1, a2})
    if (is_integer(a) && a <= 0) throw PreconditionError("parameter " + to_string(a) + " lies in -N");
  Normalization n;
  n.original = {a1, a2};
  if (is_integer(a1) || is_integer(a2)) {
    n.binomial = true;
    n.binomial_exponent = is_integer(a1) ? a2 : a1;
    return n;
  }
  n.g = make_g2f1(frac1(a1), frac1(a2));
  n.shifted = sorted2(a1, a2) != std::array<Rat, 2>{n.g.alpha1, n.g.alpha2};
  return n;
}

FpPoly truncB(const Rat& g1, const Rat& g2, uint64_t p) {
  PrimeField F(p);
  uint64_t x1 = F.from_rat(g1), x2 = F.from_rat(g2);
  std::vector<uint64_t> c(p, 0);
  c[0] = 1;
  for (uint64_t r = 1; r < p; ++r) {
    uint64_t num = F.mul(F.add(x1, r - 1), F.add(x2, r - 1));
    if (num == 0) break;
    c[r] = F.mul(F.mul(c[r - 1], num), F.inv(F.mul(r, r)));
  }
  return FpPoly(F, std::move(c));
}

Bridge bridge(const Normalization& n, uint64_t p, size_t N) {
  if (n.binomial) throw PreconditionError("bridge needs non-integer parameters");
  Bridge b;
  b.p = p;
  PrimeField F(p);
  b.Atilde = FpPoly::constant(F, 1);
  std::array<Rat, 2> v = n.original;
  const std::array<Rat, 2> target{n.g.alpha1, n.g.alpha2};
  size_t pk = 1;
  while (sorted2(v[0], v[1]) != target) {
    if (b.steps >= 64) throw PreconditionError("Dwork orbit does not reach the normalized pair");
    if (pk < N) b.Atilde = mul_trunc(b.Atilde, truncB(v[0], v[1], p).expand(pk, N), N);
    v = {dwork(v[0], p), dwork(v[1], p)};
    ++b.steps;
    pk = pk >= N ? N : pk * p;
  }
  return b;
}

namespace {

FpPoly series_from_exact(const Rat& a1, const Rat& a2, uint64_t p, size_t N) {
  PrimeField F(p);
  std::vector<uint64_t> c;
  for (const Rat& h : h_exact_list(HParams({a1, a2}, {Rat(1)}), N)) c.push_back(F.from_rat(h));
  return FpPoly(F, std::move(c));
}

}  // namespace

bool bridge_holds(const Normalization& n, uint64_t p, size_t N) {
  Bridge b = bridge(n, p, N);
  FpPoly F = series_from_exact(n.original[0], n.original[1], p, N);
  FpPoly H0 = series_from_exact(n.g.alpha1, n.g.alpha2, p, N);
  size_t pk = 1;
  for (unsigned i = 0; i < b.steps && pk < N; ++i) pk *= p;
  // H0^{p^k} = H0(x^{p^k}) is 1 mod x^N once p^k >= N
  FpPoly rhs = pk >= N ? b.Atilde : mul_trunc(b.Atilde, H0.expand(pk, N), N);
  return F.truncate(N) == rhs.truncate(N);
}

BinomialGroup binomial_case(long a, long d, uint64_t p) {
  if (d < 1 || std::gcd(a, d) != 1) throw PreconditionError("binomial case needs gcd(a, d) = 1");
  if (d % static_cast<long>(p) == 0) throw PreconditionError("p divides d");
  BinomialGroup out;
  out.d = d;
  out.p = p;
  out.residue_part = cyclic_subgroup(static_cast<long>(p % static_cast<uint64_t>(d)), d);
  out.order = Int(d) * Int(static_cast<unsigned long>(out.residue_part.size()));
  return out;
}

// ---- A(x) --------------------------------------------------------------------

namespace {

// Adds a squarefree monic piece with exponent vector ev to a pairwise coprime family.
void refine(std::vector<std::pair<FpPoly, std::vector<unsigned>>>& items, FpPoly h, const std::vector<unsigned>& ev) {
  size_t n = items.size();
  for (size_t i = 0; i < n && h.deg() > 0; ++i) {
    FpPoly c = gcd(items[i].first, h);
    if (c.deg() <= 0) continue;
    std::vector<unsigned> sum = items[i].second;
    for (size_t k = 0; k < sum.size(); ++k) sum[k] += ev[k];
    FpPoly rest = items[i].first / c;
    h = h / c;
    if (rest.deg() > 0) {
      items[i].first = rest.monic();
      items.emplace_back(c.monic(), std::move(sum));
    } else {
      items[i].second = std::move(sum);
    }
  }
  if (h.deg() > 0) items.emplace_back(h.monic(), ev);
}

unsigned mult_at_one(FpPoly b) {
  const PrimeField& F = b.field();
  FpPoly x1(F, {F.neg(1), 1});
  unsigned m = 0;
  while (b.deg() > 0 && b.eval(1) == 0) {
    b = b / x1;
    ++m;
  }
  return m;
}

}  // namespace

AData build_A(const G2F1& g, uint64_t p) {
  if (g.d % static_cast<long>(p) == 0) throw PreconditionError("p divides d");
  AData a;
  a.p = p;
  const std::array<Rat, 2> root{g.alpha1, g.alpha2};
  std::array<Rat, 2> cur = root;
  for (;;) {
    a.levels.push_back(cur);
    cur = {dwork(cur[0], p), dwork(cur[1], p)};
    if (sorted2(cur[0], cur[1]) == root) break;
    if (a.levels.size() > static_cast<size_t>(g.d)) throw std::logic_error("Dwork orbit longer than d");
  }
  a.ell = static_cast<unsigned>(a.levels.size());
  a.q = pow_p(p, a.ell);
  PrimeField F(p);
  std::vector<std::pair<FpPoly, std::vector<unsigned>>> items;
  uint64_t lead = 1;
  a.nu_inf = 0;
  a.nu_1 = 0;
  for (unsigned k = 0; k < a.ell; ++k) {
    FpPoly b = truncB(a.levels[k][0], a.levels[k][1], p);
    Int pk = pow_p(p, k);
    a.nu_inf += pk * Int(b.deg());
    a.nu_1 += pk * Int(mult_at_one(b));
    lead = F.mul(lead, b.lead());
    for (auto& [piece, e] : squarefree_decomposition(b)) {
      std::vector<unsigned> ev(a.ell, 0);
      ev[k] = static_cast<unsigned>(e);
      refine(items, piece, ev);
    }
    a.B.push_back(std::move(b));
  }
  a.lead = lead;
  for (auto& [piece, ev] : items) {
    Int M = 0;
    for (unsigned k = 0; k < a.ell; ++k) M += Int(ev[k]) * pow_p(p, k);
    a.factors.emplace_back(piece, M);
    a.exps.push_back(ev);
  }
  return a;
}

FpPoly AData::expand(size_t expand_limit) const {
  if (nu_inf > Int(static_cast<unsigned long>(expand_limit))) throw PreconditionError("deg A exceeds the expansion limit");
  PrimeField F(p);
  FpPoly A = FpPoly::constant(F, 1);
  size_t pk = 1;
  for (const auto& b : B) {
    A *= b.expand(pk);
    pk *= p;
  }
  return A;
}

GaloisResult galois_order(const G2F1& g, const AData& a) {
  GaloisResult r;
  r.p = a.p;
  r.ell = a.ell;
  r.q = a.q;
  std::vector<Int> mults;
  for (const auto& f : a.factors) mults.push_back(f.second);
  PrimeField F(a.p);
  Int ord_c = element_order(F, a.lead);
  r.exact_order = kummer_order_from(mults, ord_c, a.q);
  r.max_power = perfect_power_from(mults, ord_c, a.q).max_exponent;
  PowerFlag pf = minus_power_in_D(D_group(g.params()), a.p);
  if (pf.ell != a.ell) throw std::logic_error("residue degree and Dwork period disagree");
  r.flag = pf.flag;
  r.e = pf.e;
  if (r.flag) {
    Int pe = pow_p(a.p, r.e);
    if ((pe + 1) % g.m != 0) throw std::logic_error("m does not divide p^e + 1");
    r.h = (pe + 1) / g.m;
    r.conjectured_order = (pe - 1) * g.m;
  } else {
    r.h = 1;
    r.conjectured_order = a.q - 1;
  }
  r.index = Rat(r.conjectured_order) / Rat(r.exact_order);
  return r;
}

GaloisResult galois_order(const G2F1& g, uint64_t p) { return galois_order(g, build_A(g, p)); }

const char* to_string(GCase c) {
  switch (c) {
    case GCase::Real: return "K = K+";
    case GCase::MTwo: return "K != K+, m = 2";
    case GCase::General: return "K != K+, m != 2";
  }
  return "?";
}

ConjecturedG conjectured_G(const G2F1& g) {
  ConjecturedG c;
  c.D = D_group(g.params());
  c.m = g.m;
  if (is_real(c.D)) c.tag = GCase::Real;
  else c.tag = g.m == 2 ? GCase::MTwo : GCase::General;
  return c;
}

std::optional<bool> flagged_root_check(const G2F1& g, uint64_t p, size_t expand_limit) {
  AData a = build_A(g, p);
  GaloisResult res = galois_order(g, a);
  if (!res.flag) return std::nullopt;
  if (a.nu_inf > Int(static_cast<unsigned long>(expand_limit))) return std::nullopt;
  const Int& r = res.h;
  PrimeField F(p);
  FpPoly R = FpPoly::constant(F, 1);
  for (const auto& [piece, M] : a.factors) {
    if (M % r != 0) return false;
    R *= pow(piece, Int(M / r).get_ui());
  }
  // the leading coefficient must be an r-th power in F_q
  Int qm1 = a.q - 1;
  if (F.pow(a.lead, qm1 / gcd(r, qm1)) != 1) return false;
  return pow(R, r.get_ui()).scale(a.lead) == a.expand(expand_limit);
}

MultiplicityReport ordinary_root_multiplicity_check(const G2F1& g, uint64_t p) {
  AData a = build_A(g, p);
  GaloisResult res = galois_order(g, a);
  MultiplicityReport rep;
  PrimeField F(p);
  FpPoly x1(F, {F.neg(1), 1});
  for (const auto& b : a.B)
    for (const auto& [piece, e] : squarefree_decomposition(b))
      if (e > 1 && piece != x1) rep.simple_ordinary_roots = false;
  Int P(static_cast<unsigned long>(p));
  for (size_t i = 0; i < a.factors.size(); ++i) {
    const auto& [piece, M] = a.factors[i];
    if (piece != x1) {
      Int rest = M;
      for (unsigned k = 0; k < a.ell; ++k) {
        Int digit = rest % P;
        rest /= P;
        bool divides = (a.B[k] % piece).is_zero();
        if (digit > 1 || (digit == 1) != divides) rep.digit_form = false;
      }
      if (rest != 0) rep.digit_form = false;
    }
  }
  rep.flagged = res.flag;
  if (res.flag)
    for (const auto& f : a.factors)
      if (f.second % res.h != 0) rep.flagged_divisible = false;
  rep.factors = a.factors.size();
  return rep;
}

// ---- certificates -------------------------------------------------------------

namespace {

Int content(const QPoly& a) {
  Int g = 0;
  for (const auto& c : a.coeffs()) g = gcd(g, Int(c.get_num()));
  return g;
}

// lcm in Z[s] of integer polynomials with positive leading coefficients
QPoly lcm_int(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  Int c = lcm(content(a), content(b));
  return lcm_primitive(primitive(a), primitive(b)) * QPoly::constant(Rat(c));
}

struct Bound {
  QPoly G;
  Int N;
  bool empirical = false;
};

Bound bound_of(const std::vector<QPoly>& polys_in, long d, long t) {
  std::vector<QPoly> polys;
  for (const auto& f : polys_in)
    if (!f.is_zero()) polys.push_back(f);
  Bound b;
  b.G = gcd_all(polys);
  std::vector<QPoly> qs;
  for (const auto& f : polys) qs.push_back(divmod(f, b.G).first);
  b.N = int_ideal_const(qs, 6);
  if (b.N == 0) b.N = int_ideal_const(qs, 16);
  if (b.N == 0) {
    // gcd of the values over the first 25 primes of the class
    b.empirical = true;
    unsigned used = 0;
    for (Int s = d + 1; used < 25; ++s) {
      Int p = Int(d) * s + t;
      if (!is_prime(p.get_ui())) continue;
      Int v = 0;
      for (const auto& f : polys) v = gcd(v, f.eval_int(s));
      b.N = gcd(b.N, v / b.G.eval_int(s));
      ++used;
    }
  }
  return b;
}

std::vector<std::vector<unsigned>> subsets(const std::vector<unsigned>& J) {
  // by size, then lexicographic in the order of J
  std::vector<std::vector<unsigned>> out;
  size_t n = J.size();
  for (size_t r = 0; r <= n; ++r) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(r), true);
    do {
      std::vector<unsigned> s;
      for (size_t i = 0; i < n; ++i)
        if (pick[i]) s.push_back(J[i]);
      out.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

}  // namespace

QPoly JPrimeData::g() const { return G * QPoly::constant(Rat(N)); }

SymbolicRow symbolic_certificate(const G2F1& g, long t) {
  const long d = g.d;
  if (t < 1 || t >= d || std::gcd(t, d) != 1) throw PreconditionError("residue class needs gcd(t, d) = 1");
  SymbolicRow row;
  row.d = d;
  row.t = t;
  row.s_min = d;
  row.p_of_s = QPoly::linear(d, t);
  const long delta = modinv_signed(t, d);
  const std::array<Rat, 2> root{g.alpha1, g.alpha2};
  std::vector<std::array<Rat, 2>> levels;
  std::array<Rat, 2> cur = root;
  for (;;) {
    levels.push_back(cur);
    cur = {frac1(cur[0] * delta), frac1(cur[1] * delta)};
    if (sorted2(cur[0], cur[1]) == root) break;
  }
  row.ell = static_cast<unsigned>(levels.size());
  std::vector<QPoly> pw{QPoly::constant(1)};
  for (unsigned k = 0; k < row.ell; ++k) pw.push_back(pw.back() * row.p_of_s);
  for (unsigned k = 0; k < row.ell; ++k) {
    QPoly x = QPoly::from_lin(gamma_poly(levels[k][0], d, t));
    QPoly y = QPoly::from_lin(gamma_poly(levels[k][1], d, t));
    row.digits.push_back({x, y});
    QPoly deg = eventually_less(y, x) ? y : x;
    QPoly v1 = eventual_pos(x + y - row.p_of_s + QPoly::constant(1));
    row.b_list.emplace_back(deg, v1);
    row.b.push_back(deg - v1);
    row.nu_inf = row.nu_inf + deg * pw[k];
    row.nu_1 = row.nu_1 + v1 * pw[k];
  }
  QPoly qm1 = pw[row.ell] - QPoly::constant(1);

  SubgroupD D = D_group(g.params());
  if (row.ell % 2 == 0) {
    row.e = row.ell / 2;
    long te = static_cast<long>(powmod(static_cast<uint64_t>(t), row.e, static_cast<uint64_t>(d)));
    row.flag = D.contains(-te);
  }
  row.h_poly = row.flag ? (pw[row.e] + QPoly::constant(1)) * QPoly::constant(Rat(1, g.m)) : QPoly::constant(1);
  if (!row.h_poly.integral()) throw std::logic_error("h is not an integer polynomial");

  Bound col = bound_of({row.nu_inf, row.nu_1, qm1}, d, t);
  row.gcd_col_G = col.G;
  row.gcd_col_N = col.N;
  row.empirical = col.empirical;

  // j_ell ranges over the levels with maximal b; the largest index comes first
  auto less_b = [&](unsigned i, unsigned j) {
    if (row.b[i] == row.b[j]) return i < j;
    return eventually_less(row.b[i], row.b[j]);
  };
  std::vector<unsigned> all(row.ell);
  std::iota(all.begin(), all.end(), 0u);
  std::sort(all.begin(), all.end(), less_b);
  std::vector<unsigned> cands;
  for (auto it = all.rbegin(); it != all.rend() && row.b[*it] == row.b[all.back()]; ++it) cands.push_back(*it);

  bool unbounded = false;
  Int worst = 0;
  for (unsigned jl : cands) {
    TieChoice ch;
    ch.j_ell = jl;
    for (unsigned k : all)
      if (k != jl) ch.order.push_back(k);
    QPoly acc;
    for (unsigned c = 0; c < ch.order.size(); ++c) {
      QPoly next = acc + row.b[ch.order[c]];
      if (!eventually_less(next, row.b[jl])) break;
      acc = next;
      ch.c = c + 1;
    }
    ch.J.assign(ch.order.begin() + ch.c, ch.order.end());
    bool ch_unbounded = false;
    Int L = 1;
    for (auto& Jp : subsets(ch.J)) {
      JPrimeData jd;
      jd.Jprime = Jp;
      jd.nu = pw[jl];
      for (unsigned j : Jp) jd.nu = jd.nu + pw[j];
      Bound b = bound_of({row.nu_inf, row.nu_1, jd.nu, qm1}, d, t);
      jd.G = b.G;
      jd.N = b.N;
      jd.empirical = b.empirical;
      row.empirical = row.empirical || b.empirical;
      auto [quot, rem] = divmod(jd.G, row.h_poly);
      if (!rem.is_zero()) {
        jd.admissible = false;
      } else if (!quot.is_constant()) {
        ch_unbounded = true;
      } else {
        Rat v = quot.coeff(0) * Rat(jd.N);
        if (v.get_den() != 1) jd.admissible = false;
        else L = lcm(L, Int(v.get_num()));
      }
      ch.rows.push_back(std::move(jd));
    }
    if (ch_unbounded) {
      unbounded = true;
    } else {
      ch.index_bound = L;
      worst = std::max(worst, L);
    }
    row.choices.push_back(std::move(ch));
  }
  if (!unbounded) row.index_bound = worst;
  return row;
}

QPoly SymbolicRow::lcm_nu() const {
  QPoly l = QPoly::constant(1);
  for (const auto& r : choices.front().rows) l = lcm_int(l, r.nu);
  return l;
}

QPoly SymbolicRow::lcm_g() const {
  QPoly l = QPoly::constant(1);
  for (const auto& r : choices.front().rows)
    if (r.admissible) l = lcm_int(l, r.g());
  return l;
}

QPoly SymbolicRow::gcd_col_over_h() const {
  return divmod(gcd_col_G * QPoly::constant(Rat(gcd_col_N)), h_poly).first;
}

QPoly SymbolicRow::lcm_g_over_h() const { return divmod(lcm_g(), h_poly).first; }

std::string SymbolicRow::label() const { return "p = " + std::to_string(d) + "s + " + std::to_string(t); }

std::vector<SymbolicRow> certificate_table(const G2F1& g) {
  std::vector<SymbolicRow> rows;
  for (long t = 1; t < g.d; ++t)
    if (std::gcd(t, g.d) == 1) rows.push_back(symbolic_certificate(g, t));
  return rows;
}

std::vector<std::vector<std::string>> table_cells(const std::vector<SymbolicRow>& rows, TableLayout layout) {
  std::vector<std::vector<std::string>> out;
  for (const auto& r : rows) {
    std::vector<std::string> c{r.label(), std::to_string(r.ell), r.ell % 2 ? "-" : (r.flag ? "yes" : "no")};
    if (layout == TableLayout::Nu) {
      for (const QPoly* x : {&r.nu_inf, &r.nu_1}) c.push_back(x->str());
      c.push_back(r.lcm_nu().str());
      c.push_back(r.lcm_g().str());
    } else {
      c.push_back(r.gcd_col_over_h().str());
      c.push_back(r.lcm_g_over_h().str());
    }
    c.push_back(r.h_poly.str());
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

std::string join(const std::vector<std::string>& cells, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < cells.size(); ++i) s += (i ? sep : "") + cells[i];
  return s;
}

}  // namespace

std::string format_table_text(const std::vector<SymbolicRow>& rows, TableLayout layout) {
  std::vector<std::string> head{"", "ℓ", "-p^(ℓ/2) ∈ D?"};
  if (layout == TableLayout::Nu) head.insert(head.end(), {"ν_∞", "ν_1", "lcm(ν_J')", "lcm(g_J')", "h"});
  else head.insert(head.end(), {"gcd(ν_∞, ν_1, p^ℓ - 1)/h", "lcm(g_J')/h", "h"});
  std::string out = join(head, "\t") + "\n";
  for (const auto& c : table_cells(rows, layout)) out += join(c, "\t") + "\n";
  return out;
}

std::string format_table_csv(const std::vector<SymbolicRow>& rows, TableLayout layout) {
  std::vector<std::string> head{"class", "ell", "flag"};
  if (layout == TableLayout::Nu) head.insert(head.end(), {"nu_inf", "nu_1", "lcm_nu_J", "lcm_g_J", "h"});
  else head.insert(head.end(), {"gcd_over_h", "lcm_g_over_h", "h"});
  std::string out = join(head, ",") + "\n";
  for (const auto& c : table_cells(rows, layout)) out += join(c, ",") + "\n";
  return out;
}

// ---- sweep ----------------------------------------------------------------------

std::vector<G2F1> sweep_pairs(long d) {
  if (d < 2) throw PreconditionError("sweep needs d >= 2");
  std::vector<G2F1> out;
  for (long a1 = 1; a1 < d; ++a1)
    for (long a2 = a1; a2 < d; ++a2) {
      long d1 = d / std::gcd(a1, d), d2 = d / std::gcd(a2, d);
      if (std::lcm(d1, d2) != d) continue;
      out.push_back(make_g2f1(make_rat(a1, d), make_rat(a2, d)));
    }
  return out;
}

namespace {

SweepEntry sweep_one(const G2F1& g, unsigned samples) {
  SweepEntry e;
  e.g = g;
  e.max_bound = Int(1);
  for (long t = 1; t < g.d; ++t) {
    if (std::gcd(t, g.d) != 1) continue;
    SymbolicRow row = symbolic_certificate(g, t);
    e.classes.push_back(t);
    e.bounds.push_back(row.index_bound);
    if (!row.index_bound) e.max_bound.reset();
    else if (e.max_bound) e.max_bound = std::max(*e.max_bound, *row.index_bound);
    unsigned used = 0;
    for (long s = g.d + 1; used < samples; ++s) {
      uint64_t p = static_cast<uint64_t>(g.d * s + t);
      if (!is_prime(p)) continue;
      ++used;
      AData a = build_A(g, p);
      GaloisResult res = galois_order(g, a);
      SweepCheck c;
      c.p = p;
      c.exact_order = res.exact_order;
      c.conjectured_order = res.conjectured_order;
      Int S(s);
      c.coherent = row.ell == a.ell && row.flag == res.flag && row.nu_inf.eval_int(S) == a.nu_inf &&
                   row.nu_1.eval_int(S) == a.nu_1 && row.h_poly.eval_int(S) == res.h &&
                   res.conjectured_order % res.exact_order == 0;
      if (c.coherent && row.index_bound) c.coherent = *row.index_bound % (res.conjectured_order / res.exact_order) == 0;
      if (!c.coherent) e.numerics_ok = false;
      e.checks.push_back(std::move(c));
    }
  }
  e.passes = e.max_bound && *e.max_bound == 1;
  return e;
}

}  // namespace

SweepReport sweep_verify(long d, unsigned samples, unsigned threads) {
  SweepReport rep;
  rep.d = d;
  std::vector<G2F1> pairs = sweep_pairs(d);
  rep.entries.resize(pairs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<size_t>(pairs.size(), 1)));
  std::atomic<size_t> next{0};
  std::vector<std::exception_ptr> errors(pairs.size());
  auto work = [&] {
    for (size_t i; (i = next.fetch_add(1)) < pairs.size();) {
      try {
        rep.entries[i] = sweep_one(pairs[i], samples);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  rep.worst = Int(1);
  for (const auto& e : rep.entries) {
    rep.all_pass = rep.all_pass && e.passes;
    rep.numerics_ok = rep.numerics_ok && e.numerics_ok;
    if (!e.max_bound) rep.worst.reset();
    else if (rep.worst) rep.worst = std::max(*rep.worst, *e.max_bound);
  }
  return rep;
}

}  // namespace hypermod
