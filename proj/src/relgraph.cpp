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

#include "hypermod/relgraph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "hypermod/errors.hpp"
#include "hypermod/modp_basis.hpp"

namespace hypermod {

namespace {

constexpr size_t kMaxVertices = 20000;

std::vector<Rat> scaled(const std::vector<Rat>& v, long m) {
  std::vector<Rat> out;
  for (const auto& x : v) out.push_back(x * m);
  return out;
}

// Delta^k classes of the root, k in [0, ell)
int level_of(const HParams& root, const HParams& v, long delta, unsigned ell) {
  long d = root.d();
  long m = 1;
  for (unsigned k = 0; k < ell; ++k) {
    if (same_classes_mod1(v.alpha(), scaled(root.alpha(), m)) && same_classes_mod1(v.beta(), scaled(root.beta(), m)))
      return static_cast<int>(k);
    m = mod_floor(m * delta, d);
  }
  return -1;
}

bool numerator_divisible(const HParams& v, uint64_t p) {
  auto check = [&](const std::vector<Rat>& xs) {
    for (const auto& x : xs)
      if (vp(Int(dwork(x, p).get_num()), p) > 0) return true;
    return false;
  };
  return check(v.alpha()) || check(v.beta());
}

// Vertices are multisets: alpha sorted, beta sorted with the trailing 1 kept last.
HParams canonical(std::vector<Rat> a, std::vector<Rat> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end() - 1);
  return HParams::from_full(std::move(a), std::move(b));
}

void check_graph_prime(const HParams& h, uint64_t p) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  if (h.d() % static_cast<long>(p) == 0) throw PreconditionError("p divides the parameter denominator");
  if (p <= h.n()) throw PreconditionError("relation graph needs p > n");
}

}  // namespace

size_t RelGraph::index_of(const HParams& v) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == v) return i;
  throw NotFoundError("vertex " + v.str() + " not in graph");
}

bool RelGraph::leveled() const {
  return std::all_of(level.begin(), level.end(), [](int l) { return l >= 0; });
}

Rat graph_bound(const HParams& h) {
  Rat m = 0;
  for (const auto& a : h.alpha()) m = std::max(m, Rat(abs(a) + 1));
  for (const auto& b : h.beta()) m = std::max(m, Rat(abs(b) + 1));
  return 2 * h.d() * m;
}

RelGraph build_graph(const HParams& h, uint64_t p) {
  check_graph_prime(h, p);
  RelGraph g;
  g.p = p;
  std::map<HParams, size_t> index;
  index[canonical(h.alpha(), h.beta())] = 0;
  g.vertices.push_back(h);
  g.out.emplace_back();
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    HParams v = g.vertices[i];
    auto T = T_p_set(v, p);
    for (auto s : S_p_set(v, p)) {
      // a unit h_s with no green before the next yellow: no truncation f_s exists
      if (!T.count(s))
        throw PreconditionError("no truncation polynomial for s=" + std::to_string(s) + " at vertex " + v.str());
      HParams w = canonical(dwork_r(v.alpha(), p, s), dwork_r(v.beta(), p, s));
      auto [it, fresh] = index.emplace(w, g.vertices.size());
      if (fresh) {
        if (g.vertices.size() >= kMaxVertices) throw PreconditionError("relation graph exceeds vertex limit");
        g.vertices.push_back(w);
        g.out.emplace_back();
      }
      g.out[i].push_back(g.edges.size());
      g.edges.push_back({i, it->second, s, basis_poly(v, p, s)});
    }
  }
  const size_t n = g.vertices.size();

  long d = h.d();
  long delta = d == 1 ? 1 : modinv_signed(mod_floor(static_cast<long>(p % static_cast<uint64_t>(d)), d), d);
  g.ell = ell_p_params(h.alpha(), h.beta(), p);
  for (const auto& v : g.vertices) g.level.push_back(level_of(h, v, delta, g.ell));
  for (size_t i = 0; i < n; ++i)
    if (numerator_divisible(g.vertices[i], p)) g.numerator_flags.push_back(i);

  // v lies on a cycle iff v is reachable from one of its successors
  std::vector<bool> on_cycle(n, false);
  for (size_t v = 0; v < n; ++v) {
    std::vector<bool> seen(n, false);
    std::deque<size_t> queue;
    for (auto e : g.out[v]) queue.push_back(g.edges[e].dst);
    while (!queue.empty() && !on_cycle[v]) {
      size_t u = queue.front();
      queue.pop_front();
      if (seen[u]) continue;
      seen[u] = true;
      if (u == v) on_cycle[v] = true;
      for (auto e : g.out[u]) queue.push_back(g.edges[e].dst);
    }
  }
  g.cycle_reach = on_cycle;
  std::deque<size_t> queue;
  for (size_t v = 0; v < n; ++v)
    if (on_cycle[v]) queue.push_back(v);
  while (!queue.empty()) {
    size_t u = queue.front();
    queue.pop_front();
    for (auto e : g.out[u]) {
      size_t w = g.edges[e].dst;
      if (!g.cycle_reach[w]) {
        g.cycle_reach[w] = true;
        queue.push_back(w);
      }
    }
  }

  g.widths.assign(g.ell, 0);
  for (size_t v = 0; v < n; ++v)
    if (g.cycle_reach[v] && g.level[v] >= 0) ++g.widths[static_cast<size_t>(g.level[v])];
  g.width = *std::min_element(g.widths.begin(), g.widths.end());
  g.empirical = Rat(static_cast<unsigned long>(p)) <= graph_bound(h);
  return g;
}

unsigned graph_width(const RelGraph& g) { return g.width; }

FpPoly series_mod_p(const RelGraph& g, size_t vertex, size_t N) {
  PrimeField F(g.p);
  std::map<std::pair<size_t, size_t>, FpPoly> memo;
  auto rec = [&](auto&& self, size_t v, size_t n) -> FpPoly {
    if (n == 0) return FpPoly(F);
    if (n == 1) return FpPoly::constant(F, F.one());
    auto key = std::make_pair(v, n);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    size_t m = (n + g.p - 1) / g.p;
    FpPoly acc(F);
    for (auto e : g.out[v]) {
      const auto& edge = g.edges[e];
      acc += mul_trunc(edge.label, self(self, edge.dst, m).expand(g.p, n), n);
    }
    memo.emplace(key, acc);
    return acc;
  };
  return rec(rec, vertex, N);
}

FpPoly series_mod_p(const HParams& h, uint64_t p, size_t N) {
  if (reducible_mod_p(h, p).status == ReductionStatus::Divergent)
    throw PreconditionError(h.str() + " does not reduce mod " + std::to_string(p));
  return series_mod_p(build_graph(h, p), 0, N);
}

size_t FrobModule::dim_level(int k) const { return static_cast<size_t>(std::count(level.begin(), level.end(), k)); }

FrobModule frobenius_module(const RelGraph& g) {
  FrobModule fm;
  fm.p = g.p;
  fm.ell = g.ell;
  for (size_t v = 0; v < g.vertices.size(); ++v)
    if (g.level[v] >= 0) fm.basis.push_back(v);
  std::stable_sort(fm.basis.begin(), fm.basis.end(), [&](size_t a, size_t b) { return g.level[a] < g.level[b]; });
  std::vector<long> slot(g.vertices.size(), -1);
  for (size_t i = 0; i < fm.basis.size(); ++i) {
    slot[fm.basis[i]] = static_cast<long>(i);
    fm.level.push_back(g.level[fm.basis[i]]);
  }
  PrimeField F(g.p);
  const size_t m = fm.basis.size();
  fm.phi.assign(m, std::vector<RatFunc<PrimeField>>(m, RatFunc<PrimeField>(F)));
  for (const auto& e : g.edges) {
    if (slot[e.src] < 0 || slot[e.dst] < 0) continue;
    auto& cell = fm.phi[static_cast<size_t>(slot[e.src])][static_cast<size_t>(slot[e.dst])];
    cell = cell + RatFunc<PrimeField>(e.label);
  }
  return fm;
}

std::vector<unsigned> etale_chain(const FrobModule& fm, int level) {
  PrimeField F(fm.p);
  const size_t m = fm.basis.size();
  RatFunc<PrimeField> zero(F), one(FpPoly::constant(F, F.one()));
  MatRF<PrimeField> W;
  for (size_t i = 0; i < m; ++i) {
    if (fm.level[i] != level) continue;
    std::vector<RatFunc<PrimeField>> row(m, zero);
    row[i] = one;
    W.push_back(std::move(row));
  }
  std::vector<unsigned> dims{static_cast<unsigned>(W.size())};
  // phi(w) = Phi * w^(p); rows of W are the vectors
  auto apply = [&](const MatRF<PrimeField>& in) {
    MatRF<PrimeField> next;
    for (const auto& w : in) {
      std::vector<RatFunc<PrimeField>> fw(m, zero), u(m, zero);
      for (size_t j = 0; j < m; ++j)
        if (!w[j].is_zero()) fw[j] = w[j].expand(fm.p);
      for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
          if (!fw[j].is_zero() && !fm.phi[i][j].is_zero()) u[i] = u[i] + fm.phi[i][j] * fw[j];
      next.push_back(std::move(u));
    }
    auto piv = rref_rf(next);
    next.resize(piv.size());
    return next;
  };
  while (!W.empty()) {
    for (unsigned k = 0; k < fm.ell; ++k) W = apply(W);
    dims.push_back(static_cast<unsigned>(W.size()));
    if (dims.back() == dims[dims.size() - 2]) break;
  }
  return dims;
}

unsigned etale_dimension(const FrobModule& fm, int level) { return etale_chain(fm, level).back(); }

namespace {

// Order-sigma approximant basis for the row vector (F_0, ..., F_s); rows of
// the returned basis P satisfy sum_i P[j][i] F_i = 0 mod x^sigma.
struct Approximant {
  std::vector<std::vector<FpPoly>> rows;
  std::vector<size_t> degree;
};

Approximant mbasis(const std::vector<FpPoly>& series, size_t sigma) {
  const PrimeField& F = series[0].field();
  const size_t m = series.size();
  Approximant out;
  std::vector<std::vector<uint64_t>> res(m);
  // rows as dense coefficient vectors
  std::vector<std::vector<std::vector<uint64_t>>> P(m, std::vector<std::vector<uint64_t>>(m));
  for (size_t j = 0; j < m; ++j) {
    P[j][j] = {1};
    res[j].assign(sigma, 0);
    for (size_t k = 0; k < sigma; ++k) res[j][k] = series[j].coeff(k);
  }
  std::vector<size_t> deg(m, 0);
  auto axpy = [&](std::vector<uint64_t>& y, const std::vector<uint64_t>& x, uint64_t c, size_t from) {
    if (y.size() < x.size()) y.resize(x.size(), 0);
    for (size_t k = from; k < x.size(); ++k)
      if (x[k]) y[k] = F.sub(y[k], F.mul(c, x[k]));
  };
  for (size_t k = 0; k < sigma; ++k) {
    long piv = -1;
    for (size_t j = 0; j < m; ++j)
      if (res[j][k] && (piv < 0 || deg[j] < deg[static_cast<size_t>(piv)])) piv = static_cast<long>(j);
    if (piv < 0) continue;
    size_t pv = static_cast<size_t>(piv);
    uint64_t inv = F.inv(res[pv][k]);
    for (size_t j = 0; j < m; ++j) {
      if (j == pv || !res[j][k]) continue;
      uint64_t c = F.mul(res[j][k], inv);
      axpy(res[j], res[pv], c, k);
      for (size_t i = 0; i < m; ++i) axpy(P[j][i], P[pv][i], c, 0);
    }
    // multiply the pivot row by x
    res[pv].insert(res[pv].begin(), 0);
    res[pv].pop_back();
    for (auto& poly : P[pv]) poly.insert(poly.begin(), 0);
    ++deg[pv];
  }
  for (size_t j = 0; j < m; ++j) {
    std::vector<FpPoly> row;
    for (size_t i = 0; i < m; ++i) row.emplace_back(F, P[j][i]);
    out.rows.push_back(std::move(row));
  }
  out.degree = deg;
  return out;
}

std::vector<FpPoly> frobenius_twists(const FpPoly& F, const Int& q, unsigned s, size_t N) {
  std::vector<FpPoly> out;
  Int qi = 1;
  for (unsigned i = 0; i <= s; ++i) {
    if (qi >= static_cast<unsigned long>(N)) out.push_back(FpPoly::constant(F.field(), F.coeff(0)));
    else out.push_back(F.truncate(N).expand(qi.get_ui(), N));
    qi *= q;
  }
  return out;
}

}  // namespace

FpPoly relation_residual(const QRelation& r, const FpPoly& F, size_t N) {
  auto tw = frobenius_twists(F, r.q, r.s, N);
  FpPoly acc(F.field());
  for (unsigned i = 0; i <= r.s; ++i) acc += mul_trunc(r.coeffs[i], tw[i], N);
  return acc;
}

QRelation find_q_linearized_relation(const HParams& h, uint64_t p, RelationSearch opts) {
  RelGraph g = build_graph(h, p);
  if (reducible_mod_p(h, p).status == ReductionStatus::Divergent)
    throw PreconditionError(h.str() + " does not reduce mod " + std::to_string(p));
  Int q = ipow(Int(static_cast<unsigned long>(p)), g.ell);
  unsigned s_max = opts.s_max ? opts.s_max : std::max(1u, g.width);
  const unsigned doublings = opts.deg_bound ? 0 : 4;
  std::string tried;
  for (unsigned s = 1; s <= s_max; ++s) {
    Int qs = ipow(q, s);
    size_t D = opts.deg_bound;
    if (!D) {
      if (qs > 1000000) break;
      D = qs.get_ui();
    }
    for (unsigned dbl = 0; dbl <= doublings; ++dbl, D *= 2) {
      size_t sigma = opts.N ? opts.N : (s + 1) * (D + 2) + 16;
      FpPoly F = series_mod_p(g, 0, 2 * sigma);
      auto ap = mbasis(frobenius_twists(F, q, s, sigma), sigma);
      tried = "s <= " + std::to_string(s) + ", deg <= " + std::to_string(D) + ", N = " + std::to_string(sigma);
      // minimal row with all entries within the degree bound
      long best = -1;
      for (size_t j = 0; j < ap.rows.size(); ++j) {
        bool ok = true, nonzero = false;
        for (const auto& c : ap.rows[j]) {
          if (c.deg() > static_cast<long>(D)) ok = false;
          if (!c.is_zero()) nonzero = true;
        }
        if (ok && nonzero && (best < 0 || ap.degree[j] < ap.degree[static_cast<size_t>(best)])) best = static_cast<long>(j);
      }
      if (best < 0) continue;
      QRelation r;
      r.s = s;
      r.q = q;
      r.coeffs = ap.rows[static_cast<size_t>(best)];
      r.precision = sigma;
      if (!relation_residual(r, F, 2 * sigma).is_zero()) continue;
      r.verified_to = 2 * sigma;
      const PrimeField& Fp = F.field();
      for (const auto& c : r.coeffs) {
        if (c.is_zero()) continue;
        auto scale = Fp.neg(Fp.inv(c.coeff(c.valuation())));
        for (auto& x : r.coeffs) x = x.scale(scale);
        break;
      }
      for (const auto& c : r.coeffs) r.degree = std::max(r.degree, static_cast<size_t>(std::max(0L, c.deg())));
      return r;
    }
  }
  throw NotFoundError("no q-linearized relation for " + h.str() + " mod " + std::to_string(p) + " with " + tried);
}

EmbedReport galois_embed_report(const HParams& h, uint64_t p) {
  if (Rat(static_cast<unsigned long>(p)) <= graph_bound(h))
    throw PreconditionError("p must exceed " + to_string(graph_bound(h)));
  RelGraph g = build_graph(h, p);
  return {ipow(Int(static_cast<unsigned long>(p)), g.ell), g.ell, g.width};
}

std::string to_dot(const RelGraph& g) {
  std::vector<size_t> order(g.vertices.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (g.level[a] != g.level[b]) return g.level[a] < g.level[b];
    return g.vertices[a] < g.vertices[b];
  });
  std::vector<size_t> name(order.size());
  for (size_t i = 0; i < order.size(); ++i) name[order[i]] = i;
  std::ostringstream os;
  os << "digraph relgraph {\n";
  os << "  label=\"p=" << g.p << ", ell=" << g.ell << ", width=" << g.width << "\";\n";
  for (size_t v : order) {
    os << "  n" << name[v] << " [label=\"" << g.vertices[v].str() << "\", level=" << g.level[v];
    if (v == 0) os << ", shape=doublecircle";
    if (g.cycle_reach[v]) os << ", style=bold";
    os << "];\n";
  }
  std::vector<size_t> eorder(g.edges.size());
  for (size_t i = 0; i < eorder.size(); ++i) eorder[i] = i;
  std::sort(eorder.begin(), eorder.end(), [&](size_t a, size_t b) {
    const auto &x = g.edges[a], &y = g.edges[b];
    return std::tie(name[x.src], name[x.dst], x.s) < std::tie(name[y.src], name[y.dst], y.s);
  });
  for (size_t e : eorder) {
    const auto& ed = g.edges[e];
    os << "  n" << name[ed.src] << " -> n" << name[ed.dst] << " [label=\"s=" << ed.s << ", deg Q=" << ed.label.deg()
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace hypermod
