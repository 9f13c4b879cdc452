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

// The hypergeometric relation graph: vertices are parameter tuples, and each
// s in S_p(v) gives an edge v -> D_{p,s}(v) labelled by the basis polynomial
// f_s of v. Mod p, F(v) = sum_e Q(e) F(dst)^p.

#ifndef HYPERMOD_RELGRAPH_HPP
#define HYPERMOD_RELGRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypermod/ffpoly.hpp"
#include "hypermod/hyperg.hpp"

namespace hypermod {

struct RelEdge {
  size_t src = 0, dst = 0;
  uint64_t s = 0;
  FpPoly label;
};

struct RelGraph {
  uint64_t p = 0;
  std::vector<HParams> vertices;  // vertices[0] is the root
  std::vector<RelEdge> edges;
  std::vector<std::vector<size_t>> out;  // edge indices per vertex
  unsigned ell = 1;
  std::vector<int> level;           // -1 when the class matches no level
  std::vector<bool> cycle_reach;    // reachable from a directed cycle
  std::vector<unsigned> widths;     // cycle-reachable vertices per level
  unsigned width = 0;
  bool empirical = false;           // p at or below 2d*max{|gamma|+1}
  std::vector<size_t> numerator_flags;  // vertices where p divides a numerator of D_p(v)

  size_t index_of(const HParams& v) const;  // throws NotFoundError
  bool leveled() const;                     // every vertex has a level
};

RelGraph build_graph(const HParams& h, uint64_t p);
unsigned graph_width(const RelGraph& g);
// 2d * max{|alpha_i| + 1, |beta_j| + 1}
Rat graph_bound(const HParams& h);

// Reduction mod p of the series to N coefficients via the graph recursion.
FpPoly series_mod_p(const HParams& h, uint64_t p, size_t N);
FpPoly series_mod_p(const RelGraph& g, size_t vertex, size_t N);

struct FrobModule {
  uint64_t p = 0;
  unsigned ell = 1;
  std::vector<size_t> basis;     // graph vertex per basis slot, ordered by level
  std::vector<int> level;        // level per basis slot
  MatRF<PrimeField> phi;         // phi[row][col]: column v holds Q(e) at rows v'
  size_t dim_level(int k) const;
};

FrobModule frobenius_module(const RelGraph& g);
// Dimension of the etale part of M_level under phi^ell.
unsigned etale_dimension(const FrobModule& fm, int level);
// Dimensions of the iterated spans (phi^ell)^i(M_level), i = 0, 1, ... until stable.
std::vector<unsigned> etale_chain(const FrobModule& fm, int level);

struct QRelation {
  unsigned s = 0;
  Int q;
  std::vector<FpPoly> coeffs;  // c_0 .. c_s
  size_t degree = 0;           // max deg c_i
  size_t precision = 0;        // order of the approximant
  size_t verified_to = 0;      // residual vanishes mod x^verified_to
};

struct RelationSearch {
  unsigned s_max = 0;    // 0: graph width
  size_t deg_bound = 0;  // 0: q^s, doubled up to 4 times
  size_t N = 0;          // 0: (s+1)(deg_bound+2)+16
};

// sum_i c_i F^{q^i} = 0 mod p with q = p^ell. Throws NotFoundError.
QRelation find_q_linearized_relation(const HParams& h, uint64_t p, RelationSearch opts = {});
// Residual sum_i c_i F(x^{q^i}) mod x^N given F mod x^N.
FpPoly relation_residual(const QRelation& r, const FpPoly& F, size_t N);

struct EmbedReport {
  Int q;
  unsigned ell = 1;
  unsigned width = 0;
};
EmbedReport galois_embed_report(const HParams& h, uint64_t p);

std::string to_dot(const RelGraph& g);

}  // namespace hypermod

#endif
