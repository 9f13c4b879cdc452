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

#include "hypermod/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "hypermod/errors.hpp"
#include "hypermod/galois2f1.hpp"
#include "hypermod/modp_basis.hpp"
#include "hypermod/relgraph.hpp"
#include "hypermod/sporadic.hpp"

namespace hypermod {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json jint(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return to_string(x);
}

json jpoly(const FpPoly& f) { return f.coeffs(); }

json jrats(const std::vector<Rat>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

std::string poly_text(const FpPoly& f) {
  std::string s = "[";
  for (size_t i = 0; i < f.coeffs().size(); ++i) s += (i ? " " : "") + std::to_string(f.coeffs()[i]);
  return s + "]";
}

// One result in every format the command supports (empty: unsupported).
struct Report {
  json data;
  std::string text, csv, dot;
  std::string default_format = "json";
};

uint64_t need_prime(const std::optional<uint64_t>& p, const char* cmd) {
  if (!p) throw UsageError(std::string(cmd) + " needs --prime");
  if (!is_prime(*p)) throw PreconditionError(std::to_string(*p) + " is not prime");
  return *p;
}

HParams params_or_usage(const std::vector<std::string>& toks) {
  try {
    return parse_params(toks);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
}

Report cmd_classify(const HParams& h, std::optional<uint64_t> prime, const std::string& lambda_set) {
  Report r;
  bool gb = globally_bounded(h);
  Algebraicity alg = algebraic(h);
  std::vector<long> lams = h.lambdas();
  if (!lambda_set.empty()) {
    lams.clear();
    for (const auto& x : parse_rat_list(lambda_set)) {
      if (x.get_den() != 1) throw UsageError("--lambda-set takes integers");
      long l = x.get_num().get_si();
      if (std::gcd(l, h.d()) != 1) throw PreconditionError("lambda " + std::to_string(l) + " is not a unit mod " + std::to_string(h.d()));
      lams.push_back(mod_floor(l, h.d()) == 0 ? 1 : mod_floor(l, h.d()));
    }
  }
  r.data["params"] = h.str();
  r.data["d"] = h.d();
  r.data["globally_bounded"] = gb;
  r.data["algebraic"] = to_string(alg);
  std::ostringstream t;
  t << "params: " << h.str() << "\n";
  t << "globally bounded: " << (gb ? "yes" : "no") << "\n";
  t << "algebraic: " << to_string(alg) << "\n";
  t << "lambda\tinterlacing\n";
  json lj = json::array();
  for (long l : lams) {
    bool ok = interlacing_ok(h, l);
    lj.push_back({{"lambda", l}, {"interlacing", ok}});
    t << l << "\t" << (ok ? "yes" : "no") << "\n";
  }
  r.data["lambdas"] = lj;
  if (prime) {
    uint64_t p = need_prime(prime, "classify");
    ReductionVerdict v = reducible_mod_p(h, p);
    json red{{"p", p}, {"status", to_string(v.status)}, {"bound", to_string(v.bound_used)}};
    t << "p = " << p << ": " << to_string(v.status);
    if (v.witness) {
      red["witness"] = {{"lambda", v.witness->lambda}, {"j", v.witness->j}, {"m", v.witness->m}, {"M", v.witness->M_value}};
      t << ", witness lambda = " << v.witness->lambda << " (beta index " << v.witness->j << ", m = " << v.witness->m << ")";
    }
    if (v.status == ReductionStatus::SmallPrimeEmpirical) {
      red["scan_min"] = v.scan_min;
      red["scan_argmin"] = v.scan_argmin;
      red["scan_K"] = v.scan_K;
      t << ", min valuation " << v.scan_min << " at k = " << v.scan_argmin;
    }
    t << "\n";
    r.data["reduction"] = red;
  }
  r.text = t.str();
  return r;
}

Report cmd_dims(const HParams& h) {
  Report r;
  auto tab = dim_table(h);
  r.data["params"] = h.str();
  r.data["d"] = h.d();
  json dj = json::object();
  std::string text = "t\tdim\n", csv = "t,dim\n";
  for (const auto& [t, dim] : tab) {
    dj[std::to_string(t)] = dim;
    text += std::to_string(t) + "\t" + std::to_string(dim) + "\n";
    csv += std::to_string(t) + "," + std::to_string(dim) + "\n";
  }
  r.data["dims"] = dj;
  r.text = text;
  r.csv = csv;
  return r;
}

Report cmd_graph(const HParams& h, uint64_t p, bool dot) {
  Report r;
  RelGraph g = build_graph(h, p);
  r.data["params"] = h.str();
  r.data["p"] = p;
  r.data["ell"] = g.ell;
  r.data["width"] = g.width;
  r.data["widths"] = g.widths;
  r.data["empirical"] = g.empirical;
  json vs = json::array();
  for (size_t i = 0; i < g.vertices.size(); ++i)
    vs.push_back({{"id", i}, {"params", g.vertices[i].str()}, {"level", g.level[i]}, {"on_cycle_path", static_cast<bool>(g.cycle_reach[i])}});
  r.data["vertices"] = vs;
  json es = json::array();
  for (const auto& e : g.edges) es.push_back({{"src", e.src}, {"dst", e.dst}, {"s", e.s}, {"label", jpoly(e.label)}});
  r.data["edges"] = es;
  std::ostringstream t;
  t << "graph " << h.str() << " mod " << p << ": " << g.vertices.size() << " vertices, " << g.edges.size()
    << " edges, ell = " << g.ell << ", width = " << g.width << "\n";
  for (size_t i = 0; i < g.vertices.size(); ++i) t << i << "\t" << g.vertices[i].str() << "\tlevel " << g.level[i] << "\n";
  for (const auto& e : g.edges) t << e.src << " -> " << e.dst << "\ts = " << e.s << "\t" << poly_text(e.label) << "\n";
  r.text = t.str();
  r.dot = to_dot(g);
  if (dot) r.default_format = "dot";
  return r;
}

Report cmd_series(const HParams& h, uint64_t p, size_t N) {
  Report r;
  FpPoly f = series_mod_p(h, p, N);
  std::vector<uint64_t> c(N, 0);
  for (size_t i = 0; i < N; ++i) c[i] = f.coeff(i);
  r.data["params"] = h.str();
  r.data["p"] = p;
  r.data["N"] = N;
  r.data["coeffs"] = c;
  std::string text, csv = "k,coeff\n";
  for (size_t i = 0; i < N; ++i) {
    text += (i ? " " : "") + std::to_string(c[i]);
    csv += std::to_string(i) + "," + std::to_string(c[i]) + "\n";
  }
  r.text = text + "\n";
  r.csv = csv;
  return r;
}

Report cmd_annihilator(const HParams& h, uint64_t p, RelationSearch opts) {
  Report r;
  QRelation q = find_q_linearized_relation(h, p, opts);
  r.data["params"] = h.str();
  r.data["p"] = p;
  r.data["q"] = jint(q.q);
  r.data["s"] = q.s;
  r.data["degree"] = q.degree;
  r.data["precision"] = q.precision;
  r.data["verified_to"] = q.verified_to;
  json cs = json::array();
  std::ostringstream t;
  t << "relation sum_i c_i F^(q^i) = 0 mod " << p << ", q = " << q.q << ", s = " << q.s << ", verified mod x^"
    << q.verified_to << "\n";
  for (size_t i = 0; i < q.coeffs.size(); ++i) {
    cs.push_back(jpoly(q.coeffs[i]));
    t << "c_" << i << " = " << poly_text(q.coeffs[i]) << "\n";
  }
  r.data["coeffs"] = cs;
  r.text = t.str();
  return r;
}

json sweep_json(const SweepReport& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json b = json::array();
    for (size_t i = 0; i < e.classes.size(); ++i)
      b.push_back({{"t", e.classes[i]}, {"index_bound", e.bounds[i] ? jint(*e.bounds[i]) : json("unbounded")}});
    entries.push_back({{"pair", e.g.str()},
                       {"passes", e.passes},
                       {"max_bound", e.max_bound ? jint(*e.max_bound) : json("unbounded")},
                       {"classes", b},
                       {"numerics_ok", e.numerics_ok},
                       {"numeric_checks", e.checks.size()}});
  }
  return {{"d", rep.d},
          {"all_pass", rep.all_pass},
          {"worst", rep.worst ? jint(*rep.worst) : json("unbounded")},
          {"numerics_ok", rep.numerics_ok},
          {"entries", entries}};
}

Report cmd_galois2f1(const std::vector<std::string>& pos, std::optional<uint64_t> prime, bool table,
                     const std::string& layout, std::optional<long> sweep_d, unsigned samples, unsigned threads) {
  Report r;
  if (sweep_d) {
    if (!pos.empty()) throw UsageError("--sweep takes no alpha arguments");
    SweepReport rep = sweep_verify(*sweep_d, samples, threads);
    r.data = sweep_json(rep);
    std::string text, csv = "pair,passes,max_bound,numerics_ok\n";
    for (const auto& e : rep.entries) {
      std::string mb = e.max_bound ? to_string(*e.max_bound) : "unbounded";
      text += e.g.str() + "\t" + (e.passes ? "pass" : "fail") + "\t" + mb + "\n";
      csv += "\"" + e.g.str() + "\"," + (e.passes ? "1" : "0") + "," + mb + "," + (e.numerics_ok ? "1" : "0") + "\n";
    }
    text += std::string("d = ") + std::to_string(rep.d) + ": " + (rep.all_pass ? "all pass" : "not all pass") +
            ", worst bound " + (rep.worst ? to_string(*rep.worst) : "unbounded") + "\n";
    r.text = text;
    r.csv = csv;
    return r;
  }
  if (pos.size() != 2) throw UsageError("galois2f1 needs two parameters a1 a2");
  Rat a1, a2;
  try {
    a1 = parse_rat(pos[0]);
    a2 = parse_rat(pos[1]);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  Normalization n = normalize(a1, a2);
  r.data["input"] = jrats({a1, a2});
  if (n.binomial) {
    uint64_t p = need_prime(prime, "galois2f1 (binomial case)");
    Rat a = n.binomial_exponent;
    BinomialGroup b = binomial_case(a.get_num().get_si(), a.get_den().get_si(), p);
    r.data["binomial"] = {{"exponent", to_string(a)}, {"p", p}, {"order", jint(b.order)}, {"residue_part", b.residue_part}};
    r.text = "(1 - x)^(-" + to_string(a) + ") mod " + std::to_string(p) + ": Galois order " + to_string(b.order) + "\n";
    return r;
  }
  const G2F1& g = n.g;
  r.data["normalized"] = g.str();
  r.data["d"] = g.d;
  r.data["m"] = g.m;
  if (table) {
    if (layout != "nu" && layout != "ratio") throw UsageError("--layout is nu or ratio");
    TableLayout L = layout == "nu" ? TableLayout::Nu : TableLayout::Ratio;
    auto rows = certificate_table(g);
    auto cells = table_cells(rows, L);
    json jr = json::array();
    for (size_t i = 0; i < rows.size(); ++i)
      jr.push_back({{"t", rows[i].t},
                    {"cells", cells[i]},
                    {"index_bound", rows[i].index_bound ? jint(*rows[i].index_bound) : json("unbounded")},
                    {"empirical", rows[i].empirical}});
    r.data["layout"] = layout;
    r.data["rows"] = jr;
    r.text = format_table_text(rows, L);
    r.csv = format_table_csv(rows, L);
    r.default_format = "text";
    return r;
  }
  uint64_t p = need_prime(prime, "galois2f1");
  GaloisResult res = galois_order(g, p);
  ConjecturedG cg = conjectured_G(g);
  r.data["p"] = p;
  r.data["ell"] = res.ell;
  r.data["q"] = jint(res.q);
  r.data["exact_order"] = jint(res.exact_order);
  r.data["conjectured_order"] = jint(res.conjectured_order);
  r.data["index"] = to_string(res.index);
  r.data["flag"] = res.flag;
  r.data["h"] = jint(res.h);
  r.data["case"] = to_string(cg.tag);
  r.data["D"] = cg.D.elements;
  std::ostringstream t;
  t << g.str() << " mod " << p << ": ell = " << res.ell << ", exact order " << res.exact_order << ", conjectured "
    << res.conjectured_order << ", index " << to_string(res.index) << ", h = " << res.h
    << (res.flag ? " (flagged)" : "") << "\n";
  r.text = t.str();
  return r;
}

Report cmd_sporadic(const std::string& name, uint64_t p_max, long modulus, unsigned threads) {
  Report r;
  SporadicSeries s = builtin(name);
  PatternReport rep = congruence_pattern(s, modulus, p_max, threads);
  json rows = json::array();
  for (const auto& row : rep.rows)
    rows.push_back({{"p", row.p},
                    {"residue", row.residue},
                    {"classification", to_string(row.tag)},
                    {"galois_order", jint(row.order)},
                    {"group", row.group},
                    {"p_lucas", row.lucas},
                    {"multiplicity_bound", row.multiplicity_bound}});
  json obs = json::object();
  std::string text;
  for (const auto& [res, labels] : rep.observed) {
    obs[std::to_string(res)] = labels;
    text += std::to_string(res) + " mod " + std::to_string(modulus) + ":";
    for (const auto& l : labels) text += " " + l;
    text += "\n";
  }
  r.data = {{"series", name}, {"modulus", modulus}, {"p_max", p_max}, {"rows", rows}, {"observed", obs}, {"inconsistent", rep.inconsistent}};
  text += rep.inconsistent.empty() ? "consistent\n" : "inconsistent residues present\n";
  r.text = text;
  r.csv = pattern_csv(rep);
  r.default_format = "csv";
  return r;
}

unsigned thread_count(unsigned flag) {
  if (flag) return flag;
  if (const char* env = std::getenv("HYPERMOD_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 0;
}

}  // namespace

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  if (text.empty()) return out;
  size_t start = 0;
  for (;;) {
    size_t comma = text.find(',', start);
    out.push_back(parse_rat(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

HParams parse_params(const std::vector<std::string>& tokens) {
  auto slash = std::find(tokens.begin(), tokens.end(), "/");
  std::vector<std::string> a(tokens.begin(), slash), b;
  if (slash != tokens.end()) b.assign(slash + 1, tokens.end());
  if (a.size() != 1 || b.size() > 1) throw PreconditionError("parameters are ALPHA / BETA with comma-separated lists");
  return HParams(parse_rat_list(a[0]), b.empty() ? std::vector<Rat>{} : parse_rat_list(b[0]));
}

json to_json(const Request& r) {
  return {{"command", r.command}, {"args", r.args}, {"format", r.format}, {"seed", r.seed}};
}

Request request_from_json(const json& j) {
  Request r;
  r.command = j.at("command").get<std::string>();
  r.args = j.at("args").get<std::vector<std::string>>();
  r.format = j.at("format").get<std::string>();
  r.seed = j.at("seed").get<unsigned long>();
  return r;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hypermod: hypergeometric series modulo primes"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "auto";
  unsigned threads_flag = 0;
  unsigned long seed = 0;
  app.add_option("-f,--format", format, "json, text, csv or dot (default depends on the command)")
      ->check(CLI::IsMember({"auto", "json", "text", "csv", "dot"}));
  app.add_option("--threads", threads_flag, "worker threads (0: HYPERMOD_THREADS or hardware)");
  app.add_option("--seed", seed, "seed echoed in the request; every subcommand is deterministic");
  app.footer(
      "Parameters: ALPHA / BETA, comma-separated rationals; beta_n = 1 is appended.\n"
      "Exit codes: 0 ok, 2 usage, 3 precondition, 4 not found within bounds.\n"
      "CSV columns: dims t,dim; series k,coeff; sporadic p,residue,classification,galois_order;\n"
      "galois2f1 --table class,ell,flag,... ; galois2f1 --sweep pair,passes,max_bound,numerics_ok.");

  std::vector<std::string> ptoks;
  std::optional<uint64_t> prime;
  std::string lambda_set;
  auto* classify = app.add_subcommand("classify", "global boundedness, algebraicity, interlacing, reduction mod p");
  classify->add_option("params", ptoks, "ALPHA / BETA")->required();
  classify->add_option("-p,--prime", prime, "prime for the reduction verdict");
  classify->add_option("--lambda-set", lambda_set, "comma-separated lambdas for the interlacing table");

  auto* dims = app.add_subcommand("dims", "mod-p solution dimension per class t mod d");
  dims->add_option("params", ptoks, "ALPHA / BETA")->required();

  bool dot = false;
  auto* graph = app.add_subcommand("graph", "hypergeometric relation graph");
  graph->add_option("params", ptoks, "ALPHA / BETA")->required();
  graph->add_option("-p,--prime", prime, "prime")->required();
  graph->add_flag("--dot", dot, "DOT output");

  size_t N = 50;
  auto* series = app.add_subcommand("series", "series coefficients mod p");
  series->add_option("params", ptoks, "ALPHA / BETA")->required();
  series->add_option("-p,--prime", prime, "prime")->required();
  series->add_option("-N,--terms", N, "number of coefficients");

  RelationSearch opts;
  auto* annih = app.add_subcommand("annihilator", "q-linearized relation mod p");
  annih->add_option("params", ptoks, "ALPHA / BETA")->required();
  annih->add_option("-p,--prime", prime, "prime")->required();
  annih->add_option("--s-max", opts.s_max, "relation length (0: graph width)");
  annih->add_option("--deg-bound", opts.deg_bound, "coefficient degree bound (0: q^s)");

  std::vector<std::string> gpos;
  bool table = false;
  std::string layout = "nu";
  std::optional<long> sweep_d;
  unsigned samples = 3;
  auto* g2 = app.add_subcommand("galois2f1", "Gaussian 2F1 Galois orders, certificate tables and sweeps");
  g2->add_option("alpha", gpos, "a1 a2");
  g2->add_option("-p,--prime", prime, "prime");
  g2->add_flag("--table", table, "symbolic certificate table");
  g2->add_option("--layout", layout, "table layout: nu or ratio");
  g2->add_option("--sweep", sweep_d, "verify every pair with denominator d");
  g2->add_option("--samples", samples, "numeric primes per pair and class in a sweep");

  std::string sname;
  uint64_t p_max = 200;
  long modulus = 24;
  auto* spor = app.add_subcommand("sporadic", "p-Lucas series: square classes and congruence patterns");
  spor->add_option("name", sname, "central2, central3, apery, domb or AZ")->required();
  spor->add_option("p_max", p_max, "largest prime")->required();
  spor->add_option("modulus", modulus, "modulus for the residue pattern")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  Request req;
  req.command = sub->get_name();
  auto it = std::find(args.begin(), args.end(), req.command);
  req.args.assign(it == args.end() ? args.end() : it + 1, args.end());
  req.seed = seed;
  unsigned threads = thread_count(threads_flag);

  try {
    Report rep;
    if (sub == classify) rep = cmd_classify(params_or_usage(ptoks), prime, lambda_set);
    else if (sub == dims) rep = cmd_dims(params_or_usage(ptoks));
    else if (sub == graph) rep = cmd_graph(params_or_usage(ptoks), need_prime(prime, "graph"), dot);
    else if (sub == series) rep = cmd_series(params_or_usage(ptoks), need_prime(prime, "series"), N);
    else if (sub == annih) rep = cmd_annihilator(params_or_usage(ptoks), need_prime(prime, "annihilator"), opts);
    else if (sub == g2) rep = cmd_galois2f1(gpos, prime, table, layout, sweep_d, samples, threads);
    else rep = cmd_sporadic(sname, p_max, modulus, threads);

    req.format = format == "auto" ? rep.default_format : format;
    if (req.format == "json") {
      json env{{"schema", kSchema}, {"request", to_json(req)}, {"result", rep.data}};
      out << env.dump(2) << "\n";
    } else {
      const std::string& body = req.format == "text" ? rep.text : req.format == "csv" ? rep.csv : rep.dot;
      if (body.empty()) throw UsageError("format " + req.format + " is not available for " + req.command);
      out << body;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const NotFoundError& e) {
    err << "not found: " << e.what() << "\n";
    return kExitNotFound;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace hypermod
