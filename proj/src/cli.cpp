#include "qhs/cli.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhs/errors.hpp"
#include "qhs/expr.hpp"
#include "qhs/homspace.hpp"
#include "qhs/liebialg.hpp"
#include "qhs/qdp.hpp"
#include "qhs/qminors.hpp"
#include "qhs/semiclassical.hpp"

namespace qhs {
namespace {

using Json = nlohmann::ordered_json;

// Exit-2 condition discovered after flag parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;  // 0 = unset
  int r = 0;  // 0 = unset
  int max_degree = 5;
  int order = 3;
  int degree = 1;
  int x_degree = -1;  // -1 = degree * (x-degree of d)
  int samples = 200;
  std::string format = "text";
  std::string s_str, c_str;
  std::string flag_type;
  std::string expression;
};

struct Outcome {
  bool ok = true;
  Json result;
  std::optional<Json> witness;
  std::vector<std::string> lines;  // text rendering
};

std::string bool_str(bool b) { return b ? "true" : "false"; }

AlgebraContext context_of(const Options& o) {
  if (o.n < 1) throw UsageError("--n is required (a positive matrix size)");
  return AlgebraContext{o.n};
}

std::vector<int> parse_flag_type(const std::string& s) {
  std::vector<int> flag;
  std::istringstream is(s);
  std::string part;
  while (std::getline(is, part, ',')) {
    try {
      size_t used = 0;
      flag.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError("--flag-type expects a comma-separated list of integers, e.g. 1,2");
    }
  }
  if (flag.empty()) throw UsageError("--flag-type expects a comma-separated list of integers");
  return flag;
}

std::vector<int> flag_of(const Options& o) {
  if (!o.flag_type.empty()) return parse_flag_type(o.flag_type);
  if (o.r >= 1) return {o.r};
  throw UsageError("--r or --flag-type is required");
}

int require_r(const Options& o) {
  if (o.r < 1) throw UsageError("--r is required (a positive block size)");
  return o.r;
}

// Validated standard context: Grassmannian for a single step, flag otherwise.
ParabolicContext make_parabolic(const AlgebraContext& ctx, const Options& o) {
  std::vector<int> flag = flag_of(o);
  if (flag.size() == 1) return grassmannian_context(ctx, flag.front());
  return flag_section(ctx, flag);
}

CentralFraction parse_fraction(const AlgebraContext& ctx, const Options& o, const char* cmd) {
  if (o.expression.empty()) throw UsageError(std::string(cmd) + " needs an expression argument");
  return frac_reduce(ctx, evaluate(ctx, parse_expression(o.expression, ctx)));
}

QElement parse_poly(const AlgebraContext& ctx, const Options& o, const char* cmd) {
  CentralFraction f = parse_fraction(ctx, o, cmd);
  if (f.det_power != 0)
    throw UsageError(std::string(cmd) + ": expression must be polynomial (no det_q inverse)");
  return f.numerator;
}

Rational parse_rational_flag(const std::string& s, const char* name) {
  mpq_class v;
  if (s.empty() || v.set_str(s, 10) != 0)
    throw UsageError(std::string(name) + " expects a rational like 3/5");
  if (v.get_den() == 0) throw UsageError(std::string(name) + " expects a nonzero denominator");
  v.canonicalize();
  return v;
}

std::string tuple_str(const IndexTuple& t) {
  std::ostringstream os;
  for (size_t k = 0; k < t.size(); ++k) {
    if (k) os << ',';
    os << t[k];
  }
  return os.str();
}

std::string minor_label(const IndexTuple& I, const IndexTuple& J) {
  return "D[" + tuple_str(I) + ";" + tuple_str(J) + "]";
}

// Same conventions as the element printers: multi-term coefficients
// parenthesized, single-term signs folded into the separator.
void append_term(std::ostringstream& os, bool first, const LaurentPoly& c, const std::string& mono) {
  std::string cs = c.str();
  if (c.terms().size() > 1) {
    if (!first) os << " + ";
    os << '(' << cs << ')';
    if (!mono.empty()) os << '*' << mono;
    return;
  }
  const bool neg = !cs.empty() && cs[0] == '-';
  if (!first) {
    os << (neg ? " - " : " + ");
    if (neg) cs = cs.substr(1);
  }
  if (mono.empty()) {
    os << cs;
  } else if (cs == "1") {
    os << mono;
  } else if (cs == "-1") {
    os << '-' << mono;
  } else {
    os << cs << '*' << mono;
  }
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << '[';
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) os << ", ";
    os << v[k].get_str();
  }
  os << ']';
  return os.str();
}

// Rational combination of basis labels, e.g. "e[1,2]", "2*e[1,3]", "0".
std::string combo_str(const LieBialgebra& g, const Vec& v) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < g.dim(); ++k) {
    const Rational& c = v[k];
    if (c == 0) continue;
    Rational a = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1) os << a.get_str() << '*';
    os << g.label(k);
    first = false;
  }
  return first ? std::string("0") : os.str();
}

Outcome run_nf(const Options& o) {
  AlgebraContext ctx = context_of(o);
  CentralFraction f = parse_fraction(ctx, o, "nf");
  std::string s = fraction_str(ctx, f);
  Outcome out;
  out.result = s;
  out.lines = {s};
  return out;
}

Outcome run_coprod(const Options& o) {
  AlgebraContext ctx = context_of(o);
  QElement f = parse_poly(ctx, o, "coprod");
  std::string s = coproduct(f).str();
  Outcome out;
  out.result = s;
  out.lines = {s};
  return out;
}

Outcome run_minor(const Options& o) {
  AlgebraContext ctx = context_of(o);
  if (o.expression.empty()) throw UsageError("minor needs a D[rows;cols] expression argument");
  Expression e = parse_expression(o.expression, ctx);
  if (e.node != Expression::Node::minor)
    throw UsageError("minor needs a single D[rows;cols] expression");
  std::string expansion = quantum_minor(ctx, e.rows, e.cols).str();
  bool identity = check_minor_coproduct(ctx, e.rows, e.cols);
  Outcome out;
  out.ok = identity;
  out.result = Json{{"rows", e.rows}, {"cols", e.cols}, {"expansion", expansion},
                    {"coproduct_identity", identity}};
  out.lines = {"expansion: " + expansion, "coproduct identity: " + bool_str(identity)};
  return out;
}

Outcome run_central_check(const Options& o) {
  AlgebraContext ctx = context_of(o);
  QElement f = parse_fraction(ctx, o, "central-check").numerator;
  bool central = check_central(ctx, f);
  Outcome out;
  out.ok = central;
  out.result = central;
  out.lines = {"central: " + bool_str(central)};
  if (!central) {
    for (int i = 1; i <= ctx.n && !out.witness; ++i)
      for (int j = 1; j <= ctx.n && !out.witness; ++j) {
        QElement c = commutator(f, QElement::generator(ctx, i, j));
        if (c.is_zero()) continue;
        std::string gen = "x[" + std::to_string(i) + "," + std::to_string(j) + "]";
        out.witness = Json{{"generator", gen}, {"commutator", c.str()}};
        out.lines.push_back("witness: [f, " + gen + "] = " + c.str());
      }
  }
  return out;
}

Outcome run_section_check(const Options& o) {
  AlgebraContext ctx = context_of(o);
  std::vector<int> flag = flag_of(o);
  QElement d = parse_poly(ctx, o, "section-check");
  ParabolicContext pc = parabolic_context(ctx, flag, d);
  SectionReport rep = classify_section(pc, flag_spanning_set(pc));
  Outcome out;
  out.ok = rep.classification == SectionClass::quantum;
  std::string cls = section_class_str(rep.classification);
  out.result = Json{{"flag", flag}, {"classification", cls}};
  out.lines = {"classification: " + cls};
  if (rep.witness) {
    out.witness = rep.witness->str();
    out.lines.push_back("witness: " + rep.witness->str());
  }
  return out;
}

Outcome run_semiinv(const Options& o) {
  AlgebraContext ctx = context_of(o);
  ParabolicContext pc = make_parabolic(ctx, o);
  QElement l = parse_poly(ctx, o, "semiinv");
  std::optional<int> deg = semi_invariant_degree(pc, l, o.max_degree);
  Outcome out;
  out.ok = deg.has_value();
  out.result = Json{{"max_degree", o.max_degree},
                    {"semi_invariant_degree", deg ? Json(*deg) : Json(nullptr)}};
  out.lines = {deg ? "semi-invariant degree: " + std::to_string(*deg)
                   : "no semi-invariant degree up to " + std::to_string(o.max_degree)};
  return out;
}

Outcome run_solve_semiinv(const Options& o) {
  AlgebraContext ctx = context_of(o);
  ParabolicContext pc = make_parabolic(ctx, o);
  int d_xdeg = 0;
  for (int m : pc.flag) d_xdeg += m;
  int k = o.x_degree >= 0 ? o.x_degree : o.degree * d_xdeg;
  SemiInvariantComponent comp = solve_semi_invariants(pc, o.degree, k);
  Outcome out;
  Json basis = Json::array();
  out.lines = {"degree: " + std::to_string(o.degree), "x-degree: " + std::to_string(k),
               "dimension: " + std::to_string(comp.basis.size())};
  if (!comp.basis.empty()) out.lines.push_back("basis:");
  for (const QElement& b : comp.basis) {
    basis.push_back(b.str());
    out.lines.push_back("  " + b.str());
  }
  out.result = Json{{"degree", o.degree},
                    {"x_degree", k},
                    {"dimension", comp.basis.size()},
                    {"basis", basis}};
  return out;
}

Outcome run_plucker(const Options& o) {
  AlgebraContext ctx = context_of(o);
  ParabolicContext pc = grassmannian_context(ctx, require_r(o));
  PluckerReport rep = plucker_relations(pc);
  IndexTuple cols(pc.r());
  for (int k = 0; k < pc.r(); ++k) cols[k] = k + 1;
  Json relations = Json::array();
  Outcome out;
  out.lines = {"products: " + std::to_string(rep.products.size()),
               "rank: " + std::to_string(rep.rank),
               "kernel dimension: " + std::to_string(rep.kernel.size())};
  for (const std::vector<LaurentPoly>& kv : rep.kernel) {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < kv.size(); ++k) {
      if (kv[k].is_zero()) continue;
      std::string mono = minor_label(rep.products[k].first, cols) + "*" +
                         minor_label(rep.products[k].second, cols);
      append_term(os, first, kv[k], mono);
      first = false;
    }
    relations.push_back(first ? std::string("0") : os.str());
    out.lines.push_back("relation: " + relations.back().get<std::string>());
  }
  out.result = Json{{"products", rep.products.size()},
                    {"rank", rep.rank},
                    {"kernel_dimension", rep.kernel.size()},
                    {"relations", relations}};
  return out;
}

Outcome run_bigcell_manin(const Options& o) {
  AlgebraContext ctx = context_of(o);
  ParabolicContext pc = grassmannian_context(ctx, require_r(o));
  BigCellReport rep = bigcell_manin_check(pc);
  Outcome out;
  out.ok = rep.ok;
  Json twists = Json::array();
  out.lines = {"ok: " + bool_str(rep.ok)};
  for (const auto& [ij, a] : rep.twists) {
    twists.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"twist", a}});
    out.lines.push_back("twist Delta[" + std::to_string(ij.first) + "," +
                        std::to_string(ij.second) + "] vs D_0: " + std::to_string(a));
  }
  out.lines.push_back("relations checked: " + std::to_string(rep.relations_checked));
  out.lines.push_back("detail: " + rep.detail);
  out.result = Json{{"twists", twists},
                    {"relations_checked", rep.relations_checked},
                    {"detail", rep.detail}};
  return out;
}

Outcome run_poisson(const Options& o) {
  AlgebraContext ctx = context_of(o);
  PoissonRing pr{ctx.n};
  PoissonAxiomReport rep = poisson_axiom_suite(pr, o.samples);
  Outcome out;
  out.ok = rep.ok();
  out.result = Json{{"samples", rep.samples},
                    {"antisymmetry", rep.antisymmetry},
                    {"leibniz", rep.leibniz},
                    {"jacobi", rep.jacobi},
                    {"coproduct_compat", rep.coproduct_compat}};
  out.lines = {"samples: " + std::to_string(rep.samples),
               "antisymmetry: " + bool_str(rep.antisymmetry),
               "leibniz: " + bool_str(rep.leibniz), "jacobi: " + bool_str(rep.jacobi),
               "coproduct compatibility: " + bool_str(rep.coproduct_compat)};
  return out;
}

Outcome run_qdp_struct(const Options& o) {
  AlgebraContext ctx = context_of(o);
  LieBialgebra got = dual_structure_constants(ctx, chi_generators(ctx));
  LieBialgebra expected = build_gl_dual(ctx.n);
  bool matches = got.dim() == expected.dim();
  for (int i = 0; matches && i < got.dim(); ++i) matches = got.label(i) == expected.label(i);
  for (int i = 0; matches && i < got.dim(); ++i)
    for (int j = i + 1; matches && j < got.dim(); ++j)
      matches = got.bracket_coeffs(i, j) == expected.bracket_coeffs(i, j);
  Json brackets = Json::array();
  Outcome out;
  out.ok = matches;
  out.lines = {"matches gl* table: " + bool_str(matches)};
  for (int i = 0; i < got.dim(); ++i)
    for (int j = i + 1; j < got.dim(); ++j) {
      const Vec& v = got.bracket_coeffs(i, j);
      bool zero = true;
      for (const Rational& c : v)
        if (c != 0) zero = false;
      if (zero) continue;
      std::string value = combo_str(got, v);
      brackets.push_back(Json{{"lhs", got.label(i)}, {"rhs", got.label(j)}, {"value", value}});
      out.lines.push_back("[" + got.label(i) + ", " + got.label(j) + "] = " + value);
    }
  out.result = Json{{"n", ctx.n}, {"matches_gl_dual", matches}, {"brackets", brackets}};
  return out;
}

Outcome run_qdp_pperp(const Options& o) {
  AlgebraContext ctx = context_of(o);
  PPerpReport rep = verify_p_perp(ctx, require_r(o), o.order);
  Json entries = Json::array();
  Outcome out;
  out.ok = rep.ok;
  out.lines = {"ok: " + bool_str(rep.ok), "sign rule: " + rep.sign_rule};
  for (const PPerpEntry& e : rep.entries) {
    entries.push_back(Json{{"i", e.i},
                           {"j", e.j},
                           {"normalized_plus", e.normalized_plus},
                           {"unnormalized_sign", e.unnormalized_sign},
                           {"sign_matches_rule", e.sign_matches_rule}});
    std::string sign = e.unnormalized_sign >= 0 ? "+" + std::to_string(e.unnormalized_sign)
                                                : std::to_string(e.unnormalized_sign);
    out.lines.push_back("mu[" + std::to_string(e.i) + "," + std::to_string(e.j) +
                        "]: normalized plus " + bool_str(e.normalized_plus) +
                        ", unnormalized sign " + sign + ", matches rule " +
                        bool_str(e.sign_matches_rule));
  }
  out.lines.push_back("dimension: " + std::to_string(rep.dim));
  out.lines.push_back("span is p-perp: " + bool_str(rep.span_is_p_perp));
  out.lines.push_back("closed under bracket: " + bool_str(rep.closed_under_bracket));
  out.lines.push_back("abelian: " + bool_str(rep.abelian));
  out.result = Json{{"n", rep.n},
                    {"r", rep.r},
                    {"dim", rep.dim},
                    {"sign_rule", rep.sign_rule},
                    {"entries", entries},
                    {"span_is_p_perp", rep.span_is_p_perp},
                    {"closed_under_bracket", rep.closed_under_bracket},
                    {"abelian", rep.abelian}};
  return out;
}

Outcome run_coisotropy(const Options& o) {
  Outcome out;
  LieBialgebra g = build_sl2();
  Json head;
  Subspace h(1);
  if (!o.s_str.empty() || !o.c_str.empty()) {
    if (o.s_str.empty() || o.c_str.empty())
      throw UsageError("coisotropy needs both --s and --c, or --n with --r");
    Rational s = parse_rational_flag(o.s_str, "--s");
    Rational c = parse_rational_flag(o.c_str, "--c");
    h = p_epsilon(s, c);
    head = Json{{"space", "P_eps"}, {"s", rational_str(s)}, {"c", rational_str(c)}};
  } else {
    AlgebraContext ctx = context_of(o);
    int r = require_r(o);
    if (r >= ctx.n) throw UsageError("--r must be smaller than --n");
    g = build_gl(ctx.n);
    std::vector<Vec> basis;
    for (int a = 1; a <= ctx.n; ++a)
      for (int b = 1; b <= ctx.n; ++b) {
        if (a > r && b <= r) continue;  // below the block staircase
        Vec v(ctx.n * ctx.n, 0);
        v[(a - 1) * ctx.n + (b - 1)] = 1;
        basis.push_back(v);
      }
    h = Subspace::span(ctx.n * ctx.n, basis);
    head = Json{{"space", "gl block parabolic"}, {"n", ctx.n}, {"r", r}};
  }
  CoisotropyReport rep = coisotropy_check(g, h);
  out.ok = rep.subalgebra && rep.coideal && rep.perp_subalgebra;
  out.result = head;
  out.result["dim"] = h.dim();
  out.result["subalgebra"] = rep.subalgebra;
  out.result["coideal"] = rep.coideal;
  out.result["perp_subalgebra"] = rep.perp_subalgebra;
  out.lines = {"dimension: " + std::to_string(h.dim()),
               "subalgebra: " + bool_str(rep.subalgebra), "coideal: " + bool_str(rep.coideal),
               "perp subalgebra: " + bool_str(rep.perp_subalgebra)};
  Json wit;
  if (rep.subalgebra_witness) {
    wit["subalgebra"] = vec_str(*rep.subalgebra_witness);
    out.lines.push_back("witness (subalgebra): " + vec_str(*rep.subalgebra_witness));
  }
  if (rep.coideal_witness) {
    wit["coideal"] = vec_str(*rep.coideal_witness);
    out.lines.push_back("witness (coideal): " + vec_str(*rep.coideal_witness));
  }
  if (rep.perp_witness) {
    wit["perp"] = vec_str(*rep.perp_witness);
    out.lines.push_back("witness (perp): " + vec_str(*rep.perp_witness));
  }
  if (!wit.is_null()) out.witness = wit;
  return out;
}

Outcome run_flag_section(const Options& o) {
  AlgebraContext ctx = context_of(o);
  ParabolicContext pc = flag_section(ctx, flag_of(o));
  SectionReport rep = classify_section(pc, flag_spanning_set(pc));
  std::optional<int> deg = semi_invariant_degree(pc, pc.d, o.max_degree);
  Outcome out;
  out.ok = rep.classification == SectionClass::quantum && deg.has_value();
  std::string cls = section_class_str(rep.classification);
  out.result = Json{{"flag", pc.flag},
                    {"d", pc.d.str()},
                    {"classification", cls},
                    {"semi_invariant_degree", deg ? Json(*deg) : Json(nullptr)}};
  out.lines = {"flag: " + tuple_str(pc.flag), "d: " + pc.d.str(), "classification: " + cls,
               deg ? "semi-invariant degree: " + std::to_string(*deg)
                   : "no semi-invariant degree up to " + std::to_string(o.max_degree)};
  if (rep.witness) {
    out.witness = rep.witness->str();
    out.lines.push_back("witness: " + rep.witness->str());
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"symbolic toolkit for quantized coordinate rings and their homogeneous spaces"};
  app.name("qhs");
  Options o;
  std::string command;
  app.add_option("command", command,
                 "one of: nf coprod minor central-check section-check semiinv solve-semiinv "
                 "plucker bigcell-manin poisson qdp-struct qdp-pperp coisotropy flag-section")
      ->required();
  app.add_option("expression", o.expression, "algebra expression, e.g. 'x[2,1]*x[1,1]'");
  app.add_option("--n", o.n, "matrix size n of O_q(M_n)");
  app.add_option("--r", o.r, "block size (Grassmannian of r-planes)");
  app.add_option("--max-degree", o.max_degree, "semi-invariant degree search bound (default 5)");
  app.add_option("--order", o.order, "truncation order for inverses (default 3)");
  app.add_option("--degree", o.degree, "semi-invariant degree to solve for (default 1)");
  app.add_option("--x-degree", o.x_degree,
                 "homogeneous x-degree of the solve component (default: degree matching d^degree)");
  app.add_option("--samples", o.samples, "random samples for the axiom suite (default 200)");
  app.add_option("--format", o.format, "output format: text or json (default text)");
  app.add_option("--s", o.s_str, "rational s for the circle point (s, c)");
  app.add_option("--c", o.c_str, "rational c for the circle point (s, c)");
  app.add_option("--flag-type", o.flag_type, "flag type m1,m2,... with 1 <= m1 < ... < n");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (o.format != "text" && o.format != "json")
      throw UsageError("--format expects 'text' or 'json'");

    using Handler = Outcome (*)(const Options&);
    static const std::map<std::string, Handler> handlers = {
        {"nf", run_nf},
        {"coprod", run_coprod},
        {"minor", run_minor},
        {"central-check", run_central_check},
        {"section-check", run_section_check},
        {"semiinv", run_semiinv},
        {"solve-semiinv", run_solve_semiinv},
        {"plucker", run_plucker},
        {"bigcell-manin", run_bigcell_manin},
        {"poisson", run_poisson},
        {"qdp-struct", run_qdp_struct},
        {"qdp-pperp", run_qdp_pperp},
        {"coisotropy", run_coisotropy},
        {"flag-section", run_flag_section},
    };
    auto it = handlers.find(command);
    if (it == handlers.end()) throw UsageError("unknown command '" + command + "'");

    static const std::map<std::string, bool> wants_expression = {
        {"nf", true},      {"coprod", true},        {"minor", true}, {"central-check", true},
        {"section-check", true}, {"semiinv", true},
    };
    if (!o.expression.empty() && !wants_expression.count(command))
      throw UsageError(command + " takes no expression argument");

    Outcome outc = it->second(o);
    if (o.format == "json") {
      Json j;
      j["ok"] = outc.ok;
      j["command"] = command;
      j["result"] = outc.result;
      if (outc.witness) j["witness"] = *outc.witness;
      out << j.dump() << "\n";
    } else {
      for (const std::string& line : outc.lines) out << line << "\n";
    }
    return outc.ok ? 0 : 1;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qhs
