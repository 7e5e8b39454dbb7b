#include "qhs/homspace.hpp"

#include <cstdlib>

#include "qhs/errors.hpp"
#include "qhs/linalg.hpp"

namespace qhs {

namespace {

void validate_flag(const AlgebraContext& ctx, const std::vector<int>& flag) {
  if (flag.empty()) throw InvalidFlagType("flag type must be nonempty");
  for (std::size_t k = 0; k < flag.size(); ++k) {
    if (flag[k] < 1 || flag[k] >= ctx.n) throw InvalidFlagType("flag steps must lie in 1..n-1");
    if (k > 0 && flag[k] <= flag[k - 1]) throw InvalidFlagType("flag steps must strictly increase");
  }
}

IndexTuple iota_tuple(int m) {
  IndexTuple t(m);
  for (int k = 0; k < m; ++k) t[k] = k + 1;
  return t;
}

TensorElement tensor_project_right(const TensorElement& t, const std::vector<bool>& killed) {
  TensorElement out(t.n());
  for (const auto& [key, c] : t.terms()) {
    bool dead = false;
    for (uint16_t p : key.second)
      if (killed[p]) {
        dead = true;
        break;
      }
    if (!dead) out.add_term(key.first, key.second, c);
  }
  return out;
}

int component_dim_bound() {
  if (const char* s = std::getenv("QHS_MAX_COMPONENT_DIM")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 200;
}

}  // namespace

std::vector<bool> flag_killed_mask(const AlgebraContext& ctx, const std::vector<int>& flag) {
  std::vector<bool> killed(ctx.n * ctx.n, false);
  for (int i = 1; i <= ctx.n; ++i)
    for (int j = 1; j <= ctx.n; ++j)
      for (int m : flag)
        if (j <= m && m < i) killed[pos_encode(ctx, i, j)] = true;
  return killed;
}

ParabolicContext parabolic_context(const AlgebraContext& ctx, const std::vector<int>& flag,
                                   QElement d) {
  validate_flag(ctx, flag);
  ParabolicContext pc;
  pc.base = ctx;
  pc.flag = flag;
  pc.killed = flag_killed_mask(ctx, flag);
  pc.t = specialize_q1(d);
  pc.d = std::move(d);
  return pc;
}

ParabolicContext grassmannian_context(const AlgebraContext& ctx, int r) {
  ParabolicContext pc = parabolic_context(ctx, {r}, quantum_minor(ctx, iota_tuple(r), iota_tuple(r)));
  if (!(counit(pc.d) == LaurentPoly(1))) throw InvalidBlock("section has counit != 1");
  if (project_killed(pc.d, pc.killed).is_zero()) throw InvalidBlock("section dies under pi");
  return pc;
}

ParabolicContext flag_section(const AlgebraContext& ctx, const std::vector<int>& type) {
  validate_flag(ctx, type);
  QElement d = QElement::scalar(ctx, 1);
  for (int m : type) d = multiply(d, quantum_minor(ctx, iota_tuple(m), iota_tuple(m)));
  return parabolic_context(ctx, type, std::move(d));
}

std::vector<QElement> flag_spanning_set(const ParabolicContext& pc) {
  std::vector<QElement> out;
  for (int m : pc.flag) {
    for (const IndexTuple& I : index_tuples(pc.base.n, m))
      out.push_back(quantum_minor(pc.base, I, iota_tuple(m)));
  }
  return out;
}

TensorElement delta_pi(const ParabolicContext& pc, const QElement& f) {
  return tensor_project_right(coproduct(f), pc.killed);
}

std::string section_class_str(SectionClass c) {
  switch (c) {
    case SectionClass::not_section: return "not_section";
    case SectionClass::pre_quantum: return "pre_quantum";
    case SectionClass::quantum: return "quantum";
  }
  return "not_section";
}

SectionReport classify_section(const ParabolicContext& pc,
                               const std::vector<QElement>& spanning_set) {
  SectionReport rep;
  QElement pd = project_killed(pc.d, pc.killed);
  if (!(counit(pc.d) == LaurentPoly(1)) || pd.is_zero() ||
      !(delta_pi(pc, pc.d) == tensor_of(pc.d, pd)) || !(specialize_q1(pc.d) == pc.t)) {
    rep.classification = SectionClass::not_section;
    rep.witness = pc.d;
    return rep;
  }
  rep.classification = SectionClass::pre_quantum;
  for (const QElement& s : spanning_set) {
    if (!project_killed(commutator(pc.d, s), pc.killed).is_zero()) {
      rep.witness = s;
      return rep;
    }
  }
  rep.classification = SectionClass::quantum;
  return rep;
}

std::optional<int> semi_invariant_degree(const ParabolicContext& pc, const QElement& l,
                                         int max_n) {
  TensorElement lhs = delta_pi(pc, l);
  QElement dpow = QElement::scalar(pc.base, 1);
  for (int k = 0; k <= max_n; ++k) {
    if (lhs == tensor_of(l, project_killed(dpow, pc.killed))) return k;
    dpow = multiply(dpow, pc.d);
  }
  return std::nullopt;
}

SemiInvariantComponent solve_semi_invariants(const ParabolicContext& pc, int degree, int k) {
  std::vector<Word> basis = homog_basis(pc.base, k);
  int dim = static_cast<int>(basis.size());
  if (dim > component_dim_bound())
    throw ComponentTooLarge("homogeneous component dimension exceeds QHS_MAX_COMPONENT_DIM");

  QElement rhs = project_killed(element_pow(pc.d, degree), pc.killed);

  std::map<TensorElement::Key, SparseRow, TensorElement::KeyLess> eqs;
  for (int col = 0; col < dim; ++col) {
    QElement w(pc.base.n);
    w.add_term(basis[col], LaurentPoly(1));
    TensorElement residual = delta_pi(pc, w);
    residual -= tensor_of(w, rhs);
    for (const auto& [key, c] : residual.terms()) eqs[key][col] = c;
  }
  std::vector<SparseRow> rows;
  rows.reserve(eqs.size());
  for (auto& [key, row] : eqs) rows.push_back(std::move(row));

  SemiInvariantComponent out;
  out.degree = degree;
  for (const auto& v : nullspace(rows, dim)) {
    QElement l(pc.base.n);
    for (int col = 0; col < dim; ++col)
      if (!v[col].is_zero()) l.add_term(basis[col], v[col]);
    out.basis.push_back(std::move(l));
  }
  return out;
}

PluckerReport plucker_relations(const ParabolicContext& pc) {
  if (pc.flag.size() != 1) throw InvalidFlagType("Plucker relations need a Grassmannian context");
  int r = pc.r();
  std::vector<IndexTuple> tuples = index_tuples(pc.base.n, r);
  std::vector<QElement> minors;
  minors.reserve(tuples.size());
  for (const IndexTuple& I : tuples) minors.push_back(quantum_minor(pc.base, I, iota_tuple(r)));

  PluckerReport rep;
  std::map<Word, SparseRow, GradedLex> eqs;
  int col = 0;
  for (std::size_t a = 0; a < tuples.size(); ++a) {
    for (std::size_t b = a; b < tuples.size(); ++b) {
      rep.products.emplace_back(tuples[a], tuples[b]);
      QElement prod = multiply(minors[a], minors[b]);
      for (const auto& [w, c] : prod.terms()) eqs[w][col] = c;
      ++col;
    }
  }
  std::vector<SparseRow> rows;
  rows.reserve(eqs.size());
  for (auto& [w, row] : eqs) rows.push_back(std::move(row));
  rep.kernel = nullspace(rows, col);
  rep.rank = col - static_cast<int>(rep.kernel.size());
  return rep;
}

namespace {

// Exponent a with lhs == q^a * rhs, if any.
std::optional<int> q_power_ratio(const QElement& lhs, const QElement& rhs) {
  if (rhs.is_zero()) return lhs.is_zero() ? std::optional<int>(0) : std::nullopt;
  const auto& [w, c] = *rhs.terms().begin();
  LaurentPoly lc = lhs.coeff(w);
  auto ratio = lp_divide_exact(lc, c);
  if (!ratio || ratio->terms().size() != 1) return std::nullopt;
  const auto& [exp, coef] = *ratio->terms().begin();
  if (coef != 1) return std::nullopt;
  QElement scaled = rhs;
  scaled.scale(LaurentPoly::monomial(1, exp));
  if (!(lhs == scaled)) return std::nullopt;
  return exp;
}

struct OreArith {
  const AlgebraContext& ctx;
  const QElement& d0;
  std::vector<int> letter_twist;  // by position; only columns <= r are used

  int word_weight(const Word& w) const {
    int total = 0;
    for (uint16_t p : w) total += letter_twist[p];
    return total;
  }

  // Conjugate f through d0^{-power}: d0^{-p} m = q^{-p w(m)} m d0^{-p}.
  QElement shift(const QElement& f, int power) const {
    QElement out(ctx.n);
    for (const auto& [w, c] : f.terms())
      out.add_term(w, c * LaurentPoly::monomial(1, -power * word_weight(w)));
    return out;
  }

  OreFraction mul(const OreFraction& x, const OreFraction& y) const {
    return {multiply(x.numerator, shift(y.numerator, x.d0_power)), x.d0_power + y.d0_power};
  }

  // x - y over the common denominator power.
  QElement sub_numerator(const OreFraction& x, const OreFraction& y) const {
    int p = std::max(x.d0_power, y.d0_power);
    QElement nx = multiply(x.numerator, element_pow(d0, p - x.d0_power));
    QElement ny = multiply(y.numerator, element_pow(d0, p - y.d0_power));
    return nx - ny;
  }
};

}  // namespace

BigCellReport bigcell_manin_check(const ParabolicContext& pc) {
  if (pc.flag.size() != 1) throw InvalidFlagType("big cell needs a Grassmannian context");
  const AlgebraContext& ctx = pc.base;
  int n = ctx.n, r = pc.r();
  const QElement& d0 = pc.d;

  BigCellReport rep;

  // Twists of the individual generators in columns 1..r.
  OreArith ore{ctx, d0, std::vector<int>(n * n, 0)};
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= r; ++j) {
      QElement g = QElement::generator(ctx, i, j);
      auto a = q_power_ratio(multiply(d0, g), multiply(g, d0));
      if (!a) throw NoQCommutation("generator does not q-commute with D_0");
      ore.letter_twist[pos_encode(ctx, i, j)] = *a;
    }
  }

  // The off-block minors Delta_ij, their twists, and the fractions t_ij.
  std::vector<std::pair<int, int>> gens;  // (i, j), i > r >= j
  std::vector<OreFraction> t;
  for (int i = r + 1; i <= n; ++i) {
    for (int j = 1; j <= r; ++j) {
      IndexTuple rows;
      for (int k = 1; k <= r; ++k)
        if (k != j) rows.push_back(k);
      rows.push_back(i);  // i > r keeps the tuple increasing
      QElement delta = quantum_minor(ctx, rows, iota_tuple(r));
      auto a = q_power_ratio(multiply(d0, delta), multiply(delta, d0));
      if (!a) throw NoQCommutation("Delta_ij does not q-commute with D_0");
      rep.twists[{i, j}] = *a;
      delta.scale(minus_q_pow(r - j));
      gens.emplace_back(i, j);
      t.push_back(OreFraction{std::move(delta), 1});
    }
  }

  // Manin relations: t_ij is the (a, b) = (i - r, r + 1 - j) entry of an
  // (n-r) x r quantum matrix. (Omitting row j from D_0 makes the column
  // index contravariant, hence the reversal.)
  rep.ok = true;
  rep.detail = "generator (i,j) sits at matrix position (i-r, r+1-j)";
  std::map<std::pair<int, int>, std::size_t> at;  // (a, b) -> generator index
  for (std::size_t k = 0; k < gens.size(); ++k)
    at[{gens[k].first - r, r + 1 - gens[k].second}] = k;
  LaurentPoly qq = LaurentPoly::q() - LaurentPoly::monomial(1, -1);
  auto fail = [&](std::size_t u, std::size_t v) {
    rep.ok = false;
    rep.detail = "Manin relation failed for t[" + std::to_string(gens[u].first) + "," +
                 std::to_string(gens[u].second) + "], t[" + std::to_string(gens[v].first) + "," +
                 std::to_string(gens[v].second) + "]";
  };
  for (auto pu = at.begin(); pu != at.end(); ++pu) {
    for (auto pv = std::next(pu); pv != at.end(); ++pv) {
      auto [a1, b1] = pu->first;  // map order: a1 <= a2, and b1 < b2 when a1 == a2
      auto [a2, b2] = pv->first;
      std::size_t u = pu->second, v = pv->second;
      OreFraction uv = ore.mul(t[u], t[v]);
      OreFraction vu = ore.mul(t[v], t[u]);
      QElement residual(ctx.n);
      if (a1 == a2 || b1 == b2) {
        // Same row or column: t_u t_v = q t_v t_u.
        OreFraction qvu = vu;
        qvu.numerator.scale(LaurentPoly::q());
        residual = ore.sub_numerator(uv, qvu);
      } else if (b1 > b2) {
        // Antidiagonal: commute.
        residual = ore.sub_numerator(uv, vu);
      } else {
        // Diagonal: [t_u, t_v] = (q - q^-1) t_{(a1,b2)} t_{(a2,b1)}.
        OreFraction corr = ore.mul(t[at.at({a1, b2})], t[at.at({a2, b1})]);
        corr.numerator.scale(qq);
        residual = ore.sub_numerator(uv, vu) - corr.numerator;
      }
      ++rep.relations_checked;
      if (!residual.is_zero()) {
        fail(u, v);
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace qhs
