#include "qhs/qdp.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "qhs/errors.hpp"

namespace qhs {

LaurentPoly YPolynomial::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void YPolynomial::add_term(const Word& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

std::string y_monomial_str(const AlgebraContext& ctx, const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (uint16_t p : w) {
    if (!first) os << '*';
    os << "y[" << pos_row(ctx, p) << ',' << pos_col(ctx, p) << ']';
    first = false;
  }
  return os.str();
}

void print_term(std::ostringstream& os, bool first, const LaurentPoly& c, const std::string& mono) {
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

// Indices of diagonal letters within the word.
std::vector<int> diagonal_slots(const AlgebraContext& ctx, const Word& w) {
  std::vector<int> slots;
  for (std::size_t k = 0; k < w.size(); ++k)
    if (pos_row(ctx, w[k]) == pos_col(ctx, w[k])) slots.push_back(static_cast<int>(k));
  return slots;
}

Word keep_subword(const Word& w, const std::vector<int>& slots, unsigned mask) {
  std::vector<bool> drop(w.size(), false);
  for (std::size_t t = 0; t < slots.size(); ++t)
    if (!(mask & (1u << t))) drop[slots[t]] = true;
  Word out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k)
    if (!drop[k]) out.push_back(w[k]);
  return out;
}

}  // namespace

std::string YPolynomial::str() const {
  if (terms_.empty()) return "0";
  AlgebraContext ctx{n_};
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    print_term(os, first, c, w.empty() ? "" : y_monomial_str(ctx, w));
    first = false;
  }
  return os.str();
}

YPolynomial shift_to_identity(const AlgebraContext& ctx, const QElement& f) {
  if (f.n() != ctx.n) throw ContextMismatch("element built for a different n");
  YPolynomial out(ctx.n);
  for (const auto& [w, c] : f.terms()) {
    std::vector<int> slots = diagonal_slots(ctx, w);
    // x_p = 1 + y_p on the diagonal, x_p = y_p off it: sum over kept subsets.
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask)
      out.add_term(keep_subword(w, slots, mask), c);
  }
  return out;
}

QElement unshift(const AlgebraContext& ctx, const YPolynomial& g) {
  if (g.n() != ctx.n) throw ContextMismatch("element built for a different n");
  QElement out(ctx.n);
  for (const auto& [w, c] : g.terms()) {
    std::vector<int> slots = diagonal_slots(ctx, w);
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
      unsigned dropped = static_cast<unsigned>(slots.size()) - __builtin_popcount(mask);
      LaurentPoly term = c;
      if (dropped % 2) term = -term;
      out.add_term(keep_subword(w, slots, mask), term);
    }
  }
  return out;
}

bool LinearPart::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

std::string LinearPart::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t p = 0; p < coeffs.size(); ++p) {
    const Rational& c = coeffs[p];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    if (a != 1) os << a.get_str() << '*';
    os << labels[p];
    first = false;
  }
  return first ? "0" : os.str();
}

namespace {

std::vector<std::string> dual_labels(const AlgebraContext& ctx) {
  std::vector<std::string> labels(ctx.n * ctx.n);
  for (int p = 0; p < ctx.n * ctx.n; ++p) {
    int i = pos_row(ctx, p), j = pos_col(ctx, p);
    labels[p] =
        "e[" + std::to_string(i) + "," + std::to_string(j) + "]";
  }
  return labels;
}

}  // namespace

LinearPart linear_part_at_identity(const AlgebraContext& ctx, const QElement& f) {
  if (f.n() != ctx.n) throw ContextMismatch("element built for a different n");
  if (counit(f).eval_at_one() != 0)
    throw NotInAugmentationIdeal("counit does not vanish at q = 1");
  LinearPart lp;
  lp.n = ctx.n;
  lp.coeffs.assign(ctx.n * ctx.n, 0);
  lp.labels = dual_labels(ctx);
  YPolynomial ys = shift_to_identity(ctx, f);
  for (const auto& [w, c] : ys.terms())
    if (w.size() == 1) lp.coeffs[w[0]] = c.eval_at_one();
  return lp;
}

std::vector<std::pair<std::string, QElement>> chi_generators(const AlgebraContext& ctx) {
  std::vector<std::pair<std::string, QElement>> out;
  LaurentPoly one = LaurentPoly::monomial(1, 0);
  for (int p = 0; p < ctx.n * ctx.n; ++p) {
    int i = pos_row(ctx, p), j = pos_col(ctx, p);
    QElement y = QElement::generator(ctx, i, j);
    std::string label;
    if (i == j) {
      y -= QElement::scalar(ctx, one);
      label = "g[" + std::to_string(i) + "]";
    } else {
      label = "e[" + std::to_string(i) + "," + std::to_string(j) + "]";
    }
    out.emplace_back(std::move(label), std::move(y));
  }
  return out;
}

namespace {

// Coordinates of b in the column span, free variables zero; nullopt when
// inconsistent.
std::optional<Vec> solve_in_span(const std::vector<Vec>& cols, const Vec& b) {
  std::size_t nr = b.size(), nc = cols.size();
  std::vector<Vec> m(nr, Vec(nc + 1, 0));
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) m[r][c] = cols[c][r];
    m[r][nc] = b[r];
  }
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t rank = 0;
  for (std::size_t c = 0; c < nc && rank < nr; ++c) {
    std::size_t piv = rank;
    while (piv < nr && m[piv][c] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(m[rank], m[piv]);
    Rational inv = 1 / m[rank][c];
    for (Rational& x : m[rank]) x *= inv;
    for (std::size_t r = 0; r < nr; ++r) {
      if (r != rank && m[r][c] != 0) {
        Rational f = m[r][c];
        for (std::size_t k = 0; k <= nc; ++k) m[r][k] -= f * m[rank][k];
      }
    }
    pivots.emplace_back(rank, c);
    ++rank;
  }
  for (std::size_t r = rank; r < nr; ++r)
    if (m[r][nc] != 0) return std::nullopt;
  Vec x(nc, 0);
  for (auto [r, c] : pivots) x[c] = m[r][nc];
  return x;
}

}  // namespace

LieBialgebra dual_structure_constants(
    const AlgebraContext& ctx, const std::vector<std::pair<std::string, QElement>>& generators) {
  std::size_t m = generators.size();
  std::vector<std::string> labels;
  std::vector<Vec> lin;
  for (const auto& [label, g] : generators) {
    labels.push_back(label);
    lin.push_back(linear_part_at_identity(ctx, g).coeffs);
  }
  LieBialgebra out(static_cast<int>(m), labels);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      QElement h = commutator(generators[a].second, generators[b].second);
      QElement rescaled(ctx.n);
      for (const auto& [w, c] : h.terms()) rescaled.add_term(w, c.div_qm1());
      Vec lp = linear_part_at_identity(ctx, rescaled).coeffs;
      std::optional<Vec> coords = solve_in_span(lin, lp);
      if (!coords)
        throw Error("commutator linear part outside the span of the generators' linear parts");
      out.set_bracket(static_cast<int>(a), static_cast<int>(b), std::move(*coords));
    }
  }
  return out;
}

namespace {

QElement truncated_inverse_x(const AlgebraContext& ctx, const QElement& f, int order) {
  if (f.n() != ctx.n) throw ContextMismatch("element built for a different n");
  LaurentPoly one = LaurentPoly::monomial(1, 0);
  if (!(counit(f) == one)) throw NotAUnit("counit != 1");
  QElement u = QElement::scalar(ctx, one) - f;
  QElement acc = QElement::scalar(ctx, one);
  QElement pw = QElement::scalar(ctx, one);
  for (int k = 1; k <= order; ++k) {
    pw = multiply(pw, u);
    acc += pw;
  }
  return acc;
}

}  // namespace

YPolynomial truncated_unit_inverse(const AlgebraContext& ctx, const QElement& f, int order) {
  return shift_to_identity(ctx, truncated_inverse_x(ctx, f, order));
}

bool filtration_certificate(const AlgebraContext& ctx, const FiltrationElement& fe) {
  for (const auto& [k, part] : fe.parts) {
    if (k < 0) return false;
    YPolynomial ys = shift_to_identity(ctx, part);
    for (const auto& [w, c] : ys.terms()) {
      std::optional<int> val = c.qm1_valuation();
      if (!val) continue;  // zero coefficient
      if (static_cast<int>(w.size()) + *val < k) return false;
    }
  }
  return true;
}

PPerpReport verify_p_perp(const AlgebraContext& ctx, int r, int order) {
  int n = ctx.n;
  if (r < 1 || r >= n) throw InvalidBlock("need 1 <= r < n");
  PPerpReport rep;
  rep.n = n;
  rep.r = r;

  IndexTuple cols(r);
  for (int k = 0; k < r; ++k) cols[k] = k + 1;
  QElement d0 = quantum_minor(ctx, cols, cols);
  QElement inv = truncated_inverse_x(ctx, d0, order);

  int dim = n * n;
  bool entries_ok = true;
  std::vector<Vec> images;
  for (int i = r + 1; i <= n; ++i) {
    for (int j = 1; j <= r; ++j) {
      IndexTuple rows;
      for (int k = 1; k <= r; ++k)
        if (k != j) rows.push_back(k);
      rows.push_back(i);
      std::sort(rows.begin(), rows.end());
      QElement delta = quantum_minor(ctx, rows, cols);
      QElement t = multiply(delta, inv);

      PPerpEntry e;
      e.i = i;
      e.j = j;
      int p = pos_encode(ctx, i, j);

      Vec lu = linear_part_at_identity(ctx, t).coeffs;
      bool clean = true;
      for (int k = 0; k < dim; ++k)
        if (k != p && lu[k] != 0) clean = false;
      if (clean && lu[p] == 1) e.unnormalized_sign = 1;
      if (clean && lu[p] == -1) e.unnormalized_sign = -1;
      e.sign_matches_rule = e.unnormalized_sign == ((r - j) % 2 == 0 ? 1 : -1);

      QElement tn = t;
      tn.scale(minus_q_pow(r - j));
      Vec ln = linear_part_at_identity(ctx, tn).coeffs;
      e.normalized_plus = true;
      for (int k = 0; k < dim; ++k)
        if (ln[k] != (k == p ? 1 : 0)) e.normalized_plus = false;

      entries_ok = entries_ok && e.normalized_plus && e.sign_matches_rule;
      Vec img(dim, 0);
      img[p] = 1;
      images.push_back(std::move(img));
      rep.entries.push_back(std::move(e));
    }
  }

  LieBialgebra g = build_gl(n);
  std::vector<Vec> pgens;
  for (int p = 0; p < dim; ++p) {
    int i = pos_row(ctx, p), j = pos_col(ctx, p);
    if (!(i > r && j <= r)) {
      Vec v(dim, 0);
      v[p] = 1;
      pgens.push_back(std::move(v));
    }
  }
  Subspace pperp = perp(Subspace::span(dim, pgens));
  rep.dim = pperp.dim();
  rep.span_is_p_perp = Subspace::span(dim, images).basis() == pperp.basis();

  LieBialgebra gs = build_gl_dual(n);
  rep.closed_under_bracket = true;
  rep.abelian = true;
  for (const Vec& u : images) {
    for (const Vec& v : images) {
      Vec b = gs.bracket(u, v);
      if (!pperp.contains(b)) rep.closed_under_bracket = false;
      if (!std::all_of(b.begin(), b.end(), [](const Rational& c) { return c == 0; }))
        rep.abelian = false;
    }
  }

  rep.sign_rule =
      "mu[i,j] = (q-1)^-1 (-q)^(r-j) Delta[i,j] D0^-1 maps to +e[i,j]; dropping the "
      "(-q)^(r-j) prefactor gives (-1)^(r-j) e[i,j]";
  rep.ok = entries_ok && rep.span_is_p_perp && rep.closed_under_bracket && rep.abelian &&
           rep.dim == r * (n - r);
  return rep;
}

}  // namespace qhs
