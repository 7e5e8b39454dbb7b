#include "qhs/qminors.hpp"

#include <algorithm>
#include <map>

#include "qhs/errors.hpp"
#include "qhs/linalg.hpp"

namespace qhs {

void validate_index_tuple(const AlgebraContext& ctx, const IndexTuple& I) {
  if (I.empty() || static_cast<int>(I.size()) > ctx.n)
    throw IndexOutOfRange("index tuple length must be between 1 and n");
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (I[k] < 1 || I[k] > ctx.n) throw IndexOutOfRange("index outside 1..n");
    if (k > 0 && I[k] <= I[k - 1]) throw IndexOutOfRange("indices must strictly increase");
  }
}

std::vector<IndexTuple> index_tuples(int n, int r) {
  std::vector<IndexTuple> out;
  IndexTuple cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

QElement quantum_minor(const AlgebraContext& ctx, const IndexTuple& I, const IndexTuple& J) {
  validate_index_tuple(ctx, I);
  validate_index_tuple(ctx, J);
  if (I.size() != J.size()) throw SizeMismatch("row and column tuples differ in length");
  int r = static_cast<int>(I.size());

  std::vector<int> perm(r);
  for (int k = 0; k < r; ++k) perm[k] = k;
  QElement out(ctx.n);
  do {
    unsigned inv = 0;
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b)
        if (perm[a] > perm[b]) ++inv;
    Word w(r);
    for (int k = 0; k < r; ++k) w[k] = pos_encode(ctx, I[k], J[perm[k]]);
    out.add_term(std::move(w), minus_q_pow(inv));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

QElement quantum_det(const AlgebraContext& ctx) {
  IndexTuple all(ctx.n);
  for (int k = 0; k < ctx.n; ++k) all[k] = k + 1;
  return quantum_minor(ctx, all, all);
}

bool check_minor_coproduct(const AlgebraContext& ctx, const IndexTuple& I, const IndexTuple& J) {
  QElement d = quantum_minor(ctx, I, J);
  TensorElement lhs = coproduct(d);
  TensorElement rhs(ctx.n);
  for (const IndexTuple& K : index_tuples(ctx.n, static_cast<int>(I.size())))
    rhs += tensor_of(quantum_minor(ctx, I, K), quantum_minor(ctx, K, J));
  if (!(lhs == rhs)) return false;
  LaurentPoly eps = counit(d);
  return eps == (I == J ? LaurentPoly(1) : LaurentPoly());
}

bool check_central(const AlgebraContext& ctx, const QElement& f) {
  for (int i = 1; i <= ctx.n; ++i)
    for (int j = 1; j <= ctx.n; ++j)
      if (!commutator(f, QElement::generator(ctx, i, j)).is_zero()) return false;
  return true;
}

namespace {

std::map<int, QElement> homogeneous_parts(const AlgebraContext& ctx, const QElement& f) {
  std::map<int, QElement> parts;
  for (const auto& [w, c] : f.terms()) {
    int k = static_cast<int>(w.size());
    auto it = parts.find(k);
    if (it == parts.end()) it = parts.emplace(k, QElement(ctx.n)).first;
    it->second.add_term(w, c);
  }
  return parts;
}

// Divide one homogeneous component by det_q via an exact linear solve over
// the PBW basis, then verify by multiplying back.
std::optional<QElement> divide_part_by_det(const AlgebraContext& ctx, const QElement& part,
                                           int deg) {
  if (deg < ctx.n) return std::nullopt;
  QElement det = quantum_det(ctx);
  std::vector<Word> basis = homog_basis(ctx, deg - ctx.n);
  int ncols = static_cast<int>(basis.size()) + 1;  // unknowns + right-hand side
  int rhs_col = ncols - 1;

  std::map<Word, SparseRow, GradedLex> eqs;
  for (int col = 0; col < rhs_col; ++col) {
    QElement g(ctx.n);
    g.add_term(basis[col], LaurentPoly(1));
    QElement prod = multiply(g, det);
    for (const auto& [w, c] : prod.terms()) eqs[w][col] = c;
  }
  for (const auto& [w, c] : part.terms()) eqs[w][rhs_col] = -c;

  std::vector<SparseRow> rows;
  rows.reserve(eqs.size());
  for (auto& [w, row] : eqs) rows.push_back(std::move(row));

  for (const auto& v : nullspace(rows, ncols)) {
    if (v[rhs_col].is_zero()) continue;
    QElement g(ctx.n);
    bool exact = true;
    for (int col = 0; col < rhs_col && exact; ++col) {
      if (v[col].is_zero()) continue;
      auto c = lp_divide_exact(v[col], v[rhs_col]);
      if (!c) {
        exact = false;
        break;
      }
      g.add_term(basis[col], *c);
    }
    if (exact && multiply(g, det) == part) return g;
  }
  return std::nullopt;
}

}  // namespace

std::optional<QElement> divide_by_det(const AlgebraContext& ctx, const QElement& f) {
  if (f.is_zero()) return QElement(ctx.n);
  QElement out(ctx.n);
  for (const auto& [deg, part] : homogeneous_parts(ctx, f)) {
    auto g = divide_part_by_det(ctx, part, deg);
    if (!g) return std::nullopt;
    out += *g;
  }
  return out;
}

CentralFraction frac_reduce(const AlgebraContext& ctx, CentralFraction f) {
  while (f.det_power > 0) {
    auto g = divide_by_det(ctx, f.numerator);
    if (!g) break;
    f.numerator = *g;
    --f.det_power;
  }
  return f;
}

CentralFraction frac_mul(const AlgebraContext& ctx, const CentralFraction& x,
                         const CentralFraction& y) {
  CentralFraction out{multiply(x.numerator, y.numerator), x.det_power + y.det_power};
  return frac_reduce(ctx, out);
}

CentralFraction frac_add(const AlgebraContext& ctx, const CentralFraction& x,
                         const CentralFraction& y) {
  int m = std::max(x.det_power, y.det_power);
  QElement det = quantum_det(ctx);
  QElement num = multiply(x.numerator, element_pow(det, m - x.det_power));
  num += multiply(y.numerator, element_pow(det, m - y.det_power));
  return frac_reduce(ctx, CentralFraction{num, m});
}

bool frac_eq(const AlgebraContext& ctx, const CentralFraction& x, const CentralFraction& y) {
  QElement det = quantum_det(ctx);
  return multiply(x.numerator, element_pow(det, y.det_power)) ==
         multiply(y.numerator, element_pow(det, x.det_power));
}

QElement sl_reduce(const CentralFraction& f) { return f.numerator; }

}  // namespace qhs
