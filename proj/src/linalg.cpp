#include "qhs/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>

#include "qhs/errors.hpp"

namespace qhs {

namespace {

void drop_zero_entries(SparseRow& row) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->second.is_zero())
      it = row.erase(it);
    else
      ++it;
  }
}

// a*r - b*p with sparse accumulation.
SparseRow row_combine(const LaurentPoly& a, const SparseRow& r, const LaurentPoly& b,
                      const SparseRow& p) {
  SparseRow out;
  for (const auto& [col, val] : r) out[col] = a * val;
  for (const auto& [col, val] : p) {
    auto it = out.find(col);
    if (it == out.end())
      out[col] = -(b * val);
    else
      it->second -= b * val;
  }
  drop_zero_entries(out);
  return out;
}

LaurentPoly lp_lcm(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly g = lp_gcd(a, b);
  auto q = lp_divide_exact(a * b, g);
  return *q;
}

}  // namespace

void normalize_row_primitive(SparseRow& row) {
  drop_zero_entries(row);
  if (row.empty()) return;

  // Polynomial content (monic gcd across entries).
  LaurentPoly g = row.begin()->second;
  for (auto it = std::next(row.begin()); it != row.end(); ++it) {
    g = lp_gcd(g, it->second);
    if (g.terms().size() == 1 && g.min_exp() == 0) break;  // already a constant
  }
  if (!g.is_one()) {
    for (auto& [col, val] : row) val = *lp_divide_exact(val, g);
  }

  // Rational content: gcd of numerators over lcm of denominators.
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [col, val] : row) {
    for (const auto& [exp, c] : val.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
  }
  Rational scale(den_lcm, num_gcd);  // inverse of the content
  scale.canonicalize();
  if (scale < 0) scale = -scale;

  // q-power shift to make the lowest exponent in the row zero.
  int min_e = row.begin()->second.min_exp();
  for (const auto& [col, val] : row) min_e = std::min(min_e, val.min_exp());

  // Sign: highest-exponent coefficient of the first entry positive, so that
  // pivots like q - 1 or q^2 - 1 keep their natural orientation.
  const LaurentPoly& lead = row.begin()->second;
  if (lead.terms().rbegin()->second < 0) scale = -scale;

  LaurentPoly factor = LaurentPoly::monomial(scale, -min_e);
  for (auto& [col, val] : row) val *= factor;
}

EchelonForm echelon(std::vector<SparseRow> rows, int ncols) {
  EchelonForm ef;
  ef.ncols = ncols;
  for (SparseRow& row : rows) {
    normalize_row_primitive(row);
    // Forward-reduce against existing pivot rows.
    for (std::size_t i = 0; i < ef.rows.size() && !row.empty(); ++i) {
      auto it = row.find(ef.pivot_cols[i]);
      if (it == row.end()) continue;
      LaurentPoly pc = ef.rows[i].at(ef.pivot_cols[i]);
      row = row_combine(pc, row, it->second, ef.rows[i]);
      normalize_row_primitive(row);
    }
    if (row.empty()) continue;
    int piv = row.begin()->first;
    if (piv >= ncols) throw SizeMismatch("row has entries beyond column count");
    // Back-eliminate the new pivot column from the existing rows.
    LaurentPoly pc = row.at(piv);
    for (std::size_t i = 0; i < ef.rows.size(); ++i) {
      auto it = ef.rows[i].find(piv);
      if (it == ef.rows[i].end()) continue;
      ef.rows[i] = row_combine(pc, ef.rows[i], it->second, row);
      normalize_row_primitive(ef.rows[i]);
    }
    auto pos = std::lower_bound(ef.pivot_cols.begin(), ef.pivot_cols.end(), piv);
    std::size_t idx = pos - ef.pivot_cols.begin();
    ef.pivot_cols.insert(pos, piv);
    ef.rows.insert(ef.rows.begin() + idx, std::move(row));
  }
  return ef;
}

int rank_of(std::vector<SparseRow> rows, int ncols) {
  return echelon(std::move(rows), ncols).rank();
}

std::vector<std::vector<LaurentPoly>> nullspace(const std::vector<SparseRow>& rows, int ncols) {
  EchelonForm ef = echelon(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : ef.pivot_cols) is_pivot[p] = true;

  std::vector<std::vector<LaurentPoly>> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    // Common multiple of the pivot coefficients of the rows touching column f.
    LaurentPoly common(1);
    for (std::size_t i = 0; i < ef.rows.size(); ++i) {
      if (ef.rows[i].count(f)) common = lp_lcm(common, ef.rows[i].at(ef.pivot_cols[i]));
    }
    std::vector<LaurentPoly> v(ncols, LaurentPoly());
    v[f] = common;
    for (std::size_t i = 0; i < ef.rows.size(); ++i) {
      auto it = ef.rows[i].find(f);
      if (it == ef.rows[i].end()) continue;
      LaurentPoly ratio = *lp_divide_exact(common, ef.rows[i].at(ef.pivot_cols[i]));
      v[ef.pivot_cols[i]] = -(ratio * it->second);
    }
    SparseRow sv;
    for (int c = 0; c < ncols; ++c)
      if (!v[c].is_zero()) sv[c] = v[c];
    normalize_row_primitive(sv);
    std::vector<LaurentPoly> out(ncols, LaurentPoly());
    for (const auto& [col, val] : sv) out[col] = val;
    basis.push_back(std::move(out));
  }
  return basis;
}

bool in_row_span(const EchelonForm& basis, SparseRow v) {
  normalize_row_primitive(v);
  for (std::size_t i = 0; i < basis.rows.size() && !v.empty(); ++i) {
    auto it = v.find(basis.pivot_cols[i]);
    if (it == v.end()) continue;
    LaurentPoly pc = basis.rows[i].at(basis.pivot_cols[i]);
    v = row_combine(pc, v, it->second, basis.rows[i]);
    normalize_row_primitive(v);
  }
  return v.empty();
}

bool same_row_span(const std::vector<SparseRow>& a, const std::vector<SparseRow>& b, int ncols) {
  EchelonForm ea = echelon(a, ncols);
  EchelonForm eb = echelon(b, ncols);
  return ea.pivot_cols == eb.pivot_cols && ea.rows == eb.rows;
}

}  // namespace qhs
