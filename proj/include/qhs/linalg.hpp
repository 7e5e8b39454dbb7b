#pragma once

#include <map>
#include <vector>

#include "qhs/laurent.hpp"

namespace qhs {

// Exact linear algebra over the fraction field Q(q), with all data kept as
// LaurentPoly rows (denominators cleared). Rows are sparse: column -> nonzero.
using SparseRow = std::map<int, LaurentPoly>;

// Canonical scaling of a row: divide out the polynomial content (monic gcd),
// the rational content, and the q-power shift; make the lowest-exponent
// coefficient of the first entry positive. Row-space representatives become
// unique, so echelon forms are canonical.
void normalize_row_primitive(SparseRow& row);

struct EchelonForm {
  int ncols = 0;
  std::vector<SparseRow> rows;  // fully reduced, sorted by pivot column
  std::vector<int> pivot_cols;
  int rank() const { return static_cast<int>(rows.size()); }
};

// Fraction-free Gauss-Jordan elimination: cross-multiplied row combinations
// with primitive normalization after every step. The result is the unique
// primitive-scaled reduced echelon basis of the row space.
EchelonForm echelon(std::vector<SparseRow> rows, int ncols);

int rank_of(std::vector<SparseRow> rows, int ncols);

// Basis of the solution space of A x = 0, one vector per free column, in the
// reduced-echelon convention (free coordinate = cleared common denominator,
// pivots solved), each vector primitive-normalized. Dense output.
std::vector<std::vector<LaurentPoly>> nullspace(const std::vector<SparseRow>& rows, int ncols);

bool in_row_span(const EchelonForm& basis, SparseRow v);
bool same_row_span(const std::vector<SparseRow>& a, const std::vector<SparseRow>& b, int ncols);

}  // namespace qhs
