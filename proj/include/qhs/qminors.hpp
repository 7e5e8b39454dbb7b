#pragma once

#include <optional>
#include <vector>

#include "qhs/qmatrix.hpp"

namespace qhs {

// Strictly increasing 1-based row/column index tuples I = (i_1,...,i_r).
using IndexTuple = std::vector<int>;

void validate_index_tuple(const AlgebraContext& ctx, const IndexTuple& I);

// All strictly increasing r-tuples from 1..n, in lexicographic order.
std::vector<IndexTuple> index_tuples(int n, int r);

// D^I_J = sum over permutations sigma of (-q)^{l(sigma)} x_{i_1 j_sigma(1)}
// ... x_{i_r j_sigma(r)}. Row-ordered products are already PBW-normal.
QElement quantum_minor(const AlgebraContext& ctx, const IndexTuple& I, const IndexTuple& J);
QElement quantum_det(const AlgebraContext& ctx);

// Delta(D^I_J) = sum_K D^I_K (x) D^K_J and eps(D^I_J) = [I == J].
bool check_minor_coproduct(const AlgebraContext& ctx, const IndexTuple& I, const IndexTuple& J);

// f commutes with every generator x_ij.
bool check_central(const AlgebraContext& ctx, const QElement& f);

// Element of O_q(GL_n) = O_q(M_n)[det_q^{-1}]: numerator * det_q^{-det_power}.
// det_q is central, so fractions combine componentwise.
struct CentralFraction {
  QElement numerator;
  int det_power = 0;
};

// Exact division by det_q (coefficients stay in the Laurent ring), or nullopt.
std::optional<QElement> divide_by_det(const AlgebraContext& ctx, const QElement& f);

// Cancel det_q factors out of the numerator while possible.
CentralFraction frac_reduce(const AlgebraContext& ctx, CentralFraction f);

CentralFraction frac_mul(const AlgebraContext& ctx, const CentralFraction& x,
                         const CentralFraction& y);
CentralFraction frac_add(const AlgebraContext& ctx, const CentralFraction& x,
                         const CentralFraction& y);
bool frac_eq(const AlgebraContext& ctx, const CentralFraction& x, const CentralFraction& y);

// Substitute det_q = 1: the SL_n image of a GL_n fraction.
QElement sl_reduce(const CentralFraction& f);

}  // namespace qhs
