#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qhs/liebialg.hpp"
#include "qhs/qminors.hpp"

namespace qhs {

// Polynomial in the shifted generators y_ij = x_ij - delta_ij, stored like a
// QElement: PBW-ordered words over the same position alphabet with Laurent
// coefficients. Subwords of weakly increasing words stay weakly increasing,
// so the substitutions x = delta + y and y = x - delta expand with no
// second rewriting pass.
class YPolynomial {
 public:
  YPolynomial() = default;
  explicit YPolynomial(int n) : n_(n) {}

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, LaurentPoly, GradedLex>& terms() const { return terms_; }
  LaurentPoly coeff(const Word& w) const;

  void add_term(const Word& w, const LaurentPoly& c);
  friend bool operator==(const YPolynomial& a, const YPolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string str() const;  // like QElement::str with y[i,j] letters

 private:
  int n_ = 1;
  std::map<Word, LaurentPoly, GradedLex> terms_;
};

// Exact rewrite of f as a polynomial in the y's (substitute x = delta + y
// and expand diagonal letters over kept/dropped subsets).
YPolynomial shift_to_identity(const AlgebraContext& ctx, const QElement& f);

// Inverse substitution y = x - delta; unshift(shift_to_identity(f)) = f.
QElement unshift(const AlgebraContext& ctx, const YPolynomial& g);

// Class of f in the cotangent space at the identity: the coefficient of
// y_ij, evaluated at q = 1, labelled e[i,j] (g[i] on the diagonal).
struct LinearPart {
  int n = 0;
  Vec coeffs;  // length n^2, position order
  std::vector<std::string> labels;

  bool is_zero() const;
  std::string str() const;
};

// Throws NotInAugmentationIdeal unless eps(f) vanishes at q = 1.
LinearPart linear_part_at_identity(const AlgebraContext& ctx, const QElement& f);

// The rescaled generators chi_ij = (q-1)^{-1} y_ij, given by their level-1
// numerators y_ij with labels matching build_gl_dual, in position order.
std::vector<std::pair<std::string, QElement>> chi_generators(const AlgebraContext& ctx);

// For each generator pair: commutator, exact division by (q-1), linear part
// at the identity, re-expressed over the generators' own linear parts. The
// result carries the brackets only (cobracket zero). Throws
// NotInAugmentationIdeal for a generator outside the augmentation ideal,
// NotDivisible if a commutator fails the division, and Error if a linear
// part falls outside the span of the generators' linear parts.
LieBialgebra dual_structure_constants(
    const AlgebraContext& ctx, const std::vector<std::pair<std::string, QElement>>& generators);

// Sum_{k=0}^{order} (1-f)^k: inverse of f modulo y-degree > order. Throws
// NotAUnit unless eps(f) = 1 exactly.
YPolynomial truncated_unit_inverse(const AlgebraContext& ctx, const QElement& f, int order);

// Sum_k (q-1)^{-k} part_k with part_k in the k-th power of the augmentation
// ideal, certified through the y-expansion: every term c*y^m of part_k must
// have |m| + val_{q-1}(c) >= k.
struct FiltrationElement {
  std::map<int, QElement> parts;
};

bool filtration_certificate(const AlgebraContext& ctx, const FiltrationElement& fe);

struct PPerpEntry {
  int i = 0, j = 0;
  bool normalized_plus = false;  // (q-1)^{-1}(-q)^{r-j} Delta_ij D_0^{-1} -> +e[i,j]
  int unnormalized_sign = 0;     // (q-1)^{-1} Delta_ij D_0^{-1} -> sign * e[i,j], else 0
  bool sign_matches_rule = false;  // unnormalized_sign == (-1)^{r-j}
};

struct PPerpReport {
  bool ok = false;
  int n = 0, r = 0;
  std::vector<PPerpEntry> entries;  // i > r >= j, row-major
  bool span_is_p_perp = false;      // span{e[i,j]} = perp of the block parabolic
  bool closed_under_bracket = false;
  bool abelian = false;
  int dim = 0;  // r(n-r)
  std::string sign_rule;
};

// Linearize every big-cell generator through a truncated D_0 inverse and
// compare the images with the orthogonal complement of the parabolic inside
// the dual Lie algebra. Throws InvalidBlock unless 1 <= r < n.
PPerpReport verify_p_perp(const AlgebraContext& ctx, int r, int order = 3);

}  // namespace qhs
