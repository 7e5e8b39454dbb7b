#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhs/laurent.hpp"

namespace qhs {

using Vec = std::vector<Rational>;

// Finite-dimensional Lie bialgebra over Q with dense structure-constant
// tables. Tensors live in dim^2 coordinates, index a*dim + b for b_a (x) b_b.
class LieBialgebra {
 public:
  LieBialgebra(int dim, std::vector<std::string> labels);

  int dim() const { return dim_; }
  const std::string& label(int i) const { return labels_[i]; }

  void set_bracket(int i, int j, Vec v);  // [b_i, b_j] = v; [b_j, b_i] = -v
  void set_cobracket(int i, Vec t);       // delta(b_i) = t, dim^2 coordinates

  const Vec& bracket_coeffs(int i, int j) const { return bracket_[i][j]; }
  const Vec& cobracket_coeffs(int i) const { return cobracket_[i]; }

  Vec bracket(const Vec& x, const Vec& y) const;
  Vec cobracket(const Vec& x) const;

  // Adjoint action of basis element b_i on a tensor:
  // b.(u (x) v) = [b,u] (x) v + u (x) [b,v].
  Vec act_tensor(int i, const Vec& t) const;

  // Bracket transposed from the cobracket constants: [xi, eta]_k =
  // sum_{ij} xi_i eta_j d_k^{ij}; this is the bracket of the dual space.
  Vec dual_bracket(const Vec& xi, const Vec& eta) const;

  bool check_antisymmetry() const;
  bool check_jacobi() const;
  bool check_cojacobi() const;  // Jacobi identity of dual_bracket
  bool check_cocycle() const;   // delta([x,y]) = x.delta(y) - y.delta(x)
  bool check_all() const;

 private:
  int dim_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vec>> bracket_;
  std::vector<Vec> cobracket_;
};

// gl_n with the elementary-matrix bracket, basis m_ab in row-major order,
// and the cobracket generated from delta(e_i) = h_i ^ e_i,
// delta(f_i) = h_i ^ f_i, delta(m_aa) = 0 by the cocycle rule.
LieBialgebra build_gl(int n);

// Its dual on the same index set: e_ab off-diagonal, g_a diagonal.
LieBialgebra build_gl_dual(int n);

// sl_2 with basis {H, X+, X-}: [H, X+/-] = +/-2 X+/-, [X+, X-] = H,
// delta(X+/-) = H ^ X+/-, delta(H) = 0.
LieBialgebra build_sl2();

// <delta_g(x), xi (x) eta> = <x, [xi,eta]_{g*}> and
// <[x,y]_g, xi> = <x (x) y, delta_{g*}(xi)> on all basis elements, with the
// identity pairing in matching basis order.
bool pairing_duality_check(const LieBialgebra& g, const LieBialgebra& gstar);

// Subspace stored as a reduced (echelon-form) rational basis.
class Subspace {
 public:
  explicit Subspace(int ambient) : ambient_(ambient) {}
  static Subspace span(int ambient, const std::vector<Vec>& vectors);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& basis() const { return rows_; }
  bool contains(const Vec& v) const;

 private:
  int ambient_;
  std::vector<Vec> rows_;
};

// Orthogonal complement under the identity pairing.
Subspace perp(const Subspace& h);

struct CoisotropyReport {
  bool subalgebra = false;
  bool coideal = false;          // C-ii: delta(h) within h ^ g
  bool perp_subalgebra = false;  // C-iii: h-perp closed under the dual bracket
  std::optional<Vec> subalgebra_witness;
  std::optional<Vec> coideal_witness;
  std::optional<Vec> perp_witness;
};

CoisotropyReport coisotropy_check(const LieBialgebra& g, const Subspace& h);

// span{H_eps, X_eps} in sl_2 for the rational circle point (s, c):
// H_eps = (2s^2-1) H - 2sc (X+ + X-), X_eps = sc H + s^2 X+ - c^2 X-.
// Throws NotOnCircle unless s^2 + c^2 = 1.
Subspace p_epsilon(const Rational& s, const Rational& c);

// All reduced rational points (s, c) on the unit circle with denominator of
// both coordinates at most max_den, in lexicographic order.
std::vector<std::pair<Rational, Rational>> circle_points(int max_den);

}  // namespace qhs
