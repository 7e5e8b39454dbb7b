#include "qhs/liebialg.hpp"

#include <set>

#include "qhs/errors.hpp"

namespace qhs {

namespace {

bool is_zero_vec(const Vec& v) {
  for (const Rational& c : v)
    if (c != 0) return false;
  return true;
}

void axpy(Vec& y, const Rational& a, const Vec& x) {
  for (std::size_t k = 0; k < y.size(); ++k) y[k] += a * x[k];
}

// Reduced row-echelon form over Q; zero rows dropped.
std::vector<Vec> rref(std::vector<Vec> rows) {
  std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    Rational inv = 1 / rows[rank][col];
    for (Rational& c : rows[rank]) c *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][col] != 0) {
        Rational f = -rows[r][col];
        axpy(rows[r], f, rows[rank]);
      }
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

bool in_span(const std::vector<Vec>& basis, Vec v) {
  for (const Vec& row : basis) {
    std::size_t piv = 0;
    while (piv < row.size() && row[piv] == 0) ++piv;
    if (piv < row.size() && v[piv] != 0) {
      Rational f = -v[piv];
      axpy(v, f, row);
    }
  }
  return is_zero_vec(v);
}

}  // namespace

LieBialgebra::LieBialgebra(int dim, std::vector<std::string> labels)
    : dim_(dim),
      labels_(std::move(labels)),
      bracket_(dim, std::vector<Vec>(dim, Vec(dim, 0))),
      cobracket_(dim, Vec(dim * dim, 0)) {
  if (static_cast<int>(labels_.size()) != dim) throw SizeMismatch("label count != dimension");
}

void LieBialgebra::set_bracket(int i, int j, Vec v) {
  bracket_[j][i] = v;
  for (Rational& c : bracket_[j][i]) c = -c;
  bracket_[i][j] = std::move(v);
}

void LieBialgebra::set_cobracket(int i, Vec t) { cobracket_[i] = std::move(t); }

Vec LieBialgebra::bracket(const Vec& x, const Vec& y) const {
  Vec out(dim_, 0);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      Rational c = x[i] * y[j];
      axpy(out, c, bracket_[i][j]);
    }
  }
  return out;
}

Vec LieBialgebra::cobracket(const Vec& x) const {
  Vec out(dim_ * dim_, 0);
  for (int i = 0; i < dim_; ++i)
    if (x[i] != 0) axpy(out, x[i], cobracket_[i]);
  return out;
}

Vec LieBialgebra::act_tensor(int i, const Vec& t) const {
  Vec out(dim_ * dim_, 0);
  for (int a = 0; a < dim_; ++a) {
    for (int b = 0; b < dim_; ++b) {
      const Rational& c = t[a * dim_ + b];
      if (c == 0) continue;
      const Vec& ia = bracket_[i][a];
      for (int k = 0; k < dim_; ++k)
        if (ia[k] != 0) out[k * dim_ + b] += c * ia[k];
      const Vec& ib = bracket_[i][b];
      for (int k = 0; k < dim_; ++k)
        if (ib[k] != 0) out[a * dim_ + k] += c * ib[k];
    }
  }
  return out;
}

Vec LieBialgebra::dual_bracket(const Vec& xi, const Vec& eta) const {
  Vec out(dim_, 0);
  for (int k = 0; k < dim_; ++k) {
    const Vec& d = cobracket_[k];
    Rational acc = 0;
    for (int i = 0; i < dim_; ++i) {
      if (xi[i] == 0) continue;
      for (int j = 0; j < dim_; ++j) {
        if (eta[j] == 0) continue;
        acc += xi[i] * eta[j] * d[i * dim_ + j];
      }
    }
    out[k] = acc;
  }
  return out;
}

bool LieBialgebra::check_antisymmetry() const {
  for (int i = 0; i < dim_; ++i) {
    if (!is_zero_vec(bracket_[i][i])) return false;
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (bracket_[i][j][k] != -bracket_[j][i][k]) return false;
  }
  for (int k = 0; k < dim_; ++k)
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        if (cobracket_[k][i * dim_ + j] != -cobracket_[k][j * dim_ + i]) return false;
  return true;
}

bool LieBialgebra::check_jacobi() const {
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      for (int k = j + 1; k < dim_; ++k) {
        Vec ek(dim_, 0), ej(dim_, 0), ei(dim_, 0);
        ei[i] = 1;
        ej[j] = 1;
        ek[k] = 1;
        Vec s = bracket(bracket_[i][j], ek);
        axpy(s, 1, bracket(bracket_[j][k], ei));
        axpy(s, 1, bracket(bracket_[k][i], ej));
        if (!is_zero_vec(s)) return false;
      }
    }
  }
  return true;
}

bool LieBialgebra::check_cojacobi() const {
  // Co-Jacobi for delta is the Jacobi identity of the transposed bracket.
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      for (int k = j + 1; k < dim_; ++k) {
        Vec ei(dim_, 0), ej(dim_, 0), ek(dim_, 0);
        ei[i] = 1;
        ej[j] = 1;
        ek[k] = 1;
        Vec s = dual_bracket(dual_bracket(ei, ej), ek);
        axpy(s, 1, dual_bracket(dual_bracket(ej, ek), ei));
        axpy(s, 1, dual_bracket(dual_bracket(ek, ei), ej));
        if (!is_zero_vec(s)) return false;
      }
    }
  }
  return true;
}

bool LieBialgebra::check_cocycle() const {
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      Vec lhs = cobracket(bracket_[i][j]);
      Vec rhs = act_tensor(i, cobracket_[j]);
      axpy(rhs, -1, act_tensor(j, cobracket_[i]));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool LieBialgebra::check_all() const {
  return check_antisymmetry() && check_jacobi() && check_cojacobi() && check_cocycle();
}

namespace {

// u ^ e_j as a dim^2 tensor.
Vec wedge_with_basis(int dim, const Vec& u, int j) {
  Vec t(dim * dim, 0);
  for (int a = 0; a < dim; ++a) {
    if (u[a] == 0) continue;
    t[a * dim + j] += u[a];
    t[j * dim + a] -= u[a];
  }
  return t;
}

Vec wedge_basis(int dim, int i, int j) {
  Vec t(dim * dim, 0);
  t[i * dim + j] += 1;
  t[j * dim + i] -= 1;
  return t;
}

}  // namespace

LieBialgebra build_gl(int n) {
  int dim = n * n;
  auto idx = [n](int a, int b) { return (a - 1) * n + (b - 1); };
  std::vector<std::string> labels(dim);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      labels[idx(a, b)] = "m[" + std::to_string(a) + "," + std::to_string(b) + "]";
  LieBialgebra g(dim, std::move(labels));

  // [m_ab, m_cd] = delta_bc m_ad - delta_da m_cb.
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d) {
          Vec v(dim, 0);
          if (b == c) v[idx(a, d)] += 1;
          if (d == a) v[idx(c, b)] -= 1;
          if (!is_zero_vec(v)) g.set_bracket(idx(a, b), idx(c, d), std::move(v));
        }

  // Cobracket: zero on the diagonal, h ^ x on the super/subdiagonal, then
  // outward by the cocycle rule along m_ij = [m_{i,j-1}, m_{j-1,j}] (i < j)
  // and m_ij = [m_{i,i-1}, m_{i-1,j}] (i > j).
  for (int a = 1; a < n; ++a) {
    Vec h(dim, 0);
    h[idx(a, a)] = 1;
    h[idx(a + 1, a + 1)] = -1;
    for (int off : {0, 1}) {
      int i = off ? a + 1 : a, j = off ? a : a + 1;
      Vec t(dim * dim, 0);
      int x = idx(i, j);
      for (int k = 0; k < dim; ++k) {
        if (h[k] == 0) continue;
        t[k * dim + x] += h[k];
        t[x * dim + k] -= h[k];
      }
      g.set_cobracket(x, std::move(t));
    }
  }
  for (int dist = 2; dist < n; ++dist) {
    for (int i = 1; i + dist <= n; ++i) {
      int j = i + dist;
      // Upper: delta([m_{i,j-1}, e_{j-1}]).
      Vec t = g.act_tensor(idx(i, j - 1), g.cobracket_coeffs(idx(j - 1, j)));
      axpy(t, -1, g.act_tensor(idx(j - 1, j), g.cobracket_coeffs(idx(i, j - 1))));
      g.set_cobracket(idx(i, j), std::move(t));
      // Lower: delta([f_{j-1}, m_{j-1,i}]).
      Vec s = g.act_tensor(idx(j, j - 1), g.cobracket_coeffs(idx(j - 1, i)));
      axpy(s, -1, g.act_tensor(idx(j - 1, i), g.cobracket_coeffs(idx(j, j - 1))));
      g.set_cobracket(idx(j, i), std::move(s));
    }
  }
  return g;
}

LieBialgebra build_gl_dual(int n) {
  int dim = n * n;
  auto idx = [n](int a, int b) { return (a - 1) * n + (b - 1); };
  std::vector<std::string> labels(dim);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      labels[idx(a, b)] = a == b ? "g[" + std::to_string(a) + "]"
                                 : "e[" + std::to_string(a) + "," + std::to_string(b) + "]";
  LieBialgebra g(dim, std::move(labels));

  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d) {
          Vec v(dim, 0);
          if (a == b && c == d) {
            // Cartans commute.
          } else if (a == b) {
            // [g_a, e_cd] = (delta_ac - delta_ad) e_cd on the upper
            // triangle, the opposite sign below it.
            int sign = (c < d) ? 1 : -1;
            Rational coef = sign * ((a == c ? 1 : 0) - (a == d ? 1 : 0));
            if (coef != 0) v[idx(c, d)] += coef;
          } else if (c == d) {
            int sign = (a < b) ? 1 : -1;
            Rational coef = sign * ((c == a ? 1 : 0) - (c == b ? 1 : 0));
            if (coef != 0) v[idx(a, b)] -= coef;
          } else if (a < b && c < d) {
            // Both strictly upper: 2(delta_bc e_ad - delta_da e_cb).
            if (b == c) v[idx(a, d)] += 2;
            if (d == a) v[idx(c, b)] -= 2;
          } else if (a > b && c > d) {
            // Both strictly lower: 2(delta_da e_cb - delta_bc e_ad).
            if (d == a) v[idx(c, b)] += 2;
            if (b == c) v[idx(a, d)] -= 2;
          }
          // Mixed strictly-upper/strictly-lower pairs commute.
          if (!is_zero_vec(v)) g.set_bracket(idx(a, b), idx(c, d), std::move(v));
        }

  // delta(e_ij) = sum_k e_ik ^ e_kj with e_aa read as g_a.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Vec t(dim * dim, 0);
      for (int k = 1; k <= n; ++k) {
        if (idx(i, k) == idx(k, j)) continue;  // i == j == k contributes zero
        axpy(t, 1, wedge_basis(dim, idx(i, k), idx(k, j)));
      }
      g.set_cobracket(idx(i, j), std::move(t));
    }
  return g;
}

LieBialgebra build_sl2() {
  LieBialgebra g(3, {"H", "X+", "X-"});
  g.set_bracket(0, 1, {0, 2, 0});
  g.set_bracket(0, 2, {0, 0, -2});
  g.set_bracket(1, 2, {1, 0, 0});
  g.set_cobracket(1, wedge_basis(3, 0, 1));
  g.set_cobracket(2, wedge_basis(3, 0, 2));
  return g;
}

bool pairing_duality_check(const LieBialgebra& g, const LieBialgebra& gstar) {
  int dim = g.dim();
  if (gstar.dim() != dim) return false;
  for (int x = 0; x < dim; ++x) {
    const Vec& d = g.cobracket_coeffs(x);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (d[i * dim + j] != gstar.bracket_coeffs(i, j)[x]) return false;
  }
  for (int k = 0; k < dim; ++k) {
    const Vec& d = gstar.cobracket_coeffs(k);
    for (int x = 0; x < dim; ++x)
      for (int y = 0; y < dim; ++y)
        if (g.bracket_coeffs(x, y)[k] != d[x * dim + y]) return false;
  }
  return true;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& vectors) {
  for (const Vec& v : vectors)
    if (static_cast<int>(v.size()) != ambient) throw SizeMismatch("vector size != ambient");
  Subspace s(ambient);
  s.rows_ = rref(vectors);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw SizeMismatch("vector size != ambient");
  return in_span(rows_, v);
}

Subspace perp(const Subspace& h) {
  int n = h.ambient();
  std::vector<bool> is_pivot(n, false);
  std::vector<int> pivots;
  for (const Vec& row : h.basis()) {
    int p = 0;
    while (p < n && row[p] == 0) ++p;
    pivots.push_back(p);
    is_pivot[p] = true;
  }
  std::vector<Vec> out;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < h.basis().size(); ++r) v[pivots[r]] = -h.basis()[r][f];
    out.push_back(std::move(v));
  }
  return Subspace::span(n, out);
}

CoisotropyReport coisotropy_check(const LieBialgebra& g, const Subspace& h) {
  CoisotropyReport rep;
  int dim = g.dim();

  rep.subalgebra = true;
  for (const Vec& u : h.basis()) {
    for (const Vec& v : h.basis()) {
      Vec b = g.bracket(u, v);
      if (!h.contains(b)) {
        rep.subalgebra = false;
        rep.subalgebra_witness = b;
        break;
      }
    }
    if (!rep.subalgebra) break;
  }

  // C-ii: delta(h) within h ^ g.
  std::vector<Vec> wedges;
  for (const Vec& u : h.basis())
    for (int j = 0; j < dim; ++j) wedges.push_back(wedge_with_basis(dim, u, j));
  Subspace hg = Subspace::span(dim * dim, wedges);
  rep.coideal = true;
  for (const Vec& u : h.basis()) {
    Vec d = g.cobracket(u);
    if (!hg.contains(d)) {
      rep.coideal = false;
      rep.coideal_witness = d;
      break;
    }
  }

  // C-iii: h-perp closed under the bracket transposed from delta.
  Subspace hp = perp(h);
  rep.perp_subalgebra = true;
  for (const Vec& xi : hp.basis()) {
    for (const Vec& eta : hp.basis()) {
      Vec b = g.dual_bracket(xi, eta);
      if (!hp.contains(b)) {
        rep.perp_subalgebra = false;
        rep.perp_witness = b;
        break;
      }
    }
    if (!rep.perp_subalgebra) break;
  }
  return rep;
}

Subspace p_epsilon(const Rational& s, const Rational& c) {
  if (s * s + c * c != 1) throw NotOnCircle("need s^2 + c^2 = 1");
  Vec h_eps{2 * s * s - 1, -2 * s * c, -2 * s * c};
  Vec x_eps{s * c, s * s, -c * c};
  return Subspace::span(3, {h_eps, x_eps});
}

std::vector<std::pair<Rational, Rational>> circle_points(int max_den) {
  std::set<std::pair<Rational, Rational>> seen;
  for (long den = 1; den <= max_den; ++den) {
    for (long p = -den; p <= den; ++p) {
      long rem = den * den - p * p;
      long q = 0;
      while (q * q < rem) ++q;
      if (q * q != rem) continue;
      for (long qq : {q, -q}) {
        Rational s(p, den), c(qq, den);
        s.canonicalize();
        c.canonicalize();
        seen.insert({s, c});
        if (qq == 0) break;
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace qhs
