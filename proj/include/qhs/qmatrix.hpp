#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qhs/laurent.hpp"

namespace qhs {

// The quantum matrix algebra O_q(M_n) on generators x_ij (1 <= i,j <= n)
// subject to the Manin relations. Generators are encoded as positions
// p = (i-1)*n + (j-1), totally ordered row-major: (1,1) < (1,2) < ... < (n,n).
// PBW basis: weakly increasing words in this order.
struct AlgebraContext {
  int n = 1;
};

using Word = std::vector<uint16_t>;  // sequence of generator positions
using Monomial = Word;               // weakly increasing = normal form

// Graded lexicographic: shorter words first, then lex on positions.
struct GradedLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

int pos_encode(const AlgebraContext& ctx, int i, int j);  // 1-based, checked
inline int pos_row(const AlgebraContext& ctx, int p) { return p / ctx.n + 1; }
inline int pos_col(const AlgebraContext& ctx, int p) { return p % ctx.n + 1; }

// Element of O_q(M_n) in PBW normal form: mapping ordered word -> nonzero
// coefficient. Equality of elements is equality of the mappings.
class QElement {
 public:
  QElement() = default;
  explicit QElement(int n) : n_(n) {}

  static QElement scalar(const AlgebraContext& ctx, const LaurentPoly& c);
  static QElement generator(const AlgebraContext& ctx, int i, int j);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, LaurentPoly, GradedLex>& terms() const { return terms_; }
  LaurentPoly coeff(const Word& w) const;

  // Accumulate c on an already-ordered word (internal building block).
  void add_term(const Word& w, const LaurentPoly& c);

  QElement& operator+=(const QElement& o);
  QElement& operator-=(const QElement& o);
  QElement operator-() const;
  QElement& scale(const LaurentPoly& c);
  friend bool operator==(const QElement& a, const QElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  // Total degree of the highest term; -1 for zero.
  int degree() const;

  // Canonical text: terms ascending in graded-lex, "x[i,j]*x[k,l]" monomials,
  // multi-term coefficients parenthesized, e.g.
  // "x[1,1]*x[2,2] + (q^-1 - q)*x[1,2]*x[2,1]".
  std::string str() const;

 private:
  int n_ = 1;
  std::map<Word, LaurentPoly, GradedLex> terms_;
};

QElement operator+(QElement a, const QElement& b);
QElement operator-(QElement a, const QElement& b);

// Rewrites an arbitrary word to PBW normal form by leftmost reduction of
// out-of-order adjacent pairs. With u = x_{a,b}, v = x_{c,d}, pos(u) > pos(v):
//   same row or same column:    u v -> q^{-1} v u
//   a > c, b < d (antidiagonal): u v -> v u
//   a > c, b > d (diagonal):     u v -> v u - (q - q^{-1}) x_{c,b} x_{a,d}
// Each step strictly decreases the inversion count, so rewriting terminates;
// the diamond lemma makes the result canonical.
QElement normal_form(const AlgebraContext& ctx, const Word& word, const LaurentPoly& coeff);

QElement multiply(const QElement& a, const QElement& b);    // ContextMismatch
QElement commutator(const QElement& a, const QElement& b);  // ab - ba
QElement element_pow(const QElement& a, unsigned k);

// Element of O_q(M_n) (x) O_q(M_n), both legs in normal form; products are
// componentwise (no braiding).
class TensorElement {
 public:
  TensorElement() = default;
  explicit TensorElement(int n) : n_(n) {}

  using Key = std::pair<Word, Word>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      GradedLex less;
      if (less(a.first, b.first)) return true;
      if (less(b.first, a.first)) return false;
      return less(a.second, b.second);
    }
  };

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, LaurentPoly, KeyLess>& terms() const { return terms_; }

  void add_term(const Word& l, const Word& r, const LaurentPoly& c);
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string str() const;  // "lhs (x) rhs" per term

 private:
  int n_ = 1;
  std::map<Key, LaurentPoly, KeyLess> terms_;
};

// a (x) b as a TensorElement.
TensorElement tensor_of(const QElement& a, const QElement& b);
TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b);

// Delta(x_ij) = sum_k x_ik (x) x_kj, extended as an algebra morphism.
TensorElement coproduct(const QElement& f);
// eps(x_ij) = delta_ij, extended as an algebra morphism.
LaurentPoly counit(const QElement& f);

// Kills every monomial containing a generator with killed[pos] = true. This
// is the Hopf projection onto the quotient by the two-sided ideal of the
// killed generators; under the row-major order that ideal has a monomial
// complement, so annihilation computes the quotient's normal form.
QElement project_killed(const QElement& f, const std::vector<bool>& killed);

// Block-parabolic projection: kills x_ij with r+1 <= i <= n, 1 <= j <= r.
QElement parabolic_project(const QElement& f, int r);  // InvalidBlock
std::vector<bool> parabolic_killed_mask(const AlgebraContext& ctx, int r);

// All ordered monomials of total degree k (the PBW basis of the degree-k
// homogeneous component), in graded-lex order.
std::vector<Monomial> homog_basis(const AlgebraContext& ctx, int k);

std::string monomial_str(const AlgebraContext& ctx, const Word& w);

}  // namespace qhs
