#pragma once

#include <string>
#include <vector>

#include "qhs/qmatrix.hpp"

namespace qhs {

// Commutative polynomial in the coordinates x_ij over Q: the q = 1 image
// O(M_n). Monomials are sorted position words (multisets).
class CommPoly {
 public:
  CommPoly() = default;
  explicit CommPoly(int n) : n_(n) {}

  static CommPoly scalar(const AlgebraContext& ctx, const Rational& c);
  static CommPoly generator(const AlgebraContext& ctx, int i, int j);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Rational, GradedLex>& terms() const { return terms_; }
  Rational coeff(const Word& w) const;
  void add_term(Word w, const Rational& c);  // w is sorted in place

  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  CommPoly operator-() const;
  CommPoly& scale(const Rational& c);
  friend bool operator==(const CommPoly& a, const CommPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  int n_ = 1;
  std::map<Word, Rational, GradedLex> terms_;
};

CommPoly operator+(CommPoly a, const CommPoly& b);
CommPoly operator-(CommPoly a, const CommPoly& b);
CommPoly operator*(const CommPoly& a, const CommPoly& b);
CommPoly comm_pow(const CommPoly& a, unsigned k);

// Evaluate every coefficient at q = 1; monomials pass through unchanged.
CommPoly specialize_q1(const QElement& f);

// O(M_n) (x) O(M_n) for the classical coalgebra checks.
class CommTensor {
 public:
  CommTensor() = default;
  explicit CommTensor(int n) : n_(n) {}

  using Key = std::pair<Word, Word>;

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rational, TensorElement::KeyLess>& terms() const { return terms_; }
  void add_term(Word l, Word r, const Rational& c);

  CommTensor& operator+=(const CommTensor& o);
  CommTensor& operator-=(const CommTensor& o);
  friend bool operator==(const CommTensor& a, const CommTensor& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int n_ = 1;
  std::map<Key, Rational, TensorElement::KeyLess> terms_;
};

CommTensor comm_tensor_of(const CommPoly& a, const CommPoly& b);
CommTensor comm_tensor_multiply(const CommTensor& a, const CommTensor& b);
CommTensor comm_coproduct(const CommPoly& f);
Rational comm_counit(const CommPoly& f);
CommPoly comm_project_killed(const CommPoly& f, const std::vector<bool>& killed);
CommTensor comm_project_right(const CommTensor& t, const std::vector<bool>& killed);

// Independent classical minor oracle: determinant of the submatrix on rows I,
// columns J of (x_ij), by cofactor expansion along the first row. 1-based,
// strictly increasing tuples.
CommPoly classical_minor(const AlgebraContext& ctx, const std::vector<int>& I, const std::vector<int>& J);

}  // namespace qhs
