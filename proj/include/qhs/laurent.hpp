#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

#include "qhs/errors.hpp"

namespace qhs {

using Rational = mpq_class;

std::string rational_str(const Rational& r);
Rational rational_from_str(const std::string& s);

// Laurent polynomial in q with exact rational coefficients: the ground ring
// k_q = Q[q, q^-1] of every algebra in this library. Stored exponent -> coeff
// with no zero coefficients, so equality is map equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT: implicit constant embedding
  LaurentPoly(long c);             // NOLINT
  LaurentPoly(int c) : LaurentPoly(static_cast<long>(c)) {}  // NOLINT

  // c * q^k
  static LaurentPoly monomial(const Rational& c, int k);
  static LaurentPoly q(int k = 1) { return monomial(1, k); }
  static LaurentPoly qm1() {  // q - 1
    LaurentPoly p = q();
    p += LaurentPoly(-1);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coeff(int k) const;
  int min_exp() const;  // pre: nonzero
  int max_exp() const;  // pre: nonzero

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  // Sum of coefficients = value of the polynomial at q = 1.
  Rational eval_at_one() const;

  // Exact division by (q - 1); throws NotDivisible unless eval_at_one() == 0.
  LaurentPoly div_qm1() const;

  // Largest k with (q-1)^k dividing the polynomial; nullopt for 0 (infinite).
  std::optional<int> qm1_valuation() const;

  // Terms listed by ascending exponent, e.g. "-2*q^-1 + 3*q^2"; zero is "0".
  std::string str() const;

 private:
  std::map<int, Rational> terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly lp_pow(const LaurentPoly& a, unsigned k);

// (-q)^k for k >= 0 (minor expansions and big-cell prefactors).
LaurentPoly minus_q_pow(unsigned k);

// Exact division: quo with quo*den == num, if it exists.
std::optional<LaurentPoly> lp_divide_exact(const LaurentPoly& num, const LaurentPoly& den);

// Monic gcd over Q[q] after clearing q-powers; gcd(0,0) = 0.
LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qhs
