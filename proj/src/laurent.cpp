#include "qhs/laurent.hpp"

#include <sstream>
#include <vector>

namespace qhs {

std::string rational_str(const Rational& r) { return r.get_str(); }

Rational rational_from_str(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_[0] = c;
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_[0] = Rational(c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int k) {
  LaurentPoly p;
  if (c != 0) p.terms_[k] = c;
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Rational LaurentPoly::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exp() const { return terms_.begin()->first; }
int LaurentPoly::max_exp() const { return terms_.rbegin()->first; }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
  a += b;
  return a;
}

LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
  a -= b;
  return a;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      Rational prod = ca * cb;
      r += LaurentPoly::monomial(prod, ka + kb);
    }
  }
  return r;
}

Rational LaurentPoly::eval_at_one() const {
  Rational s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

LaurentPoly LaurentPoly::div_qm1() const {
  if (is_zero()) return {};
  if (eval_at_one() != 0) throw NotDivisible("not divisible by (q-1): " + str());
  // Shift to an ordinary polynomial, then synthetic division by (q - 1):
  // with p = sum p_j q^j (0 <= j <= d) and p = (q-1)s, s_{d-1} = p_d and
  // s_{j-1} = p_j + s_j; the remainder p(1) is zero by the check above.
  int m = min_exp();
  int d = max_exp() - m;
  std::vector<Rational> p(static_cast<size_t>(d) + 1, Rational(0));
  for (const auto& [k, c] : terms_) p[static_cast<size_t>(k - m)] = c;
  LaurentPoly s;
  Rational carry = 0;
  for (int j = d; j >= 1; --j) {
    carry += p[static_cast<size_t>(j)];
    s += monomial(carry, j - 1 + m);
  }
  return s;
}

std::optional<int> LaurentPoly::qm1_valuation() const {
  if (is_zero()) return std::nullopt;
  int v = 0;
  LaurentPoly cur = *this;
  while (cur.eval_at_one() == 0) {
    cur = cur.div_qm1();
    ++v;
  }
  return v;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << '-';
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << '*';
      os << 'q';
      if (k != 1) os << '^' << k;
    }
    first = false;
  }
  return os.str();
}

LaurentPoly lp_pow(const LaurentPoly& a, unsigned k) {
  LaurentPoly r(1);
  for (unsigned i = 0; i < k; ++i) r *= a;
  return r;
}

LaurentPoly minus_q_pow(unsigned k) {
  return LaurentPoly::monomial((k % 2 == 0) ? 1 : -1, static_cast<int>(k));
}

namespace {

// Dense coefficient view shifted so the lowest exponent sits at index 0.
struct DensePoly {
  std::vector<Rational> c;  // c[0] != 0 unless empty
  int shift = 0;            // original exponent of c[0]

  static DensePoly from(const LaurentPoly& p) {
    DensePoly d;
    if (p.is_zero()) return d;
    d.shift = p.min_exp();
    d.c.assign(static_cast<size_t>(p.max_exp() - p.min_exp()) + 1, Rational(0));
    for (const auto& [k, v] : p.terms()) d.c[static_cast<size_t>(k - d.shift)] = v;
    return d;
  }

  int deg() const { return static_cast<int>(c.size()) - 1; }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

LaurentPoly to_laurent(const std::vector<Rational>& c, int shift) {
  LaurentPoly p;
  for (size_t i = 0; i < c.size(); ++i) p += LaurentPoly::monomial(c[i], static_cast<int>(i) + shift);
  return p;
}

// Polynomial remainder of a by b over Q[q] (dense, b nonzero), in place on a.
void rem_inplace(std::vector<Rational>& a, const std::vector<Rational>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      Rational t = f * b[i];
      a[off + i] -= t;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
}

}  // namespace

std::optional<LaurentPoly> lp_divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return LaurentPoly();
  DensePoly a = DensePoly::from(num);
  DensePoly b = DensePoly::from(den);
  if (a.deg() < b.deg()) return std::nullopt;
  std::vector<Rational> quo(static_cast<size_t>(a.deg() - b.deg()) + 1, Rational(0));
  std::vector<Rational> rem = a.c;
  while (static_cast<int>(rem.size()) >= static_cast<int>(b.c.size()) && !rem.empty()) {
    Rational f = rem.back() / b.c.back();
    size_t off = rem.size() - b.c.size();
    quo[off] = f;
    for (size_t i = 0; i < b.c.size(); ++i) {
      Rational t = f * b.c[i];
      rem[off + i] -= t;
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  if (!rem.empty()) return std::nullopt;
  return to_laurent(quo, a.shift - b.shift);
}

LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<Rational> x = DensePoly::from(a).c;
  std::vector<Rational> y = DensePoly::from(b).c;
  while (!y.empty()) {
    rem_inplace(x, y);
    std::swap(x, y);
  }
  // Normalize monic at exponent 0.
  LaurentPoly g;
  Rational lead = x.back();
  for (size_t i = 0; i < x.size(); ++i) {
    Rational c = x[i] / lead;
    g += LaurentPoly::monomial(c, static_cast<int>(i));
  }
  return g;
}

}  // namespace qhs
