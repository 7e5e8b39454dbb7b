#include "qhs/commutative.hpp"

#include <algorithm>
#include <sstream>

namespace qhs {

CommPoly CommPoly::scalar(const AlgebraContext& ctx, const Rational& c) {
  CommPoly p(ctx.n);
  if (c != 0) p.terms_[Word{}] = c;
  return p;
}

CommPoly CommPoly::generator(const AlgebraContext& ctx, int i, int j) {
  CommPoly p(ctx.n);
  p.terms_[Word{static_cast<uint16_t>(pos_encode(ctx, i, j))}] = 1;
  return p;
}

Rational CommPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CommPoly::add_term(Word w, const Rational& c) {
  if (c == 0) return;
  std::sort(w.begin(), w.end());
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(std::move(w), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero())
    n_ = o.n_;
  else if (n_ != o.n_)
    throw ContextMismatch("adding commutative polynomials from different contexts");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero())
    n_ = o.n_;
  else if (n_ != o.n_)
    throw ContextMismatch("subtracting commutative polynomials from different contexts");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

CommPoly CommPoly::operator-() const {
  CommPoly r(n_);
  for (const auto& [w, c] : terms_) r.terms_[w] = -c;
  return r;
}

CommPoly& CommPoly::scale(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

CommPoly operator+(CommPoly a, const CommPoly& b) {
  a += b;
  return a;
}

CommPoly operator-(CommPoly a, const CommPoly& b) {
  a -= b;
  return a;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  if (!a.is_zero() && !b.is_zero() && a.n() != b.n())
    throw ContextMismatch("multiplying commutative polynomials from different contexts");
  CommPoly r(a.is_zero() ? b.n() : a.n());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(std::move(w), ca * cb);
    }
  }
  return r;
}

CommPoly comm_pow(const CommPoly& a, unsigned k) {
  AlgebraContext ctx{a.n()};
  CommPoly r = CommPoly::scalar(ctx, 1);
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

CommPoly specialize_q1(const QElement& f) {
  CommPoly p(f.n());
  for (const auto& [w, c] : f.terms()) p.add_term(w, c.eval_at_one());
  return p;
}

std::string CommPoly::str() const {
  if (terms_.empty()) return "0";
  AlgebraContext ctx{n_};
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational a = c;
    const bool neg = a < 0;
    if (!first) {
      os << (neg ? " - " : " + ");
      if (neg) a = -a;
    }
    std::string mono = w.empty() ? "" : monomial_str(ctx, w);
    std::string cs = a.get_str();
    if (mono.empty()) {
      os << cs;
    } else if (cs == "1") {
      os << mono;
    } else if (cs == "-1") {
      os << '-' << mono;
    } else {
      os << cs << '*' << mono;
    }
    first = false;
  }
  return os.str();
}

void CommTensor::add_term(Word l, Word r, const Rational& c) {
  if (c == 0) return;
  std::sort(l.begin(), l.end());
  std::sort(r.begin(), r.end());
  Key key{std::move(l), std::move(r)};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CommTensor& CommTensor::operator+=(const CommTensor& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

CommTensor& CommTensor::operator-=(const CommTensor& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

CommTensor comm_tensor_of(const CommPoly& a, const CommPoly& b) {
  CommTensor t(a.n());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) t.add_term(wa, wb, ca * cb);
  return t;
}

CommTensor comm_tensor_multiply(const CommTensor& a, const CommTensor& b) {
  CommTensor t(a.n());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      Word l = ka.first;
      l.insert(l.end(), kb.first.begin(), kb.first.end());
      Word r = ka.second;
      r.insert(r.end(), kb.second.begin(), kb.second.end());
      t.add_term(std::move(l), std::move(r), ca * cb);
    }
  }
  return t;
}

CommTensor comm_coproduct(const CommPoly& f) {
  const int n = f.n();
  CommTensor out(n);
  for (const auto& [w, c] : f.terms()) {
    std::vector<std::pair<Word, Word>> legs{{Word{}, Word{}}};
    for (uint16_t p : w) {
      const int i = p / n, j = p % n;
      std::vector<std::pair<Word, Word>> next;
      for (const auto& [l, r] : legs) {
        for (int k = 0; k < n; ++k) {
          Word l2 = l;
          l2.push_back(static_cast<uint16_t>(i * n + k));
          Word r2 = r;
          r2.push_back(static_cast<uint16_t>(k * n + j));
          next.emplace_back(std::move(l2), std::move(r2));
        }
      }
      legs = std::move(next);
    }
    for (auto& [l, r] : legs) out.add_term(std::move(l), std::move(r), c);
  }
  return out;
}

Rational comm_counit(const CommPoly& f) {
  const int n = f.n();
  Rational e = 0;
  for (const auto& [w, c] : f.terms()) {
    bool diag = true;
    for (uint16_t p : w)
      if (p / n != p % n) {
        diag = false;
        break;
      }
    if (diag) e += c;
  }
  return e;
}

CommPoly comm_project_killed(const CommPoly& f, const std::vector<bool>& killed) {
  CommPoly r(f.n());
  for (const auto& [w, c] : f.terms()) {
    bool alive = true;
    for (uint16_t p : w)
      if (killed[p]) {
        alive = false;
        break;
      }
    if (alive) r.add_term(w, c);
  }
  return r;
}

CommTensor comm_project_right(const CommTensor& t, const std::vector<bool>& killed) {
  CommTensor r(t.n());
  for (const auto& [k, c] : t.terms()) {
    bool alive = true;
    for (uint16_t p : k.second)
      if (killed[p]) {
        alive = false;
        break;
      }
    if (alive) r.add_term(k.first, k.second, c);
  }
  return r;
}

CommPoly classical_minor(const AlgebraContext& ctx, const std::vector<int>& I, const std::vector<int>& J) {
  if (I.size() != J.size()) throw SizeMismatch("classical minor needs |I| = |J|");
  if (I.empty()) return CommPoly::scalar(ctx, 1);
  if (I.size() == 1) return CommPoly::generator(ctx, I[0], J[0]);
  CommPoly det(ctx.n);
  for (size_t t = 0; t < J.size(); ++t) {
    std::vector<int> subI(I.begin() + 1, I.end());
    std::vector<int> subJ;
    for (size_t s = 0; s < J.size(); ++s)
      if (s != t) subJ.push_back(J[s]);
    CommPoly cof = CommPoly::generator(ctx, I[0], J[t]) * classical_minor(ctx, subI, subJ);
    if (t % 2 == 1) cof = -cof;
    det += cof;
  }
  return det;
}

}  // namespace qhs
