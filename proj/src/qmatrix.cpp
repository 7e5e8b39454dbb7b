#include "qhs/qmatrix.hpp"

#include <algorithm>
#include <sstream>

namespace qhs {

int pos_encode(const AlgebraContext& ctx, int i, int j) {
  if (i < 1 || i > ctx.n || j < 1 || j > ctx.n)
    throw InvalidGenerator("x[" + std::to_string(i) + "," + std::to_string(j) + "] out of range for n=" +
                           std::to_string(ctx.n));
  return (i - 1) * ctx.n + (j - 1);
}

QElement QElement::scalar(const AlgebraContext& ctx, const LaurentPoly& c) {
  QElement e(ctx.n);
  if (!c.is_zero()) e.terms_[Word{}] = c;
  return e;
}

QElement QElement::generator(const AlgebraContext& ctx, int i, int j) {
  QElement e(ctx.n);
  e.terms_[Word{static_cast<uint16_t>(pos_encode(ctx, i, j))}] = LaurentPoly(1);
  return e;
}

LaurentPoly QElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void QElement::add_term(const Word& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QElement& QElement::operator+=(const QElement& o) {
  if (o.is_zero()) return *this;
  if (is_zero())
    n_ = o.n_;  // zero belongs to every context
  else if (n_ != o.n_)
    throw ContextMismatch("adding elements from different contexts");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

QElement& QElement::operator-=(const QElement& o) {
  if (o.is_zero()) return *this;
  if (is_zero())
    n_ = o.n_;
  else if (n_ != o.n_)
    throw ContextMismatch("subtracting elements from different contexts");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

QElement QElement::operator-() const {
  QElement r(n_);
  for (const auto& [w, c] : terms_) r.terms_[w] = -c;
  return r;
}

QElement& QElement::scale(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

int QElement::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.size());
}

QElement operator+(QElement a, const QElement& b) {
  a += b;
  return a;
}

QElement operator-(QElement a, const QElement& b) {
  a -= b;
  return a;
}

QElement normal_form(const AlgebraContext& ctx, const Word& word, const LaurentPoly& coeff) {
  const int nn = ctx.n * ctx.n;
  for (uint16_t p : word)
    if (p >= nn)
      throw InvalidGenerator("position " + std::to_string(p) + " out of range for n=" + std::to_string(ctx.n));
  QElement result(ctx.n);
  if (coeff.is_zero()) return result;

  const int n = ctx.n;
  const LaurentPoly qinv = LaurentPoly::q(-1);
  const LaurentPoly qdiff = LaurentPoly::q(1) - LaurentPoly::q(-1);  // q - q^-1

  std::vector<std::pair<Word, LaurentPoly>> stack;
  stack.emplace_back(word, coeff);
  while (!stack.empty()) {
    auto [w, c] = std::move(stack.back());
    stack.pop_back();
    size_t k = 0;
    bool reduced_term = true;
    for (; k + 1 < w.size(); ++k) {
      if (w[k] > w[k + 1]) {
        reduced_term = false;
        break;
      }
    }
    if (reduced_term) {
      result.add_term(w, c);
      continue;
    }
    const int A = w[k], B = w[k + 1];  // A > B
    const int ra = A / n, ca = A % n, rb = B / n, cb = B % n;
    if (ra == rb || ca == cb) {
      // x_A x_B = q^-1 x_B x_A (same row or same column, smaller index first)
      std::swap(w[k], w[k + 1]);
      stack.emplace_back(std::move(w), c * qinv);
    } else if (ca < cb) {
      // ra > rb, ca < cb: antidiagonal positions commute.
      std::swap(w[k], w[k + 1]);
      stack.emplace_back(std::move(w), std::move(c));
    } else {
      // ra > rb, ca > cb: x_{a,b} x_{c,d} = x_{c,d} x_{a,b} - (q - q^-1) x_{c,b} x_{a,d},
      // where the correction pair (c,b),(a,d) is already in order.
      Word w2 = w;
      w2[k] = static_cast<uint16_t>(rb * n + ca);
      w2[k + 1] = static_cast<uint16_t>(ra * n + cb);
      stack.emplace_back(std::move(w2), -(qdiff * c));
      std::swap(w[k], w[k + 1]);
      stack.emplace_back(std::move(w), std::move(c));
    }
  }
  return result;
}

QElement multiply(const QElement& a, const QElement& b) {
  if (a.n() != b.n()) throw ContextMismatch("multiplying elements from different contexts");
  AlgebraContext ctx{a.n()};
  QElement r(ctx.n);
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r += normal_form(ctx, w, ca * cb);
    }
  }
  return r;
}

QElement commutator(const QElement& a, const QElement& b) {
  return multiply(a, b) - multiply(b, a);
}

QElement element_pow(const QElement& a, unsigned k) {
  AlgebraContext ctx{a.n()};
  QElement r = QElement::scalar(ctx, LaurentPoly(1));
  for (unsigned i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

void TensorElement::add_term(const Word& l, const Word& r, const LaurentPoly& c) {
  if (c.is_zero()) return;
  Key key{l, r};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

TensorElement tensor_of(const QElement& a, const QElement& b) {
  TensorElement t(a.n());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) t.add_term(wa, wb, ca * cb);
  return t;
}

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b) {
  AlgebraContext ctx{a.n()};
  TensorElement t(a.n());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      Word l = ka.first;
      l.insert(l.end(), kb.first.begin(), kb.first.end());
      Word r = ka.second;
      r.insert(r.end(), kb.second.begin(), kb.second.end());
      QElement ln = normal_form(ctx, l, ca * cb);
      QElement rn = normal_form(ctx, r, LaurentPoly(1));
      for (const auto& [wl, cl] : ln.terms())
        for (const auto& [wr, cr] : rn.terms()) t.add_term(wl, wr, cl * cr);
    }
  }
  return t;
}

TensorElement coproduct(const QElement& f) {
  const int n = f.n();
  AlgebraContext ctx{n};
  TensorElement out(n);
  for (const auto& [w, c] : f.terms()) {
    // Expand prod_t (sum_k x_{i_t,k} (x) x_{k,j_t}) letter by letter.
    std::vector<std::pair<Word, Word>> legs{{Word{}, Word{}}};
    for (uint16_t p : w) {
      const int i = p / n, j = p % n;
      std::vector<std::pair<Word, Word>> next;
      next.reserve(legs.size() * static_cast<size_t>(n));
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
    for (const auto& [l, r] : legs) {
      QElement ln = normal_form(ctx, l, c);
      QElement rn = normal_form(ctx, r, LaurentPoly(1));
      for (const auto& [wl, cl] : ln.terms())
        for (const auto& [wr, cr] : rn.terms()) out.add_term(wl, wr, cl * cr);
    }
  }
  return out;
}

LaurentPoly counit(const QElement& f) {
  const int n = f.n();
  LaurentPoly e;
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

QElement project_killed(const QElement& f, const std::vector<bool>& killed) {
  QElement r(f.n());
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

std::vector<bool> parabolic_killed_mask(const AlgebraContext& ctx, int r) {
  if (r < 1 || r >= ctx.n)
    throw InvalidBlock("block size r=" + std::to_string(r) + " must satisfy 1 <= r < n=" + std::to_string(ctx.n));
  std::vector<bool> killed(static_cast<size_t>(ctx.n) * ctx.n, false);
  for (int i = r + 1; i <= ctx.n; ++i)
    for (int j = 1; j <= r; ++j) killed[static_cast<size_t>(pos_encode(ctx, i, j))] = true;
  return killed;
}

QElement parabolic_project(const QElement& f, int r) {
  AlgebraContext ctx{f.n()};
  return project_killed(f, parabolic_killed_mask(ctx, r));
}

std::vector<Monomial> homog_basis(const AlgebraContext& ctx, int k) {
  std::vector<Monomial> out;
  Monomial cur;
  const int nn = ctx.n * ctx.n;
  // Weakly increasing words of length k over positions 0..nn-1.
  auto rec = [&](auto&& self, int from, int left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = from; p < nn; ++p) {
      cur.push_back(static_cast<uint16_t>(p));
      self(self, p, left - 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, k);
  return out;
}

std::string monomial_str(const AlgebraContext& ctx, const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (uint16_t p : w) {
    if (!first) os << '*';
    os << "x[" << pos_row(ctx, p) << ',' << pos_col(ctx, p) << ']';
    first = false;
  }
  return os.str();
}

namespace {

// Shared coefficient-and-monomial printer for QElement and TensorElement
// terms; `mono` is "" for the unit monomial. Multi-term coefficients print
// parenthesized; single-term coefficients fold their sign into the separator.
void print_term(std::ostringstream& os, bool first, const LaurentPoly& c, const std::string& mono) {
  std::string cs = c.str();
  if (c.terms().size() > 1) {
    if (!first) os << " + ";
    os << '(' << cs << ')';
    if (!mono.empty()) os << '*' << mono;
    return;
  }
  const bool neg = !cs.empty() && cs[0] == '-';
  if (!first) {
    os << (neg ? " - " : " + ");
    if (neg) cs = cs.substr(1);
  }
  if (mono.empty()) {
    os << cs;
  } else if (cs == "1") {
    os << mono;
  } else if (cs == "-1") {
    os << '-' << mono;
  } else {
    os << cs << '*' << mono;
  }
}

}  // namespace

std::string QElement::str() const {
  if (terms_.empty()) return "0";
  AlgebraContext ctx{n_};
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    print_term(os, first, c, w.empty() ? "" : monomial_str(ctx, w));
    first = false;
  }
  return os.str();
}

std::string TensorElement::str() const {
  if (terms_.empty()) return "0";
  AlgebraContext ctx{n_};
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string mono = monomial_str(ctx, k.first) + " (x) " + monomial_str(ctx, k.second);
    print_term(os, first, c, mono);
    first = false;
  }
  return os.str();
}

}  // namespace qhs
