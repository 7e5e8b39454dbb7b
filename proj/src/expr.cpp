#include "qhs/expr.hpp"

#include <cctype>
#include <sstream>

#include "qhs/errors.hpp"

namespace qhs {

namespace {

class Parser {
 public:
  Parser(const std::string& src, const AlgebraContext& ctx) : src_(src), ctx_(ctx) {}

  Expression run() {
    Expression e = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) throw SyntaxError(pos_, "'+', '-', '*', or end of input");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c, const std::string& what) {
    if (!accept(c)) throw SyntaxError(pos_, what);
  }

  long parse_uint() {
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      throw SyntaxError(pos_, "a digit");
    long v = 0;
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      if (pos_ - start > 8) throw SyntaxError(start, "a shorter integer literal");
      v = v * 10 + (src_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  long parse_int() {
    bool neg = accept('-');
    long v = parse_uint();
    return neg ? -v : v;
  }

  IndexTuple parse_index_list() {
    IndexTuple t;
    t.push_back(static_cast<int>(parse_uint()));
    while (accept(',')) t.push_back(static_cast<int>(parse_uint()));
    return t;
  }

  Expression parse_atom() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expression e;
      e.node = Expression::Node::rational;
      long num = parse_uint();
      long den = 1;
      if (accept('/')) {
        std::size_t at = pos_;
        den = parse_uint();
        if (den == 0) throw SyntaxError(at, "a nonzero denominator");
      }
      e.value = Rational(num, den);
      e.value.canonicalize();
      return e;
    }
    if (accept('q')) {
      Expression e;
      e.node = Expression::Node::q_symbol;
      return e;
    }
    if (accept('x')) {
      expect('[', "'['");
      long i = parse_uint();
      expect(',', "','");
      long j = parse_uint();
      std::size_t at = pos_;
      expect(']', "']'");
      if (i < 1 || i > ctx_.n || j < 1 || j > ctx_.n)
        throw IndexOutOfRange("x[" + std::to_string(i) + "," + std::to_string(j) +
                              "] outside 1.." + std::to_string(ctx_.n) + " at offset " +
                              std::to_string(at));
      Expression e;
      e.node = Expression::Node::generator;
      e.i = static_cast<int>(i);
      e.j = static_cast<int>(j);
      return e;
    }
    if (accept('D')) {
      expect('[', "'['");
      Expression e;
      e.node = Expression::Node::minor;
      e.rows = parse_index_list();
      expect(';', "';'");
      e.cols = parse_index_list();
      std::size_t at = pos_;
      expect(']', "']'");
      validate_index_tuple(ctx_, e.rows);
      validate_index_tuple(ctx_, e.cols);
      if (e.rows.size() != e.cols.size())
        throw SyntaxError(at, "row and column lists of equal length");
      return e;
    }
    if (accept('(')) {
      Expression e = parse_expr();
      expect(')', "')'");
      return e;
    }
    throw SyntaxError(pos_, "a rational, 'q', 'x[i,j]', 'D[rows;cols]', or '('");
  }

  bool full_det(const Expression& e) const {
    if (e.node != Expression::Node::minor || static_cast<int>(e.rows.size()) != ctx_.n)
      return false;
    for (int k = 0; k < ctx_.n; ++k)
      if (e.rows[k] != k + 1 || e.cols[k] != k + 1) return false;
    return true;
  }

  Expression parse_factor() {
    Expression base = parse_atom();
    if (!accept('^')) return base;
    std::size_t at = pos_;
    long k = parse_int();
    if (k < 0 && base.node != Expression::Node::q_symbol && !full_det(base))
      throw SyntaxError(at,
                        "a nonnegative exponent (negative powers only on q and D[1..n;1..n])");
    Expression e;
    e.node = Expression::Node::pow;
    e.exponent = static_cast<int>(k);
    e.children.push_back(std::move(base));
    return e;
  }

  Expression parse_term() {
    Expression e = parse_factor();
    while (accept('*')) {
      Expression rhs = parse_factor();
      Expression m;
      m.node = Expression::Node::mul;
      m.children.push_back(std::move(e));
      m.children.push_back(std::move(rhs));
      e = std::move(m);
    }
    return e;
  }

  Expression parse_expr() {
    bool lead_neg = accept('-');
    Expression e = parse_term();
    if (lead_neg) {
      Expression m;
      m.node = Expression::Node::negate;
      m.children.push_back(std::move(e));
      e = std::move(m);
    }
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Expression rhs = parse_term();
      Expression b;
      b.node = c == '+' ? Expression::Node::add : Expression::Node::sub;
      b.children.push_back(std::move(e));
      b.children.push_back(std::move(rhs));
      e = std::move(b);
    }
    return e;
  }

  const std::string& src_;
  const AlgebraContext& ctx_;
  std::size_t pos_ = 0;
};

CentralFraction frac_scalar(const AlgebraContext& ctx, const LaurentPoly& c) {
  return {QElement::scalar(ctx, c), 0};
}

}  // namespace

Expression parse_expression(const std::string& src, const AlgebraContext& ctx) {
  return Parser(src, ctx).run();
}

CentralFraction evaluate(const AlgebraContext& ctx, const Expression& e) {
  switch (e.node) {
    case Expression::Node::rational:
      return frac_scalar(ctx, LaurentPoly::monomial(e.value, 0));
    case Expression::Node::q_symbol:
      return frac_scalar(ctx, LaurentPoly::q());
    case Expression::Node::generator:
      return {QElement::generator(ctx, e.i, e.j), 0};
    case Expression::Node::minor:
      return {quantum_minor(ctx, e.rows, e.cols), 0};
    case Expression::Node::add:
      return frac_add(ctx, evaluate(ctx, e.children[0]), evaluate(ctx, e.children[1]));
    case Expression::Node::sub: {
      CentralFraction rhs = evaluate(ctx, e.children[1]);
      rhs.numerator.scale(LaurentPoly::monomial(-1, 0));
      return frac_add(ctx, evaluate(ctx, e.children[0]), rhs);
    }
    case Expression::Node::mul:
      return frac_mul(ctx, evaluate(ctx, e.children[0]), evaluate(ctx, e.children[1]));
    case Expression::Node::negate: {
      CentralFraction v = evaluate(ctx, e.children[0]);
      v.numerator.scale(LaurentPoly::monomial(-1, 0));
      return v;
    }
    case Expression::Node::pow: {
      const Expression& base = e.children[0];
      if (base.node == Expression::Node::q_symbol)
        return frac_scalar(ctx, LaurentPoly::monomial(1, e.exponent));
      if (e.exponent < 0)  // legality checked at parse: base is the full det
        return {QElement::scalar(ctx, LaurentPoly::monomial(1, 0)), -e.exponent};
      CentralFraction acc = frac_scalar(ctx, LaurentPoly::monomial(1, 0));
      CentralFraction b = evaluate(ctx, base);
      for (int k = 0; k < e.exponent; ++k) acc = frac_mul(ctx, acc, b);
      return acc;
    }
  }
  throw Error("unreachable expression node");
}

std::string fraction_str(const AlgebraContext& ctx, const CentralFraction& f) {
  CentralFraction r = frac_reduce(ctx, f);
  if (r.numerator.is_zero()) return "0";
  if (r.det_power == 0) return r.numerator.str();
  std::ostringstream os;
  os << '(' << r.numerator.str() << ")*D[";
  for (int k = 1; k <= ctx.n; ++k) os << (k > 1 ? "," : "") << k;
  os << ';';
  for (int k = 1; k <= ctx.n; ++k) os << (k > 1 ? "," : "") << k;
  os << "]^-" << r.det_power;
  return os.str();
}

}  // namespace qhs
