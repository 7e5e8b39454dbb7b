#pragma once

#include <string>
#include <vector>

#include "qhs/qminors.hpp"

namespace qhs {

// Syntax tree over rational literals, q, generators, minors and + - * ^ ( ).
struct Expression {
  enum class Node { rational, q_symbol, generator, minor, add, sub, mul, pow, negate };
  Node node = Node::rational;
  Rational value;         // rational
  int i = 0, j = 0;       // generator
  IndexTuple rows, cols;  // minor
  int exponent = 0;       // pow
  std::vector<Expression> children;
};

// Hand-written LL(1) recursive descent with byte-offset diagnostics:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' int]
//   atom   := rational | 'q' | 'x[' i ',' j ']' | 'D[' rows ';' cols ']' | '(' expr ')'
// Negative exponents are admitted only on q and on the full determinant
// D[1..n;1..n]. Throws SyntaxError and IndexOutOfRange.
Expression parse_expression(const std::string& src, const AlgebraContext& ctx);

// Evaluate in O_q(GL_n): polynomial numerator over a central power of det_q.
CentralFraction evaluate(const AlgebraContext& ctx, const Expression& e);

// Canonical text for an evaluated fraction; parses back to an equal value.
std::string fraction_str(const AlgebraContext& ctx, const CentralFraction& f);

}  // namespace qhs
