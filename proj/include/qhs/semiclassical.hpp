#pragma once

#include "qhs/commutative.hpp"
#include "qhs/qmatrix.hpp"

namespace qhs {

// PBW-ordered quantum monomials with the same rational coefficients: the
// simplest section of specialize_q1.
QElement canonical_lift(const CommPoly& p);

// Bracket from explicitly chosen lifts: (p'r' - r'p')/(q-1) evaluated at
// q = 1. Divisibility always holds for genuine lifts; NotDivisible otherwise.
CommPoly poisson_bracket_lifted(const QElement& lift_p, const QElement& lift_r);

// {p, r} via canonical lifts.
CommPoly poisson_bracket(const CommPoly& p, const CommPoly& r);

struct PoissonRing {
  int n = 1;
  CommPoly bracket(const CommPoly& p, const CommPoly& r) const { return poisson_bracket(p, r); }
};

struct PoissonAxiomReport {
  int samples = 0;
  bool antisymmetry = false;
  bool leibniz = false;
  bool jacobi = false;
  bool coproduct_compat = false;
  bool ok() const { return antisymmetry && leibniz && jacobi && coproduct_compat; }
};

// Antisymmetry, Leibniz and Jacobi on random triples of degree <= 2
// polynomials, plus Delta{f,g} = {Delta f, Delta g} on all generator pairs
// (componentwise tensor bracket).
PoissonAxiomReport poisson_axiom_suite(const PoissonRing& pr, int samples);

}  // namespace qhs
