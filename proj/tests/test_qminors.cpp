#include <doctest.h>

#include "qhs/commutative.hpp"
#include "qhs/errors.hpp"
#include "qhs/qminors.hpp"
#include "qhs/qmatrix.hpp"

using namespace qhs;

namespace {

QElement gen(const AlgebraContext& ctx, int i, int j) { return QElement::generator(ctx, i, j); }

}  // namespace

TEST_CASE("quantum minor pins") {
  AlgebraContext c2{2}, c3{3};

  // det_q for n=2: ad - q bc.
  QElement det2 = quantum_det(c2);
  QElement expect = multiply(gen(c2, 1, 1), gen(c2, 2, 2));
  QElement qbc = multiply(gen(c2, 1, 2), gen(c2, 2, 1));
  qbc.scale(LaurentPoly::q());
  expect -= qbc;
  CHECK(det2 == expect);
  CHECK(det2.str() == "x[1,1]*x[2,2] - q*x[1,2]*x[2,1]");

  // 1x1 minor is a single generator.
  CHECK(quantum_minor(c2, {1}, {2}) == gen(c2, 1, 2));

  // n=3, I=(1,2), J=(1,3): two terms, coefficients 1 and -q.
  QElement m = quantum_minor(c3, {1, 2}, {1, 3});
  QElement e = multiply(gen(c3, 1, 1), gen(c3, 2, 3));
  QElement t = multiply(gen(c3, 1, 3), gen(c3, 2, 1));
  t.scale(LaurentPoly::q());
  e -= t;
  CHECK(m == e);
  CHECK(m.terms().size() == 2);

  // r! distinct PBW terms, homogeneous of degree r.
  QElement det3 = quantum_det(c3);
  CHECK(det3.terms().size() == 6);
  CHECK(det3.degree() == 3);
  for (const auto& [w, c] : det3.terms()) CHECK(w.size() == 3);
}

TEST_CASE("index tuple validation") {
  AlgebraContext c3{3};
  CHECK_THROWS_AS(quantum_minor(c3, {1, 2}, {1}), SizeMismatch);
  CHECK_THROWS_AS(quantum_minor(c3, {1, 4}, {1, 2}), IndexOutOfRange);
  CHECK_THROWS_AS(quantum_minor(c3, {2, 1}, {1, 2}), IndexOutOfRange);
  CHECK_THROWS_AS(quantum_minor(c3, {0}, {1}), IndexOutOfRange);
  CHECK_THROWS_AS(quantum_minor(c3, {}, {}), IndexOutOfRange);
  CHECK(index_tuples(4, 2).size() == 6);
  CHECK(index_tuples(3, 3) == std::vector<IndexTuple>{{1, 2, 3}});
}

TEST_CASE("specialization at q = 1 matches the classical minor oracle") {
  for (int n = 1; n <= 3; ++n) {
    AlgebraContext ctx{n};
    for (int r = 1; r <= n; ++r) {
      for (const IndexTuple& I : index_tuples(n, r))
        for (const IndexTuple& J : index_tuples(n, r))
          CHECK(specialize_q1(quantum_minor(ctx, I, J)) == classical_minor(ctx, I, J));
    }
  }
}

TEST_CASE("minor coproduct and counit identities") {
  AlgebraContext c1{1};
  CHECK(check_minor_coproduct(c1, {1}, {1}));

  for (int n = 2; n <= 3; ++n) {
    AlgebraContext ctx{n};
    for (int r = 1; r <= n; ++r)
      for (const IndexTuple& I : index_tuples(n, r))
        for (const IndexTuple& J : index_tuples(n, r)) CHECK(check_minor_coproduct(ctx, I, J));
  }
}

TEST_CASE("centrality of the quantum determinant") {
  for (int n = 2; n <= 3; ++n) {
    AlgebraContext ctx{n};
    CHECK(check_central(ctx, quantum_det(ctx)));
  }
  AlgebraContext c2{2};
  CHECK_FALSE(check_central(c2, gen(c2, 1, 1)));  // [a,d] = (q-q^-1)bc
  CHECK(check_central(c2, QElement::scalar(c2, 1)));
  // Non-diagonal minors are not central.
  CHECK_FALSE(check_central(c2, quantum_minor(c2, {1}, {2})));
}

TEST_CASE("exact division by det_q") {
  AlgebraContext c2{2};
  QElement det = quantum_det(c2);
  QElement a = gen(c2, 1, 1);

  auto one = divide_by_det(c2, det);
  REQUIRE(one.has_value());
  CHECK(*one == QElement::scalar(c2, 1));

  auto back = divide_by_det(c2, multiply(a, det));
  REQUIRE(back.has_value());
  CHECK(*back == a);

  // det * det, divided twice.
  auto dd = divide_by_det(c2, multiply(det, det));
  REQUIRE(dd.has_value());
  CHECK(*dd == det);

  CHECK_FALSE(divide_by_det(c2, a).has_value());
  CHECK_FALSE(divide_by_det(c2, multiply(a, gen(c2, 2, 2))).has_value());
  CHECK(divide_by_det(c2, QElement(2))->is_zero());

  // Mixed-degree dividend: (1 + a) * det.
  QElement f = multiply(QElement::scalar(c2, 1) + a, det);
  auto g = divide_by_det(c2, f);
  REQUIRE(g.has_value());
  CHECK(*g == QElement::scalar(c2, 1) + a);
}

TEST_CASE("central fractions") {
  AlgebraContext c2{2};
  QElement det = quantum_det(c2);
  QElement a = gen(c2, 1, 1), b = gen(c2, 1, 2), c = gen(c2, 2, 1);
  CentralFraction one{QElement::scalar(c2, 1), 0};

  // det/det = 1/1.
  CHECK(frac_eq(c2, CentralFraction{det, 1}, one));

  // (a/det) * (det/1) reduces to a/1.
  CentralFraction prod = frac_mul(c2, CentralFraction{a, 1}, CentralFraction{det, 0});
  CHECK(prod.det_power == 0);
  CHECK(prod.numerator == a);

  // (ad - q bc)/det = 1/1.
  QElement qbc = multiply(b, c);
  qbc.scale(LaurentPoly::q());
  QElement num = multiply(a, gen(c2, 2, 2)) - qbc;
  CHECK(frac_eq(c2, CentralFraction{num, 1}, one));

  // Addition over a common denominator.
  CentralFraction s = frac_add(c2, CentralFraction{a, 1}, CentralFraction{b, 1});
  CHECK(s.det_power == 1);
  CHECK(s.numerator == a + b);

  // a/1 + b/det = (a det + b)/det.
  CentralFraction t = frac_add(c2, CentralFraction{a, 0}, CentralFraction{b, 1});
  CHECK(t.det_power == 1);
  CHECK(t.numerator == multiply(a, det) + b);

  // Fraction arithmetic is associative and commutative where it should be.
  CentralFraction x{a, 1}, y{b, 0}, z{c, 2};
  CHECK(frac_eq(c2, frac_add(c2, x, y), frac_add(c2, y, x)));
  CHECK(frac_eq(c2, frac_add(c2, frac_add(c2, x, y), z), frac_add(c2, x, frac_add(c2, y, z))));
  CHECK(frac_eq(c2, frac_mul(c2, frac_mul(c2, x, y), z), frac_mul(c2, x, frac_mul(c2, y, z))));

  // Inequality.
  CHECK_FALSE(frac_eq(c2, CentralFraction{a, 1}, CentralFraction{a, 0}));

  // SL_2 image: denominators disappear.
  CHECK(sl_reduce(CentralFraction{a, 3}) == a);
  CHECK(sl_reduce(CentralFraction{num, 1}) == num);
}
