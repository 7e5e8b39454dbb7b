#include <doctest.h>

#include <random>

#include "qhs/commutative.hpp"
#include "qhs/qmatrix.hpp"

using namespace qhs;

namespace {

const AlgebraContext ctx2{2};

QElement gen(const AlgebraContext& c, int i, int j) { return QElement::generator(c, i, j); }

LaurentPoly q(int k = 1) { return LaurentPoly::q(k); }

Word random_word(std::mt19937_64& rng, int n, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<int> pos(0, n * n - 1);
  Word w(static_cast<size_t>(len(rng)));
  for (auto& p : w) p = static_cast<uint16_t>(pos(rng));
  return w;
}

QElement random_element(std::mt19937_64& rng, const AlgebraContext& ctx, int maxdeg, int maxterms) {
  std::uniform_int_distribution<int> nterms(1, maxterms);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> expo(-2, 2);
  QElement e(ctx.n);
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    LaurentPoly c = LaurentPoly::monomial(num(rng), expo(rng));
    e += normal_form(ctx, random_word(rng, ctx.n, maxdeg), c);
  }
  return e;
}

}  // namespace

TEST_CASE("pinned rewriting rules for n=2") {
  // letters: a = x11, b = x12, c = x21, d = x22
  const uint16_t a = 0, b = 1, c = 2, d = 3;
  // c then b commute (antidiagonal)
  CHECK(normal_form(ctx2, {c, b}, 1) == normal_form(ctx2, {b, c}, 1));
  // b a -> q^-1 a b
  CHECK(normal_form(ctx2, {b, a}, 1) == normal_form(ctx2, {a, b}, q(-1)));
  // d a -> a d - (q - q^-1) b c
  QElement lhs = normal_form(ctx2, {d, a}, 1);
  QElement rhs = normal_form(ctx2, {a, d}, 1) - normal_form(ctx2, {b, c}, q() - q(-1));
  CHECK(lhs == rhs);
  // c a -> q^-1 a c (same column)
  CHECK(normal_form(ctx2, {c, a}, 1) == normal_form(ctx2, {a, c}, q(-1)));
}

TEST_CASE("multiply and commutator pinned values") {
  QElement a = gen(ctx2, 1, 1), b = gen(ctx2, 1, 2), c = gen(ctx2, 2, 1), d = gen(ctx2, 2, 2);
  QElement one = QElement::scalar(ctx2, 1);
  CHECK(multiply(one, d) == d);
  CHECK(commutator(b, c).is_zero());
  QElement bc = multiply(b, c);
  bc.scale(q() - q(-1));
  CHECK(commutator(a, d) == bc);
  // a b = q b a  <=>  [a, b] = (q - q^-1)/q... check via words directly
  CHECK(multiply(a, b) == normal_form(ctx2, {0, 1}, 1));
  CHECK(multiply(b, a) == normal_form(ctx2, {0, 1}, q(-1)));
}

TEST_CASE("context mismatch") {
  AlgebraContext ctx3{3};
  CHECK_THROWS_AS(multiply(gen(ctx2, 1, 1), gen(ctx3, 1, 1)), ContextMismatch);
  CHECK_THROWS_AS(normal_form(ctx2, {uint16_t{7}}, 1), InvalidGenerator);
  CHECK_THROWS_AS(pos_encode(ctx2, 3, 1), InvalidGenerator);
}

TEST_CASE("confluence: associativity and concat-consistency on random words") {
  std::mt19937_64 rng(20240818);
  for (int n = 1; n <= 3; ++n) {
    AlgebraContext ctx{n};
    for (int iter = 0; iter < 400; ++iter) {
      Word u = random_word(rng, n, 2), v = random_word(rng, n, 2), w = random_word(rng, n, 2);
      QElement nu = normal_form(ctx, u, 1), nv = normal_form(ctx, v, 1), nw = normal_form(ctx, w, 1);
      CHECK(multiply(multiply(nu, nv), nw) == multiply(nu, multiply(nv, nw)));
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      CHECK(multiply(nu, nv) == normal_form(ctx, uv, 1));
    }
  }
}

TEST_CASE("PBW dimensions for n=2: C(k+3,3), and products stay in degree") {
  auto binom = [](int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int k = 0; k <= 5; ++k) {
    auto basis = homog_basis(ctx2, k);
    CHECK(static_cast<long>(basis.size()) == binom(k + 3, 3));
  }
  // relations are degree-homogeneous: rewriting a degree-k word stays degree k
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 50; ++iter) {
    Word w = random_word(rng, 2, 5);
    QElement nf = normal_form(ctx2, w, 1);
    for (const auto& [m, c] : nf.terms()) CHECK(m.size() == w.size());
  }
  AlgebraContext ctx4{4};
  CHECK(homog_basis(ctx4, 2).size() == 136);
}

TEST_CASE("coproduct and counit pinned values") {
  QElement a = gen(ctx2, 1, 1);
  TensorElement expect(2);
  expect.add_term({0}, {0}, 1);  // x11 (x) x11
  expect.add_term({1}, {2}, 1);  // x12 (x) x21
  CHECK(coproduct(a) == expect);
  CHECK(counit(gen(ctx2, 1, 2)).is_zero());
  CHECK(counit(gen(ctx2, 1, 1)) == LaurentPoly(1));
  QElement one = QElement::scalar(ctx2, 1);
  CHECK(coproduct(one) == tensor_of(one, one));
}

TEST_CASE("coalgebra axioms on random elements") {
  std::mt19937_64 rng(99);
  for (int n = 1; n <= 3; ++n) {
    AlgebraContext ctx{n};
    for (int iter = 0; iter < 25; ++iter) {
      QElement f = random_element(rng, ctx, 3, 3);
      QElement g = random_element(rng, ctx, 2, 2);
      // morphism properties
      CHECK(coproduct(multiply(f, g)) == tensor_multiply(coproduct(f), coproduct(g)));
      CHECK(counit(multiply(f, g)) == counit(f) * counit(g));
      // counit axioms: (eps (x) id) Delta = id = (id (x) eps) Delta
      TensorElement cp = coproduct(f);
      QElement left(ctx.n), right(ctx.n);
      for (const auto& [k, c] : cp.terms()) {
        left += normal_form(ctx, k.second, c * counit(normal_form(ctx, k.first, 1)));
        right += normal_form(ctx, k.first, c * counit(normal_form(ctx, k.second, 1)));
      }
      CHECK(left == f);
      CHECK(right == f);
    }
  }
}

TEST_CASE("coassociativity on generators and random elements") {
  std::mt19937_64 rng(1234);
  for (int n = 2; n <= 3; ++n) {
    AlgebraContext ctx{n};
    std::vector<QElement> sample;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) sample.push_back(gen(ctx, i, j));
    for (int iter = 0; iter < 12; ++iter) sample.push_back(random_element(rng, ctx, 3, 2));
    for (const QElement& f : sample) {
      // Compare (Delta (x) id) Delta with (id (x) Delta) Delta as maps of
      // triple tensors keyed by three normal words.
      using Triple = std::tuple<Word, Word, Word>;
      std::map<Triple, LaurentPoly> lhs, rhs;
      auto addto = [](std::map<Triple, LaurentPoly>& m, const Word& a, const Word& b, const Word& c,
                      const LaurentPoly& v) {
        auto key = Triple{a, b, c};
        auto it = m.find(key);
        if (it == m.end())
          m.emplace(key, v);
        else {
          it->second += v;
          if (it->second.is_zero()) m.erase(it);
        }
      };
      TensorElement cp = coproduct(f);
      for (const auto& [k, c] : cp.terms()) {
        TensorElement dl = coproduct(normal_form(ctx, k.first, c));
        for (const auto& [k2, c2] : dl.terms()) addto(lhs, k2.first, k2.second, k.second, c2);
        TensorElement dr = coproduct(normal_form(ctx, k.second, c));
        for (const auto& [k2, c2] : dr.terms()) addto(rhs, k.first, k2.first, k2.second, c2);
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("parabolic projection") {
  QElement a = gen(ctx2, 1, 1), b = gen(ctx2, 1, 2), c = gen(ctx2, 2, 1), d = gen(ctx2, 2, 2);
  QElement detq = multiply(a, d) - [&] {
    QElement bc = multiply(b, c);
    bc.scale(q());
    return bc;
  }();
  CHECK(parabolic_project(detq, 1) == multiply(a, d));
  CHECK(parabolic_project(a, 1) == a);
  CHECK(parabolic_project(c, 1).is_zero());
  CHECK_THROWS_AS(parabolic_project(a, 2), InvalidBlock);
  CHECK_THROWS_AS(parabolic_project(a, 0), InvalidBlock);
}

TEST_CASE("parabolic projection is an algebra and coalgebra morphism") {
  std::mt19937_64 rng(777);
  for (int n = 2; n <= 3; ++n) {
    AlgebraContext ctx{n};
    for (int r = 1; r < n; ++r) {
      auto killed = parabolic_killed_mask(ctx, r);
      for (int iter = 0; iter < 30; ++iter) {
        QElement f = random_element(rng, ctx, 3, 3);
        QElement g = random_element(rng, ctx, 3, 3);
        // pi(fg) = pi(f) pi(g) with the product taken in the quotient
        CHECK(project_killed(multiply(f, g), killed) ==
              project_killed(multiply(project_killed(f, killed), project_killed(g, killed)), killed));
        // (pi (x) pi) Delta(f) = Delta(pi f) computed in the quotient
        TensorElement lhs(ctx.n), rhs(ctx.n);
        TensorElement cp = coproduct(f);
        for (const auto& [k, c] : cp.terms()) {
          QElement l = project_killed(normal_form(ctx, k.first, c), killed);
          QElement rr = project_killed(normal_form(ctx, k.second, 1), killed);
          for (const auto& [wl, cl] : l.terms())
            for (const auto& [wr, cr] : rr.terms()) lhs.add_term(wl, wr, cl * cr);
        }
        TensorElement cpq = coproduct(project_killed(f, killed));
        for (const auto& [k, c] : cpq.terms()) {
          QElement l = project_killed(normal_form(ctx, k.first, c), killed);
          QElement rr = project_killed(normal_form(ctx, k.second, 1), killed);
          for (const auto& [wl, cl] : l.terms())
            for (const auto& [wr, cr] : rr.terms()) rhs.add_term(wl, wr, cl * cr);
        }
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("specialization at q=1 is an algebra morphism onto the commutative ring") {
  std::mt19937_64 rng(31337);
  AlgebraContext ctx{2};
  QElement a = gen(ctx, 1, 1), d = gen(ctx, 2, 2);
  QElement f = commutator(a, d);
  // ad - da = (q - q^-1) bc specializes to 0
  CHECK(specialize_q1(f).is_zero());
  QElement qbc = multiply(gen(ctx, 1, 2), gen(ctx, 2, 1));
  qbc.scale(q());
  CHECK(specialize_q1(qbc) == CommPoly::generator(ctx, 1, 2) * CommPoly::generator(ctx, 2, 1));
  for (int iter = 0; iter < 40; ++iter) {
    QElement u = random_element(rng, ctx, 3, 3), v = random_element(rng, ctx, 3, 3);
    CHECK(specialize_q1(multiply(u, v)) == specialize_q1(u) * specialize_q1(v));
    CHECK(specialize_q1(u + v) == specialize_q1(u) + specialize_q1(v));
  }
}

TEST_CASE("n=1 degenerate algebra is the commutative polynomial ring") {
  AlgebraContext ctx{1};
  QElement x = QElement::generator(ctx, 1, 1);
  CHECK(multiply(x, x) == normal_form(ctx, {0, 0}, 1));
  CHECK(commutator(x, x).is_zero());
  CHECK(counit(x) == LaurentPoly(1));
  CHECK(coproduct(x) == tensor_of(x, x));
  CHECK(homog_basis(ctx, 5).size() == 1);
}

TEST_CASE("canonical text form") {
  QElement a = gen(ctx2, 1, 1), b = gen(ctx2, 1, 2), c = gen(ctx2, 2, 1), d = gen(ctx2, 2, 2);
  CHECK(normal_form(ctx2, {3, 0}, 1).str() == "x[1,1]*x[2,2] + (q^-1 - q)*x[1,2]*x[2,1]");
  QElement detq = multiply(a, d) - [&] {
    QElement bc = multiply(b, c);
    bc.scale(q());
    return bc;
  }();
  CHECK(detq.str() == "x[1,1]*x[2,2] - q*x[1,2]*x[2,1]");
  CHECK(QElement::scalar(ctx2, 1).str() == "1");
  CHECK(QElement(2).str() == "0");
  QElement e = a;
  e.scale(-q(2));
  CHECK(e.str() == "-q^2*x[1,1]");
  TensorElement t = coproduct(a);
  CHECK(t.str() == "x[1,1] (x) x[1,1] + x[1,2] (x) x[2,1]");
}
