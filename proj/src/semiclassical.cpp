#include "qhs/semiclassical.hpp"

#include <random>

namespace qhs {

QElement canonical_lift(const CommPoly& p) {
  QElement out(p.n());
  for (const auto& [w, c] : p.terms()) out.add_term(w, LaurentPoly(c));
  return out;
}

CommPoly poisson_bracket_lifted(const QElement& lift_p, const QElement& lift_r) {
  QElement comm = commutator(lift_p, lift_r);
  QElement scaled(comm.n());
  for (const auto& [w, c] : comm.terms()) scaled.add_term(w, c.div_qm1());
  return specialize_q1(scaled);
}

CommPoly poisson_bracket(const CommPoly& p, const CommPoly& r) {
  return poisson_bracket_lifted(canonical_lift(p), canonical_lift(r));
}

namespace {

// Product Poisson structure on the tensor square:
// {a (x) b, c (x) d} = {a,c} (x) bd + ac (x) {b,d}.
CommTensor tensor_poisson_bracket(const CommTensor& A, const CommTensor& B) {
  int n = A.n();
  CommTensor out(n);
  auto mono = [&](const Word& w) {
    CommPoly m(n);
    m.add_term(w, 1);
    return m;
  };
  for (const auto& [ka, ca] : A.terms()) {
    for (const auto& [kb, cb] : B.terms()) {
      Rational c = ca * cb;
      CommPoly left = poisson_bracket(mono(ka.first), mono(kb.first));
      CommPoly right_prod = mono(ka.second) * mono(kb.second);
      for (const auto& [wl, cl] : left.terms())
        for (const auto& [wr, cr] : right_prod.terms()) out.add_term(wl, wr, c * cl * cr);
      CommPoly left_prod = mono(ka.first) * mono(kb.first);
      CommPoly right = poisson_bracket(mono(ka.second), mono(kb.second));
      for (const auto& [wl, cl] : left_prod.terms())
        for (const auto& [wr, cr] : right.terms()) out.add_term(wl, wr, c * cl * cr);
    }
  }
  return out;
}

}  // namespace

PoissonAxiomReport poisson_axiom_suite(const PoissonRing& pr, int samples) {
  PoissonAxiomReport rep;
  rep.samples = samples;
  std::mt19937 rng(20111);
  std::uniform_int_distribution<int> degd(0, 2), posd(0, pr.n * pr.n - 1), coefd(-3, 3),
      ntermd(1, 3);

  auto rand_poly = [&]() {
    CommPoly f(pr.n);
    int terms = ntermd(rng);
    for (int t = 0; t < terms; ++t) {
      Word w;
      int d = degd(rng);
      for (int k = 0; k < d; ++k) w.push_back(static_cast<uint16_t>(posd(rng)));
      f.add_term(std::move(w), coefd(rng));
    }
    return f;
  };

  rep.antisymmetry = rep.leibniz = rep.jacobi = true;
  for (int s = 0; s < samples; ++s) {
    CommPoly f = rand_poly(), g = rand_poly(), h = rand_poly();
    CommPoly fg = pr.bracket(f, g);
    if (!(fg == -pr.bracket(g, f)) || !pr.bracket(f, f).is_zero()) rep.antisymmetry = false;
    if (!(pr.bracket(f, g * h) == fg * h + g * pr.bracket(f, h))) rep.leibniz = false;
    CommPoly jac = pr.bracket(f, pr.bracket(g, h)) + pr.bracket(g, pr.bracket(h, f)) +
                   pr.bracket(h, fg);
    if (!jac.is_zero()) rep.jacobi = false;
  }

  rep.coproduct_compat = true;
  for (int p1 = 0; p1 < pr.n * pr.n; ++p1) {
    for (int p2 = 0; p2 < pr.n * pr.n; ++p2) {
      CommPoly f(pr.n), g(pr.n);
      f.add_term(Word{static_cast<uint16_t>(p1)}, 1);
      g.add_term(Word{static_cast<uint16_t>(p2)}, 1);
      CommTensor lhs = comm_coproduct(pr.bracket(f, g));
      CommTensor rhs = tensor_poisson_bracket(comm_coproduct(f), comm_coproduct(g));
      if (!(lhs == rhs)) rep.coproduct_compat = false;
    }
  }
  return rep;
}

}  // namespace qhs
