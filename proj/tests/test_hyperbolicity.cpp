#include <doctest.h>

#include "equiloc/error.hpp"
#include "equiloc/hyperbolicity.hpp"
#include "equiloc/parse.hpp"

using namespace equiloc;

namespace {

Polynomial P(const char* s, RingPtr ring = nullptr) { return parse_polynomial(s, ring); }

}  // namespace

TEST_CASE("universal Todd polynomial") {
  CHECK(todd_polynomial(1) == P("1 + 1/2*c1"));
  CHECK(todd_polynomial(2) == P("1 + 1/2*c1 + 1/12*(c1^2 + c2)"));
  CHECK(todd_polynomial(3) == P("1 + 1/2*c1 + 1/12*(c1^2 + c2) + 1/24*c1*c2"));
  // degree 4: (-c1^4 + 4 c1^2 c2 + 3 c2^2 + c1 c3 - c4)/720
  CHECK(todd_polynomial(4) ==
        P("1 + 1/2*c1 + 1/12*(c1^2 + c2) + 1/24*c1*c2 + 1/720*(-c1^4 + 4*c1^2*c2 + 3*c2^2 + c1*c3 - c4)"));
}

TEST_CASE("Todd class of a plane curve") {
  // c1(T_X) = (3 - d) h
  CHECK(todd_class(1) == P("1 + 3/2*h - 1/2*d*h", tower_ring(1)));
}

TEST_CASE("n = 1 against plane-curve geometry") {
  const auto q = QTable::builtin();
  // F - G = (1 - delta) K_X, K_X = (d - 3) h, integral of h is d
  auto r = gg_polynomial(1, q);
  CHECK(r.p == P("(1 - delta)*(d - 3)"));
  CHECK(r.intersection == P("(1 - delta)*d*(d - 3)"));
  CHECK(r.theta == 1);
  CHECK(r.leading == P("1 - delta"));
  // Riemann-Roch: deg(m K_X) + 1 - g, g = (d-1)(d-2)/2
  auto e = euler_characteristic(1, q);
  CHECK(e.chi == P("d*(d-3)*m - 1/2*d*(d-3)"));
  CHECK(euler_characteristic(1, q, Rational(5)).chi == P("10*m - 5"));
}

TEST_CASE("leading coefficient identity and theta positivity") {
  const auto q = QTable::builtin();
  for (int n = 1; n <= 4; ++n) {
    auto r = gg_polynomial(n, q);
    CHECK(r.theta > 0);
    CHECK(r.p.degree_in(Var::d()) <= n);
    CHECK(r.p.degree_in(Var::delta()) <= 1);
    CHECK(r.leading == expected_leading(n, r.theta));
    // delta root 2/(n^3(n+1))
    Rational root(2, n * n * n * (n + 1));
    root.canonicalize();
    CHECK(evaluate(r.leading, {{Var::delta(), root}}).is_zero());
    auto t = positivity_threshold(r, Rational(1, n * n * n * (n + 1)));
    CHECK(t.d0 >= 1);
    for (long d = t.d0.get_si(); d < t.d0.get_si() + 50; ++d)
      CHECK(evaluate(t.at_delta, {{Var::d(), Rational(d)}}).constant_term() > 0);
    if (t.d0 > 1) CHECK(evaluate(t.at_delta, {{Var::d(), Rational(t.d0 - 1)}}).constant_term() <= 0);
  }
}

TEST_CASE("Euler characteristic structure") {
  const auto q = QTable::builtin();
  for (int n = 1; n <= 3; ++n) {
    auto e = euler_characteristic(n, q);
    CHECK(e.chi.degree_in(Var::m()) <= n * n);
    CHECK(e.chi.degree_in(Var::m()) == n * n);
    auto at0 = evaluate(e.chi, {{Var::m(), 0}});
    CHECK(at0.degree_in(Var::m()) <= 0);
    // leading m coefficient * (n^2)! against the top self-intersection
    const Polynomial s = [&] {
      Polynomial x;
      for (int l = 1; l <= n; ++l) x += Polynomial::variable(Var::z(unsigned(l)));
      return x.pow(unsigned(n * n));
    }();
    auto lead = e.chi.collect(Var::m()).at(n * n) * Rational(factorial(n * n));
    CHECK(lead == jet_tower_integral(n, s, q));
  }
}

TEST_CASE("errors") {
  const auto q = QTable::builtin();
  CHECK_THROWS_AS(gg_polynomial(5, q), Error);
  CHECK_THROWS_AS(theta(0, q), Error);
}
