#include <doctest.h>

#include <map>

#include "equiloc/error.hpp"
#include "equiloc/parse.hpp"
#include "equiloc/thom.hpp"
#include "oracles.hpp"

using namespace equiloc;
using oracle::brute_thom;
using oracle::ronga;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }
Polynomial c(int i) { return i == 0 ? Polynomial(1) : i < 0 ? Polynomial() : Polynomial::variable(Var::c(unsigned(i))); }

}  // namespace

TEST_CASE("QTable") {
  auto q = QTable::builtin();
  CHECK(q.at(4) == P("2*z1+z2-z4"));
  CHECK(q.verified(3));
  CHECK_THROWS_AS(q.at(5), Error);
  q.add(5, P("z1+z5"));
  CHECK(q.has(5));
  CHECK(!q.verified(5));
  CHECK_THROWS_AS(q.add(4, P("z1")), Error);
  CHECK_THROWS_AS(q.add(5, P("z6")), Error);
  CHECK(thom_triples(3).size() == 3);
  CHECK(thom_triples(4).size() == 7);
}

TEST_CASE("Porteous family") {
  const auto q = QTable::builtin();
  for (int l = 0; l <= 6; ++l) {
    auto r = thom_polynomial(1, l, q);
    CHECK(r.polynomial == c(l + 1));
    CHECK(r.sign_calibration == -1);
  }
}

TEST_CASE("brute-force oracle agrees with the engine") {
  const auto q = QTable::builtin();
  // The oracle needs expansion order at most top - K + 1; twice that leaves margin.
  CHECK(brute_thom(2, 0, 6) == P("c1^2 + c2"));
  CHECK(brute_thom(2, 0, 6) == brute_thom(2, 0, 12));
  CHECK(brute_thom(3, 0, 8) == P("c1^3 + 3*c1*c2 + 2*c3"));
  CHECK(brute_thom(2, 1, 8) == thom_polynomial(2, 1, q).polynomial);
  CHECK(brute_thom(3, 1, 10) == thom_polynomial(3, 1, q).polynomial);
  CHECK(brute_thom(4, 0, 10) == thom_polynomial(4, 0, q).polynomial);
}

TEST_CASE("classical values") {
  const auto q = QTable::builtin();
  CHECK(thom_polynomial(2, 0, q).polynomial == P("c1^2 + c2"));
  CHECK(thom_polynomial(3, 0, q).polynomial == P("c1^3 + 3*c1*c2 + 2*c3"));
  for (int l = 0; l <= 4; ++l) CHECK(thom_polynomial(2, l, q).polynomial == ronga(l));
  CHECK(thom_polynomial(4, 0, q).polynomial == P("c1^4 + 6*c1^2*c2 + 2*c2^2 + 9*c1*c3 + 6*c4"));
}

TEST_CASE("grade filter and window enlargement do not change results") {
  const auto q = QTable::builtin();
  ThomOptions plain;
  plain.grade_filter = false;
  ThomOptions wide;
  wide.residue.extra_order = 3;
  for (int k = 1; k <= 3; ++k)
    for (int l = 0; l <= 1; ++l) {
      auto ref = thom_polynomial(k, l, q).polynomial;
      CHECK(thom_polynomial(k, l, q, plain).polynomial == ref);
      CHECK(thom_polynomial(k, l, q, wide).polynomial == ref);
    }
}

TEST_CASE("degree, integrality and positivity for k <= 4, l <= 2") {
  const auto q = QTable::builtin();
  for (int k = 1; k <= 4; ++k)
    for (int l = 0; l <= 2; ++l) {
      auto r = thom_polynomial(k, l, q);
      CHECK(!r.polynomial.is_zero());
      for (const auto& t : r.polynomial.terms()) CHECK(t.mono.chern_weight() == k * (l + 1));
      CHECK(positivity_check(r).ok());
    }
}

TEST_CASE("positivity detector") {
  ThomResult r;
  r.polynomial = P("c1^2 - c2");
  auto rep = positivity_check(r);
  REQUIRE(rep.negative.size() == 1);
  CHECK(rep.negative[0].mono == Monomial(Var::c(2)));
  r.polynomial = P("c1");
  CHECK(positivity_check(r).ok());
}

TEST_CASE("errors") {
  const auto q = QTable::builtin();
  CHECK_THROWS_AS(thom_polynomial(5, 0, q), Error);
  CHECK_THROWS_AS(thom_polynomial(2, -1, q), Error);
}

TEST_CASE("ratio check") {
  const auto q = QTable::builtin();
  auto r1 = ratio_check(1, q, 3);
  CHECK(r1.ratios.empty());
  CHECK(r1.all_below());
  auto r2 = ratio_check(2, q, 6);
  CHECK(r2.bound == 4);
  CHECK(!r2.coefficients.empty());
  CHECK(!r2.ratios.empty());
  for (const auto& e : r2.ratios) {
    CHECK(e.numerator.size() == 2);
    CHECK(e.denominator[0] == e.numerator[0] + 1);
    CHECK(e.below_bound == (e.ratio < 4));
  }
  // (z1 - z2)/(2 z1 - z2) = 1 + sum_{j>=1} 2^(j-1) (z1/z2)^j
  CHECK(r2.coefficients.at({0, 0}) == 1);
  CHECK(r2.coefficients.at({3, -3}) == 4);
  auto r4 = ratio_check(4, q, 4);
  CHECK(!r4.coefficients.empty());
}
