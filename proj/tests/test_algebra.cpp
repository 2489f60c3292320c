#include <doctest.h>

#include <random>

#include "equiloc/error.hpp"
#include "equiloc/parse.hpp"
#include "equiloc/polynomial.hpp"

using namespace equiloc;

namespace {

Polynomial P(const char* s, RingPtr ring = nullptr) { return parse_polynomial(s, ring); }

Polynomial random_poly(std::mt19937_64& rng, const std::vector<Var>& vars, int terms, int max_exp) {
  std::uniform_int_distribution<int> coef(-9, 9), ex(0, max_exp);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    std::vector<Factor> fs;
    for (Var v : vars) fs.push_back({v, ex(rng)});
    std::erase_if(fs, [](const Factor& f) { return f.exp == 0; });
    ts.push_back({Monomial::from_factors(fs), Rational(coef(rng))});
  }
  return Polynomial::from_terms(ts);
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::invalid_argument;
}

}  // namespace

TEST_CASE("poly_arith examples") {
  CHECK(P("(z1+1)*(z1-1)") == P("z1^2-1"));
  CHECK((P("z1-z2") * P("1")) == P("z1-z2"));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10; ++i) CHECK((random_poly(rng, {Var::z(1), Var::c(2)}, 5, 3) * P("0")).is_zero());
}

TEST_CASE("canonical output") {
  CHECK(P("2*c3 + c1^3 + 3*c2*c1").to_string() == "c1^3 + 3*c1*c2 + 2*c3");
  CHECK(P("-c2").to_string() == "-c2");
  CHECK(P("1/2 * c1").to_string() == "1/2*c1");
  CHECK(P("c1 - c1").to_string() == "0");
  CHECK(P(" 3/6 ").to_string() == "1/2");
}

TEST_CASE("parse errors") {
  CHECK(kind_of([] { P("c1 +"); }) == ErrorKind::parse);
  CHECK(kind_of([] { P("x1"); }) == ErrorKind::parse);
  CHECK(kind_of([] { P("(c1"); }) == ErrorKind::parse);
  CHECK(kind_of([] { P("c0"); }) == ErrorKind::parse);
}

TEST_CASE("exact_divide examples") {
  CHECK(exact_divide(P("z1^2-1"), P("z1-1")) == P("z1+1"));
  CHECK(exact_divide(P("z1^2-z2^2"), P("z1+z2")) == P("z1-z2"));
  CHECK(kind_of([] { exact_divide(P("z1+1"), P("z1-1")); }) == ErrorKind::not_divisible);
}

TEST_CASE("evaluate examples") {
  CHECK(evaluate(P("l1+l2"), {{Var::l(1), 0}, {Var::l(2), 1}}) == P("1"));
  auto ring = make_ring({{Var::h(), 1}});
  CHECK(evaluate(P("h^2", ring), {{Var::h(), 3}}).is_zero());
  CHECK(evaluate(P("c1^2+c2"), {{Var::c(1), 2}, {Var::c(2), 1}}) == P("5"));
  CHECK(evaluate(P("c1*l1+c2"), {{Var::c(1), 2}}) == P("2*l1+c2"));
}

TEST_CASE("symmetric_reduce examples") {
  CHECK(symmetric_reduce(P("l1*l2+l1*l3+l2*l3"), 3) == P("e2"));
  CHECK(symmetric_reduce(P("l1^2+l2^2"), 2) == P("e1^2-2*e2"));
  CHECK(kind_of([] { symmetric_reduce(P("l1-l2"), 2); }) == ErrorKind::not_symmetric);
}

TEST_CASE("ring laws on random triples") {
  std::mt19937_64 rng(11);
  const std::vector<Var> vars{Var::z(1), Var::l(1), Var::c(2), Var::d()};
  for (int i = 0; i < 30; ++i) {
    auto a = random_poly(rng, vars, 4, 2), b = random_poly(rng, vars, 4, 2), c = random_poly(rng, vars, 3, 2);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Polynomial());
  }
}

TEST_CASE("exact_divide inverts multiplication") {
  std::mt19937_64 rng(12);
  const std::vector<Var> vars{Var::z(1), Var::z(2), Var::l(1)};
  for (int i = 0; i < 30; ++i) {
    auto a = random_poly(rng, vars, 4, 2), b = random_poly(rng, vars, 3, 2);
    if (b.is_zero()) continue;
    CHECK(exact_divide(a * b, b) == a);
  }
}

TEST_CASE("symmetric_reduce inverts e substitution") {
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 4; ++n) {
    std::vector<Var> es;
    std::vector<Polynomial> ls;
    for (int i = 1; i <= n; ++i) {
      es.push_back(Var::e(i));
      ls.push_back(Polynomial::variable(Var::l(i)));
    }
    std::map<Var, Polynomial> images;
    for (int i = 1; i <= n; ++i) images[Var::e(i)] = elementary_symmetric(i, ls);
    for (int t = 0; t < 8; ++t) {
      auto q = random_poly(rng, es, 3, 2) + random_poly(rng, {Var::c(1)}, 1, 1);
      auto sym = substitute(q, images);
      CHECK(symmetric_reduce(sym, n) == q);
    }
  }
}

TEST_CASE("nilpotent truncation") {
  auto ring = make_ring({{Var::h(), 3}});
  auto h = Polynomial::variable(Var::h(), ring);
  CHECK(!h.pow(3).is_zero());
  CHECK(h.pow(4).is_zero());
  CHECK((P("1+h+d*h^2", ring) * P("h^2", ring)) == P("h^2+h^3", ring));
  auto other = make_ring({{Var::h(), 2}});
  CHECK(kind_of([&] { (void)(h * Polynomial::variable(Var::h(), other)); }) == ErrorKind::ring_mismatch);
}
