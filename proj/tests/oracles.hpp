#pragma once

// Independent oracles shared by the unit tests and the acceptance runner.

#include <map>
#include <random>
#include <vector>

#include "equiloc/parse.hpp"
#include "equiloc/residue.hpp"
#include "equiloc/thom.hpp"

namespace oracle {

using namespace equiloc;

inline Polynomial c(int i) {
  return i == 0 ? Polynomial(1) : i < 0 ? Polynomial() : Polynomial::variable(Var::c(unsigned(i)));
}

// Dense Laurent polynomials in z1..zk, coefficients rational.
using Dense = std::map<std::vector<int>, Rational>;

inline Dense mul(const Dense& a, const Dense& b) {
  Dense r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r[e] += ca * cb;
    }
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

inline Dense from_poly(const Polynomial& p, int k) {
  Dense r;
  for (const auto& t : p.terms()) {
    std::vector<int> e(std::size_t(k), 0);
    for (const auto& f : t.mono.factors()) e[f.var.index() - 1] = f.exp;
    r[e] += t.coef;
  }
  return r;
}

// 1/(z_i + z_j - z_l) = -sum_{t<=order} (z_i + z_j)^t z_l^(-t-1), z_l dominant.
inline Dense inverse(int k, int i, int j, int l, int order) {
  Dense base;
  std::vector<int> ei(std::size_t(k), 0), ej(std::size_t(k), 0);
  ei[std::size_t(i - 1)] = 1;
  ej[std::size_t(j - 1)] = 1;
  base[ei] += 1;
  base[ej] += 1;
  Dense power{{std::vector<int>(std::size_t(k), 0), Rational(1)}};
  Dense r;
  for (int t = 0; t <= order; ++t) {
    for (const auto& [e, cf] : power) {
      auto f = e;
      f[std::size_t(l - 1)] -= t + 1;
      r[f] -= cf;
    }
    power = mul(power, base);
  }
  return r;
}

// Coefficient of prod z^-1 in VQ/prod(...) * prod c(1/z_l) z_l^codim, read off
// by pairing each term z^a with c_{codim+1+a_1} ... c_{codim+1+a_k}.
inline Polynomial brute_thom(int k, int codim, int order) {
  const auto q = QTable::builtin();
  Dense a = from_poly(vandermonde(k) * q.at(k), k);
  for (const auto& [i, j, l] : thom_triples(k)) a = mul(a, inverse(k, i, j, l, order));
  Polynomial r;
  for (const auto& [e, cf] : a) {
    Polynomial term(cf);
    for (int x : e) term = term * c(codim + 1 + x);
    r += term;
  }
  return r;
}

inline Polynomial ronga(int codim) {
  Polynomial r = c(codim + 1) * c(codim + 1);
  for (int i = 1; i <= codim + 1; ++i) r += Rational(1 << (i - 1)) * c(codim + 1 - i) * c(codim + 1 + i);
  return r;
}


inline std::vector<Var> zs(int d) {
  std::vector<Var> v;
  for (int i = 1; i <= d; ++i) v.push_back(Var::z(unsigned(i)));
  return v;
}

// 1/(z_1 ... z_d) has iterated residue (-1)^d.
inline bool orientation_holds(int d) {
  ResidueForm f;
  f.numerator = LaurentSeries(Polynomial(1));
  f.ordering = zs(d);
  for (int i = 1; i <= d; ++i) f.denominators.push_back(AffineForm({}, {{Var::z(unsigned(i)), 1}}));
  return iterated_residue(f) == Polynomial(d % 2 ? -1 : 1);
}

inline Rational small(std::mt19937_64& rng, int lo, int hi) {
  return Rational(std::uniform_int_distribution<int>(lo, hi)(rng));
}

// Random polynomial in z_1..z_d and l_1, l_2 of degree <= deg.
inline Polynomial random_numerator(std::mt19937_64& rng, int d, int deg) {
  Polynomial p;
  const int terms = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int t = 0; t < terms; ++t) {
    Polynomial m = small(rng, -5, 5);
    const int e = std::uniform_int_distribution<int>(0, deg)(rng);
    for (int i = 0; i < e; ++i) {
      const int which = std::uniform_int_distribution<int>(1, d + 2)(rng);
      m *= which <= d ? Polynomial::variable(Var::z(unsigned(which)))
                      : Polynomial::variable(Var::l(unsigned(which - d)));
    }
    p += m;
  }
  return p;
}

// Random denominators: each involves at least one z, optionally a weight shift.
inline std::vector<AffineForm> random_denominators(std::mt19937_64& rng, int d, int count) {
  std::vector<AffineForm> out;
  for (int j = 0; j < count; ++j) {
    std::map<Var, Rational> lin;
    while (lin.empty())
      for (int i = 1; i <= d; ++i) {
        const Rational a = small(rng, -2, 2);
        if (a != 0) lin[Var::z(unsigned(i))] = a;
      }
    Polynomial constant;
    if (std::uniform_int_distribution<int>(0, 1)(rng)) constant = small(rng, -3, 3) * Polynomial::variable(Var::l(1));
    out.emplace_back(constant, lin);
  }
  return out;
}

inline ResidueForm make_form(const Polynomial& num, std::vector<AffineForm> dens, int d) {
  ResidueForm f;
  f.numerator = LaurentSeries(num);
  f.denominators = std::move(dens);
  f.ordering = zs(d);
  return f;
}

// Number of random forms on which Res(a N1 + b N2) != a Res(N1) + b Res(N2).
inline int linearity_failures(std::uint64_t seed, int count, int* nonzero = nullptr) {
  std::mt19937_64 rng(seed);
  int bad = 0;
  for (int t = 0; t < count; ++t) {
    const int d = std::uniform_int_distribution<int>(1, 3)(rng);
    const auto dens = random_denominators(rng, d, d + std::uniform_int_distribution<int>(0, 2)(rng));
    const auto n1 = random_numerator(rng, d, 4), n2 = random_numerator(rng, d, 4);
    const Rational a = small(rng, -7, 7), b = small(rng, -7, 7);
    const auto lhs = iterated_residue(make_form(a * n1 + b * n2, dens, d));
    const auto rhs = a * iterated_residue(make_form(n1, dens, d)) + b * iterated_residue(make_form(n2, dens, d));
    if (!(lhs == rhs)) ++bad;
    if (nonzero && !lhs.is_zero()) ++*nonzero;
  }
  return bad;
}

// Number of random forms whose residue changes when every window is widened.
inline int enlargement_failures(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  int bad = 0;
  for (int t = 0; t < count; ++t) {
    const int d = std::uniform_int_distribution<int>(1, 3)(rng);
    const auto form = make_form(random_numerator(rng, d, 4), random_denominators(rng, d, d + 1), d);
    ResidueOptions wide;
    wide.extra_order = std::uniform_int_distribution<int>(1, 6)(rng);
    wide.cap = 512;
    if (!(iterated_residue(form) == iterated_residue(form, wide))) ++bad;
  }
  return bad;
}

}  // namespace oracle
