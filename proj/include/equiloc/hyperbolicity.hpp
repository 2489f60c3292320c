#pragma once

#include <optional>

#include "equiloc/polynomial.hpp"
#include "equiloc/thom.hpp"

namespace equiloc {

// h with h^(n+1) = 0
RingPtr tower_ring(int n);

// Coefficient of h^n in the iterated residue
//   prod_{i<j}(z_i - z_j) Q_n extra / [prod(z_i + z_j - z_l) (z_1...z_n)^n]
//     * prod_l (1 + d h/z_l) (1 + h/z_l)^-(n+2)
// with z_n most dominant and the Thom orientation (-1)^n. extra is a
// polynomial in z, h, d, delta, m. Integrating over X multiplies by d.
Polynomial tower_fiber_integral(int n, const Polynomial& extra, const QTable& q, const ResidueOptions& options = {});

// d * tower_fiber_integral
Polynomial jet_tower_integral(int n, const Polynomial& extra, const QTable& q, const ResidueOptions& options = {});

// (z_1 + ... + z_n + 2n^2 h)^(n^2) - n^2 (...)^(n^2-1) (2n^2 + delta C(n+1,2)(d-n-2)) h
Polynomial gg_integrand(int n);

struct GGResult {
  int n = 0;
  Polynomial p;             // h^n coefficient, degree <= n in d
  Polynomial intersection;  // d * p
  Rational theta;
  Polynomial leading;       // coefficient of d^n in p
};

Rational theta(int n, const QTable& q, const ResidueOptions& options = {});
GGResult gg_polynomial(int n, const QTable& q, const ResidueOptions& options = {});

// (1 - n^2 C(n+1,2) delta) Theta(n)
Polynomial expected_leading(int n, const Rational& theta_n);

struct Threshold {
  Rational delta;
  Polynomial at_delta;  // p(n, d, delta) as a polynomial in d
  Integer d0;           // p > 0 for every integer d >= d0
};

// Requires a positive leading coefficient at the given delta.
Threshold positivity_threshold(const GGResult& r, const Rational& delta);

// Universal Todd polynomial in c1..cn up to weighted degree n.
Polynomial todd_polynomial(int n);

// Td(T_X) for a degree d hypersurface in P^(n+1), c(T_X) = (1+h)^(n+2)/(1+dh).
Polynomial todd_class(int n);

struct EulerResult {
  int n = 0;
  std::optional<Rational> d;
  Polynomial chi;  // in m, and in d when d is symbolic
};

EulerResult euler_characteristic(int n, const QTable& q, std::optional<Rational> d = std::nullopt,
                                 const ResidueOptions& options = {});

}  // namespace equiloc
