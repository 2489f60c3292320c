#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "equiloc/laurent.hpp"
#include "equiloc/polynomial.hpp"

namespace equiloc {

// a_0 + sum_i a_i z_i, where a_0 is a polynomial in non-residue variables
// and the a_i are rational.
class AffineForm {
 public:
  AffineForm() = default;
  AffineForm(Polynomial constant, std::map<Var, Rational> linear);

  // Splits a polynomial of degree <= 1 in the residue variables. Throws
  // Error(invalid_argument) if a residue variable appears non-linearly or
  // multiplied by a parameter.
  static AffineForm from_polynomial(const Polynomial& p);

  const Polynomial& constant() const { return constant_; }
  const std::map<Var, Rational>& linear() const { return linear_; }
  Rational coefficient(Var z) const;

  bool is_pure_parameter() const { return linear_.empty(); }

  // The variable of highest dominance rank with a nonzero coefficient.
  // ordering runs from least to most dominant.
  std::optional<Var> dominant(std::span<const Var> ordering) const;

  Polynomial to_polynomial() const;

 private:
  Polynomial constant_;
  std::map<Var, Rational> linear_;
};

struct ResidueForm {
  LaurentSeries numerator;
  std::vector<AffineForm> denominators;
  std::vector<Var> ordering;  // least dominant first
};

struct ResidueOptions {
  int cap = 256;         // largest geometric-series order allowed per variable
  int extra_order = 0;   // widens every window; never changes an exact result
};

// 1/omega = sum_j (-1)^j (omega - a z)^j / (a z)^(j+1) with z the dominant
// variable of omega, keeping exponents of z inside [window.lo, -1].
LaurentSeries expand_inverse(const AffineForm& omega, std::span<const Var> ordering, int window_lo);

// Iterated residue at infinity: (-1)^d times the coefficient of
// z_1^-1 ... z_d^-1 in the expansion of the form on the dominance regime.
// Variables are eliminated from the most dominant down.
Polynomial iterated_residue(const ResidueForm& form, const ResidueOptions& options = {});

// (-1)^d for d residue variables.
int orientation_sign(std::size_t d);

// Coefficient of prod z_i^exponents[i] in the Laurent expansion of
// numerator / prod(denominators) on the dominance regime of form.ordering.
Polynomial expansion_coefficient(const ResidueForm& form, std::span<const int> exponents,
                                 const ResidueOptions& options = {});

}  // namespace equiloc
