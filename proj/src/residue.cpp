#include "equiloc/residue.hpp"

#include <algorithm>
#include <set>

#include "equiloc/error.hpp"

namespace equiloc {

AffineForm::AffineForm(Polynomial constant, std::map<Var, Rational> linear)
    : constant_(std::move(constant)), linear_(std::move(linear)) {
  for (const auto& v : constant_.variables())
    if (v.is_residue())
      throw Error(ErrorKind::invalid_argument, "constant part of an affine form contains " + v.name());
  std::erase_if(linear_, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [v, a] : linear_)
    if (!v.is_residue())
      throw Error(ErrorKind::invalid_argument, "linear part of an affine form contains parameter " + v.name());
}

AffineForm AffineForm::from_polynomial(const Polynomial& p) {
  std::vector<Term> constant;
  std::map<Var, Rational> linear;
  for (const auto& t : p.terms()) {
    int residue_degree = 0;
    for (const auto& f : t.mono.factors())
      if (f.var.is_residue()) residue_degree += f.exp;
    if (residue_degree == 0) {
      constant.push_back(t);
      continue;
    }
    if (residue_degree > 1 || t.mono.factors().size() != 1)
      throw Error(ErrorKind::invalid_argument, "not an affine form in the residue variables: " + p.to_string());
    linear[t.mono.factors()[0].var] += t.coef;
  }
  return AffineForm(Polynomial::from_terms(std::move(constant), p.ring()), std::move(linear));
}

Rational AffineForm::coefficient(Var z) const {
  auto it = linear_.find(z);
  return it == linear_.end() ? Rational(0) : it->second;
}

std::optional<Var> AffineForm::dominant(std::span<const Var> ordering) const {
  std::optional<Var> best;
  int best_rank = -1;
  for (const auto& [v, a] : linear_) {
    auto it = std::find(ordering.begin(), ordering.end(), v);
    if (it == ordering.end())
      throw Error(ErrorKind::invalid_argument, "residue variable " + v.name() + " missing from the ordering");
    const int rank = int(it - ordering.begin());
    if (rank > best_rank) {
      best_rank = rank;
      best = v;
    }
  }
  return best;
}

Polynomial AffineForm::to_polynomial() const {
  Polynomial p = constant_;
  for (const auto& [v, a] : linear_) p += a * Polynomial::variable(v, constant_.ring());
  return p;
}

int orientation_sign(std::size_t d) { return d % 2 == 0 ? 1 : -1; }

LaurentSeries expand_inverse(const AffineForm& omega, std::span<const Var> ordering, int window_lo) {
  const auto dom = omega.dominant(ordering);
  if (!dom)
    throw Error(ErrorKind::no_dominant_variable,
                "affine form " + omega.to_polynomial().to_string() + " has no residue variable");
  const Var z = *dom;
  const Rational a = omega.coefficient(z);
  const Polynomial rest = omega.to_polynomial() - a * Polynomial::variable(z, omega.constant().ring());
  std::map<Var, Window> windows{{z, Window{window_lo, -1}}};
  std::vector<Term> terms;
  // (-rest/a)^j / (a z^(j+1))
  const Polynomial ratio = rest * Rational(Rational(-1) / a);
  Polynomial power(Rational(1), omega.constant().ring());
  const Rational inv_a = 1 / a;
  for (int j = 0; -1 - j >= window_lo; ++j) {
    for (const auto& t : power.terms())
      terms.push_back({t.mono * Monomial(z, -1 - j), t.coef * inv_a});
    if (-2 - j < window_lo) break;
    power = power * ratio;
    if (power.is_zero()) break;
  }
  return LaurentSeries::from_terms(std::move(terms), omega.constant().ring(), std::move(windows));
}

namespace {

void validate(const ResidueForm& form) {
  std::set<Var> seen;
  for (Var v : form.ordering) {
    if (!v.is_residue())
      throw Error(ErrorKind::invalid_argument, "ordering contains non-residue variable " + v.name());
    if (!seen.insert(v).second)
      throw Error(ErrorKind::invalid_argument, "ordering repeats " + v.name());
  }
  for (Var v : form.numerator.variables())
    if (v.is_residue() && !seen.count(v))
      throw Error(ErrorKind::invalid_argument, "numerator variable " + v.name() + " missing from the ordering");
  if (!form.numerator.is_exact())
    throw Error(ErrorKind::invalid_argument, "numerator must be an exact Laurent polynomial");
  for (const auto& omega : form.denominators) {
    if (omega.is_pure_parameter())
      throw Error(ErrorKind::pure_parameter_denominator,
                  "denominator " + omega.to_polynomial().to_string() +
                      " contains no residue variable; clear it from the form first");
    (void)omega.dominant(form.ordering);
  }
}

}  // namespace

Polynomial iterated_residue(const ResidueForm& form, const ResidueOptions& options) {
  validate(form);
  LaurentSeries current = form.numerator;
  std::vector<AffineForm> pending = form.denominators;
  const std::span<const Var> ordering(form.ordering);

  for (std::size_t idx = form.ordering.size(); idx-- > 0;) {
    const Var z = form.ordering[idx];
    std::vector<AffineForm> mine;
    std::vector<AffineForm> rest;
    for (auto& omega : pending) (omega.dominant(ordering) == z ? mine : rest).push_back(std::move(omega));
    pending = std::move(rest);

    // Monomial denominators a*z only shift the exponent.
    int shift = 0;
    Rational scale = 1;
    std::vector<const AffineForm*> series_factors;
    for (const auto& omega : mine) {
      if (omega.linear().size() == 1 && omega.constant().is_zero()) {
        ++shift;
        scale /= omega.coefficient(z);
      } else {
        series_factors.push_back(&omega);
      }
    }
    if (current.is_zero()) return Polynomial();

    const auto by_exponent = current.collect(z);
    const int top = by_exponent.rbegin()->first;
    const int total = int(mine.size());
    // Only expansion terms of order <= top - total + 1 can meet the numerator at z^-1.
    const int order = top - total + 1 + options.extra_order;
    if (order < 0) return Polynomial();
    if (order > options.cap)
      throw Error(ErrorKind::window_overflow, "expansion order " + std::to_string(order) + " in " + z.name() +
                                                  " exceeds the cap " + std::to_string(options.cap));
    const int needed_lo = -1 - top + shift - options.extra_order;
    LaurentSeries product = LaurentSeries(Polynomial(Rational(1)));
    const int k1 = int(series_factors.size());
    for (const AffineForm* omega : series_factors) {
      product = product * expand_inverse(*omega, ordering, -1 - order);
      product = product.truncated(z, needed_lo);
    }
    if (k1 > 0 && product.window(z).lo && *product.window(z).lo > needed_lo)
      throw Error(ErrorKind::window_overflow, "internal window too narrow in " + z.name());

    const auto product_parts = product.collect(z);
    LaurentSeries next;
    for (const auto& [e, coeff] : by_exponent) {
      auto it = product_parts.find(-1 - e + shift);
      if (it == product_parts.end()) continue;
      next = next + coeff * it->second;
    }
    current = next.scaled(scale);
  }
  if (!pending.empty())
    throw Error(ErrorKind::invalid_argument, "denominators left after eliminating every residue variable");
  return current.to_polynomial() * Rational(orientation_sign(form.ordering.size()));
}

Polynomial expansion_coefficient(const ResidueForm& form, std::span<const int> exponents,
                                 const ResidueOptions& options) {
  if (exponents.size() != form.ordering.size())
    throw Error(ErrorKind::invalid_argument, "exponent vector length differs from the number of residue variables");
  std::vector<Factor> shift;
  for (std::size_t i = 0; i < exponents.size(); ++i) shift.push_back({form.ordering[i], -exponents[i] - 1});
  ResidueForm shifted = form;
  shifted.numerator = form.numerator * LaurentSeries::monomial(Monomial::from_factors(shift), 1, form.numerator.ring());
  return iterated_residue(shifted, options) * Rational(orientation_sign(form.ordering.size()));
}

}  // namespace equiloc
