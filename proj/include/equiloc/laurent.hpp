#pragma once

#include <map>
#include <optional>
#include <vector>

#include "equiloc/polynomial.hpp"

namespace equiloc {

// Degree window of a series in one residue variable. Coefficients of
// exponents >= lo are exact; nothing below lo is stored. hi bounds the
// support from above. An absent lo means the series is exact in that
// variable (a Laurent polynomial).
struct Window {
  std::optional<int> lo;
  std::optional<int> hi;

  friend bool operator==(const Window&, const Window&) = default;
};

// Truncated multivariate Laurent series: negative exponents are allowed on
// residue variables only, every other variable keeps nonnegative exponents.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  explicit LaurentSeries(const Polynomial& p);

  static LaurentSeries from_terms(std::vector<Term> terms, RingPtr ring = nullptr,
                                  std::map<Var, Window> windows = {});
  static LaurentSeries monomial(Monomial m, Rational c, RingPtr ring = nullptr);

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return {terms_.data(), terms_.size()}; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const std::map<Var, Window>& windows() const { return windows_; }
  Window window(Var v) const;
  bool is_exact() const;

  // Largest / smallest exponent of v among stored terms (0 for the zero series).
  int max_exponent(Var v) const;
  int min_exponent(Var v) const;

  std::set<Var> variables() const;

  // Addition keeps the intersection of validity ranges; multiplication
  // propagates support bounds so that every stored coefficient stays exact.
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries operator-() const;
  LaurentSeries scaled(const Rational& c) const;

  // Drops every term whose exponent of v is below lo and records the cut.
  LaurentSeries truncated(Var v, int lo) const;

  // Keeps terms accepted by pred; windows are unchanged.
  template <class Pred>
  LaurentSeries filtered(Pred pred) const {
    LaurentSeries r = *this;
    std::erase_if(r.terms_, [&](const Term& t) { return !pred(t.mono); });
    return r;
  }

  // Splits by the exponent of v. Coefficient series carry the remaining windows.
  std::map<int, LaurentSeries> collect(Var v) const;

  // Throws Error(invalid_argument) if any exponent is negative.
  Polynomial to_polynomial() const;

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
  std::map<Var, Window> windows_;
};

}  // namespace equiloc
