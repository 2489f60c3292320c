#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <span>
#include <string>

#include "equiloc/variable.hpp"

namespace equiloc {

struct Factor {
  Var var;
  int exp = 0;

  friend bool operator==(const Factor&, const Factor&) = default;
};

// Sparse power product. Factors are kept sorted by variable and never carry
// a zero exponent. Negative exponents are representable; Polynomial rejects
// them, LaurentSeries admits them on residue variables only.
class Monomial {
 public:
  using Storage = boost::container::small_vector<Factor, 4>;

  Monomial() = default;
  explicit Monomial(Var v, int exp = 1);

  // Builds from unsorted factors; repeated variables are combined.
  static Monomial from_factors(std::span<const Factor> factors);

  std::span<const Factor> factors() const { return {f_.data(), f_.size()}; }
  bool is_one() const { return f_.empty(); }
  int degree() const;
  int exponent(Var v) const;
  bool has_negative() const;

  // Total degree restricted to one alphabet.
  int degree_in(VarKind kind) const;

  // Weighted degree with weight(c_i) = i on Chern symbols, zero elsewhere.
  int chern_weight() const;

  Monomial without(Var v) const;
  Monomial with_exponent(Var v, int exp) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }

  std::size_t hash() const;
  std::string to_string() const;

 private:
  Storage f_;
};

// Graded lexicographic comparison over the fixed variable order: larger total
// degree first, then larger exponent on the earliest variable. Returns <0, 0,
// >0 as a is smaller, equal, larger than b.
int grlex_compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace equiloc
