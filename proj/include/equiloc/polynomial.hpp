#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "equiloc/monomial.hpp"
#include "equiloc/rational.hpp"

namespace equiloc {

// Ring declaration: which scalar variables are nilpotent and of what order.
// A variable of order t satisfies v^(t+1) == 0; products are reduced when
// they are formed.
struct Ring {
  std::vector<std::pair<Var, int>> nilpotent;

  // Order t of v, or -1 when v is not nilpotent.
  int nilpotency(Var v) const;
  bool keeps(const Monomial& m) const;

  friend bool operator==(const Ring&, const Ring&) = default;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::pair<Var, int>> nilpotent);

struct Term {
  Monomial mono;
  Rational coef;
};

namespace detail {
// Sorts descending in grlex, combines duplicates and drops zeros.
void canonicalize(std::vector<Term>& terms);
std::vector<Term> add_terms(std::span<const Term> a, std::span<const Term> b, bool negate_b);
RingPtr join_rings(const RingPtr& a, const RingPtr& b);
}  // namespace detail

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are stored in descending grlex order with no zero coefficients, so
// two polynomials are equal exactly when their term lists are equal.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(const Rational& c, RingPtr ring = nullptr);  // NOLINT(implicit)
  Polynomial(long c) : Polynomial(Rational(c)) {}         // NOLINT(implicit)
  Polynomial(int c) : Polynomial(Rational(c)) {}          // NOLINT(implicit)

  static Polynomial variable(Var v, RingPtr ring = nullptr);
  static Polynomial term(Monomial m, Rational c, RingPtr ring = nullptr);
  static Polynomial from_terms(std::vector<Term> terms, RingPtr ring = nullptr);

  const RingPtr& ring() const { return ring_; }
  Polynomial with_ring(RingPtr ring) const;

  std::span<const Term> terms() const { return {terms_.data(), terms_.size()}; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> as_constant() const;
  Rational constant_term() const;

  int degree() const;  // -1 for the zero polynomial
  int degree_in(Var v) const;
  int degree_in(VarKind kind) const;
  std::set<Var> variables() const;

  Rational coefficient(const Monomial& m) const;

  // Groups by the exponent of v: p = sum_e coeff[e] * v^e.
  std::map<int, Polynomial> collect(Var v) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned e) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// q with q * den == num; throws Error(not_divisible) otherwise.
Polynomial exact_divide(const Polynomial& num, const Polynomial& den);

// Substitutes rational values; unassigned variables stay symbolic.
Polynomial evaluate(const Polynomial& p, const std::map<Var, Rational>& assignment);

// Substitutes polynomials for variables simultaneously.
Polynomial substitute(const Polynomial& p, const std::map<Var, Polynomial>& images);

// i-th elementary symmetric polynomial of xs (e_0 = 1).
Polynomial elementary_symmetric(int i, std::span<const Polynomial> xs);

// Rewrites a polynomial symmetric in the weights l1..ln in terms of the
// symbols e1..en. Other variables are carried along as coefficients.
// Throws Error(not_symmetric) if some transposition of weights changes p.
Polynomial symmetric_reduce(const Polynomial& p, int n);

}  // namespace equiloc
