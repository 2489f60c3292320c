#pragma once

#include <array>
#include <map>
#include <set>
#include <vector>

#include "equiloc/polynomial.hpp"
#include "equiloc/residue.hpp"

namespace equiloc {

class QTable {
 public:
  // Q1 = Q2 = Q3 = 1, Q4 = 2*z1 + z2 - z4.
  static QTable builtin();

  // Entries for k >= 5 are accepted and marked unverified.
  void add(int k, Polynomial q);
  const Polynomial& at(int k) const;  // Error(missing_q)
  bool has(int k) const { return entries_.count(k) > 0; }
  bool verified(int k) const { return has(k) && !unverified_.count(k); }
  const std::map<int, Polynomial>& entries() const { return entries_; }

 private:
  std::map<int, Polynomial> entries_;
  std::set<int> unverified_;
};

// Triples (i, j, l) with 1 <= i <= j and i + j <= l <= k.
std::vector<std::array<int, 3>> thom_triples(int k);

// prod_{i<j} (z_i - z_j)
Polynomial vandermonde(int k);

// prod_{i<j}(z_i - z_j) Q_k / prod (z_i + z_j - z_l), ordered with z_k most dominant.
ResidueForm thom_generating_form(int k, const QTable& q);

struct ThomResult {
  int k = 0;
  int codim = 0;
  Polynomial polynomial;
  int sign_calibration = 1;
};

struct ThomOptions {
  ResidueOptions residue;
  // Keep only numerator terms of Chern weight k(l+1); other weights cannot
  // contribute.
  bool grade_filter = true;
};

ThomResult thom_polynomial(int k, int codim, const QTable& q, const ThomOptions& options = {});

struct PositivityReport {
  std::vector<Term> negative;
  std::vector<Term> non_integral;
  bool ok() const { return negative.empty() && non_integral.empty(); }
};

PositivityReport positivity_check(const ThomResult& r);

struct RatioEntry {
  std::vector<int> numerator;    // exponent vector of the numerator coefficient
  std::vector<int> denominator;  // i_l + 1, i_m - 1 for some l < m
  Rational ratio;
  bool below_bound = false;
};

struct RatioReport {
  int k = 0;
  int depth = 0;
  Rational bound;
  std::map<std::vector<int>, Rational> coefficients;  // nonzero ones in range
  std::vector<RatioEntry> ratios;
  bool all_below() const;
};

// Coefficients of the generating function at every exponent vector of the
// right total degree whose negative part sums to at most depth, and all
// neighbouring ratios among them.
RatioReport ratio_check(int k, const QTable& q, int depth, const ResidueOptions& options = {});

}  // namespace equiloc
