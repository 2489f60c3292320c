#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "equiloc/polynomial.hpp"

namespace equiloc {

struct GrassFixedPoint {
  std::vector<int> subset;             // 1-based, increasing
  std::vector<Polynomial> tangent;     // l_s - l_i, i in subset, s outside
  std::vector<Polynomial> tautological;  // l_i, i in subset
};

// Fixed points of Gr(k, n) in lexicographic order of index sets.
std::vector<GrassFixedPoint> grass_fixed_points(int n, int k);

// Ordered d-tuples of distinct indices from 1..n, lexicographic.
std::vector<std::vector<int>> flag_fixed_points(int n, int d);

// Pairwise-distinct integer weights drawn from [-range, range].
std::vector<Rational> random_weights(int n, std::mt19937_64& rng, long range = 1000000);

// Fixed-point sum of a class in c1..ck of the tautological bundle at the
// given weights. The class must be homogeneous of weighted degree k(n-k).
Rational grass_integrate_at(int n, int k, const Polynomial& cls, std::span<const Rational> weights);

// Evaluates at three independent weight draws and requires them to agree.
Rational grass_integrate(int n, int k, const Polynomial& cls, std::uint64_t seed = 1);

// Common-denominator sum with symbolic weights l1..ln, reduced by exact
// division. Returns a polynomial in the weights.
Polynomial grass_integrate_symbolic(int n, int k, const Polynomial& cls);

// Sum over S_n/S_{n-d} of Q(l_s1..l_sd) / prod_{m<=d} prod_{i>m} (l_si - l_sm).
Rational flag_fixed_sum(int n, int d, const Polynomial& q, std::span<const Rational> weights);
Polynomial flag_fixed_sum_symbolic(int n, int d, const Polynomial& q);

// Iterated residue of prod_{m<l}(z_m - z_l) Q(z) / prod_l prod_i (l_i - z_l)
// with z1 least and zd most dominant.
Rational flag_residue(int n, int d, const Polynomial& q, std::span<const Rational> weights);
Polynomial flag_residue_symbolic(int n, int d, const Polynomial& q);

inline int flag_dimension(int n, int d) { return d * n - d * (d + 1) / 2; }

struct FlagTrial {
  int n = 0;
  int d = 0;
  Polynomial q;
  std::vector<Rational> fixed_sums;  // one per weight draw
  std::vector<Rational> residues;
  bool agree = false;
};

struct FlagCheckReport {
  std::vector<FlagTrial> trials;
  bool all_agree() const;
};

// Random degree-correct Q for d <= d_max, d <= n <= n_max, compared at
// three weight draws each.
FlagCheckReport flag_check(int n_max, int d_max, int trials, std::uint64_t seed);

}  // namespace equiloc
