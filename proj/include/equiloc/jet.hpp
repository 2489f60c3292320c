#pragma once

#include <map>
#include <vector>

#include "equiloc/error.hpp"
#include "equiloc/polynomial.hpp"

namespace equiloc {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// phi(t) = alpha_1 t + ... + alpha_k t^k
struct ReparamJet {
  std::vector<Rational> alpha;
  int order() const { return int(alpha.size()); }
};

// gamma(t) = v_1 t + ... + v_k t^k in C^n, v_i = f^(i)/i!
struct JetCurve {
  int n = 0;
  Matrix<Rational> v;  // v[i-1][c-1]

  int order() const { return int(v.size()); }
  bool regular() const;

  // derivatives[i-1][c-1] = f_c^(i)
  static JetCurve from_derivatives(const Matrix<Rational>& derivatives);
};

// G[i-1][j-1] = sum over a_1 + ... + a_i = j of alpha_a1 ... alpha_ai,
// i.e. the t^j coefficient of phi(t)^i.
template <class T>
Matrix<T> gk_matrix_of(const std::vector<T>& alpha) {
  const std::size_t k = alpha.size();
  Matrix<T> g(k, std::vector<T>(k, T(0)));
  std::vector<T> power(k + 1, T(0));  // coefficients of phi^i in t^0..t^k
  power[0] = T(1);
  for (std::size_t i = 1; i <= k; ++i) {
    std::vector<T> next(k + 1, T(0));
    for (std::size_t a = 0; a <= k; ++a) {
      if (power[a] == T(0)) continue;
      for (std::size_t b = 1; a + b <= k; ++b) next[a + b] += power[a] * alpha[b - 1];
    }
    power = std::move(next);
    for (std::size_t j = 1; j <= k; ++j) g[i - 1][j - 1] = power[j];
  }
  return g;
}

Matrix<Rational> gk_matrix(const ReparamJet& phi);  // Error(singular_linear_part) if alpha_1 == 0

// k-jet of gamma o phi: the coefficient matrix of gamma times gk_matrix(phi).
JetCurve compose(const JetCurve& gamma, const ReparamJet& phi);

// outer(inner(t))
ReparamJet compose(const ReparamJet& outer, const ReparamJet& inner);

// Exponent vectors of Sym^1 .. Sym^k of C^n, degree-major, lexicographically
// decreasing within a degree (e1^2, e1e2, e2^2, ...).
std::vector<std::vector<int>> sym_basis(int n, int k);

// Row j is the t^j coefficient of sum_i gamma(t)^i in the symmetric algebra,
// written in monomial coordinates over sym_basis(n, k).
template <class T>
Matrix<T> rho_of(const Matrix<T>& v, int n) {
  const int k = int(v.size());
  using Elem = std::map<std::vector<int>, T>;
  auto mul = [](const Elem& a, const Elem& b) {
    Elem r;
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) {
        auto e = ea;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        r[e] += ca * cb;
      }
    return r;
  };
  // gamma as a series in t with Sym^1 coefficients
  std::vector<Elem> gamma(std::size_t(k) + 1);
  for (int j = 1; j <= k; ++j)
    for (int c = 0; c < n; ++c) {
      std::vector<int> e(std::size_t(n), 0);
      e[std::size_t(c)] = 1;
      gamma[std::size_t(j)][e] = v[std::size_t(j - 1)][std::size_t(c)];
    }
  std::vector<Elem> total(std::size_t(k) + 1), power(std::size_t(k) + 1);
  power[0][std::vector<int>(std::size_t(n), 0)] = T(1);
  for (int i = 1; i <= k; ++i) {
    std::vector<Elem> next(std::size_t(k) + 1);
    for (int a = 0; a <= k; ++a)
      for (int b = 1; a + b <= k; ++b) {
        if (power[std::size_t(a)].empty() || gamma[std::size_t(b)].empty()) continue;
        for (auto& [e, c] : mul(power[std::size_t(a)], gamma[std::size_t(b)])) next[std::size_t(a + b)][e] += c;
      }
    power = std::move(next);
    for (int j = 1; j <= k; ++j)
      for (const auto& [e, c] : power[std::size_t(j)]) total[std::size_t(j)][e] += c;
  }
  const auto basis = sym_basis(n, k);
  Matrix<T> out(std::size_t(k), std::vector<T>(basis.size(), T(0)));
  for (int j = 1; j <= k; ++j)
    for (std::size_t col = 0; col < basis.size(); ++col) {
      auto it = total[std::size_t(j)].find(basis[col]);
      if (it != total[std::size_t(j)].end()) out[std::size_t(j - 1)][col] = it->second;
    }
  return out;
}

Matrix<Rational> rho(const JetCurve& gamma);

// rho of the generic jet with v_{j,c} = f{c}_{j} / j!
Matrix<Polynomial> rho_symbolic(int n, int k);

Rational determinant(Matrix<Rational> m);
Polynomial determinant(const Matrix<Polynomial>& m);

// All k x k minors of rho(gamma), column subsets in lexicographic order.
std::vector<Rational> invariant_minors(const JetCurve& gamma);

// Column subsets of size k from 0..cols-1, lexicographic.
std::vector<std::vector<int>> column_subsets(int cols, int k);

}  // namespace equiloc
