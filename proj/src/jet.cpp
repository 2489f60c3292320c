#include "equiloc/jet.hpp"

#include <algorithm>
#include <functional>

namespace equiloc {

bool JetCurve::regular() const {
  return !v.empty() && std::any_of(v[0].begin(), v[0].end(), [](const Rational& x) { return x != 0; });
}

JetCurve JetCurve::from_derivatives(const Matrix<Rational>& derivatives) {
  JetCurve g;
  g.n = derivatives.empty() ? 0 : int(derivatives[0].size());
  Rational fact = 1;
  for (std::size_t i = 0; i < derivatives.size(); ++i) {
    if (int(derivatives[i].size()) != g.n) throw Error(ErrorKind::invalid_argument, "ragged jet coordinates");
    fact *= Rational(long(i) + 1);
    std::vector<Rational> row;
    for (const auto& x : derivatives[i]) row.push_back(x / fact);
    g.v.push_back(std::move(row));
  }
  return g;
}

Matrix<Rational> gk_matrix(const ReparamJet& phi) {
  if (phi.alpha.empty() || phi.alpha[0] == 0)
    throw Error(ErrorKind::singular_linear_part, "alpha_1 must be nonzero");
  return gk_matrix_of(phi.alpha);
}

JetCurve compose(const JetCurve& gamma, const ReparamJet& phi) {
  if (gamma.order() != phi.order())
    throw Error(ErrorKind::invalid_argument, "jet orders differ: " + std::to_string(gamma.order()) + " vs " +
                                                 std::to_string(phi.order()));
  const auto g = gk_matrix(phi);
  const std::size_t k = g.size();
  JetCurve r;
  r.n = gamma.n;
  r.v.assign(k, std::vector<Rational>(std::size_t(gamma.n), 0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i <= j; ++i)
      if (g[i][j] != 0)
        for (int c = 0; c < gamma.n; ++c) r.v[j][std::size_t(c)] += gamma.v[i][std::size_t(c)] * g[i][j];
  return r;
}

ReparamJet compose(const ReparamJet& outer, const ReparamJet& inner) {
  if (outer.order() != inner.order()) throw Error(ErrorKind::invalid_argument, "jet orders differ");
  const auto g = gk_matrix(inner);
  ReparamJet r;
  r.alpha.assign(outer.alpha.size(), 0);
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i <= j; ++i) r.alpha[j] += outer.alpha[i] * g[i][j];
  return r;
}

std::vector<std::vector<int>> sym_basis(int n, int k) {
  std::vector<std::vector<int>> out;
  if (n <= 0) return out;
  std::vector<int> e(std::size_t(n), 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == n - 1) {
      e[std::size_t(idx)] = left;
      out.push_back(e);
      return;
    }
    for (int x = left; x >= 0; --x) {
      e[std::size_t(idx)] = x;
      rec(idx + 1, left - x);
    }
  };
  for (int deg = 1; deg <= k; ++deg) rec(0, deg);
  return out;
}

Matrix<Rational> rho(const JetCurve& gamma) { return rho_of(gamma.v, gamma.n); }

Matrix<Polynomial> rho_symbolic(int n, int k) {
  Matrix<Polynomial> v(static_cast<std::size_t>(k), std::vector<Polynomial>(static_cast<std::size_t>(n)));
  Rational fact = 1;
  for (int j = 1; j <= k; ++j) {
    fact *= j;
    for (int c = 1; c <= n; ++c)
      v[std::size_t(j - 1)][std::size_t(c - 1)] =
          Polynomial::variable(Var::f(unsigned(c), std::uint16_t(j))) * Rational(1 / fact);
  }
  return rho_of(v, n);
}

Rational determinant(Matrix<Rational> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

Polynomial determinant(const Matrix<Polynomial>& m) {
  // Laplace expansion along the first row; only used for small k.
  const std::size_t n = m.size();
  if (n == 0) return Polynomial(1);
  if (n == 1) return m[0][0];
  Polynomial det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    Matrix<Polynomial> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    const Polynomial term = m[0][c] * determinant(minor);
    det += c % 2 ? -term : term;
  }
  return det;
}

std::vector<std::vector<int>> column_subsets(int cols, int k) {
  std::vector<std::vector<int>> out;
  if (k > cols || k < 0) return out;
  std::vector<int> s(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) s[std::size_t(i)] = i;
  for (;;) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[std::size_t(i)] == cols - k + i) --i;
    if (i < 0) break;
    ++s[std::size_t(i)];
    for (int j = i + 1; j < k; ++j) s[std::size_t(j)] = s[std::size_t(j - 1)] + 1;
  }
  return out;
}

std::vector<Rational> invariant_minors(const JetCurve& gamma) {
  const auto m = rho(gamma);
  const int k = gamma.order();
  const int cols = m.empty() ? 0 : int(m[0].size());
  if (cols < k)
    throw Error(ErrorKind::too_few_columns, "Sym^<=" + std::to_string(k) + " has only " + std::to_string(cols) +
                                                " columns");
  std::vector<Rational> out;
  for (const auto& s : column_subsets(cols, k)) {
    Matrix<Rational> sub(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(k)));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) sub[std::size_t(r)][std::size_t(c)] = m[std::size_t(r)][std::size_t(s[std::size_t(c)])];
    out.push_back(determinant(std::move(sub)));
  }
  return out;
}

}  // namespace equiloc
