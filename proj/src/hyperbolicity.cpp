#include "equiloc/hyperbolicity.hpp"

#include <vector>

#include "equiloc/error.hpp"

namespace equiloc {

namespace {

Polynomial zsum(int n, const RingPtr& ring) {
  Polynomial s(ring);
  for (int l = 1; l <= n; ++l) s += Polynomial::variable(Var::z(unsigned(l)), ring);
  return s;
}

// Truncated univariate power series with rational coefficients.
using Series = std::vector<Rational>;

Series series_mul(const Series& a, const Series& b, std::size_t len) {
  Series r(len, 0);
  for (std::size_t i = 0; i < a.size() && i < len; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) r[i + j] += a[i] * b[j];
  return r;
}

Series series_inverse(const Series& a, std::size_t len) {
  Series r(len, 0);
  r[0] = 1 / a[0];
  for (std::size_t i = 1; i < len; ++i) {
    Rational s = 0;
    for (std::size_t j = 1; j <= i && j < a.size(); ++j) s += a[j] * r[i - j];
    r[i] = -s / a[0];
  }
  return r;
}

// log(a) for a[0] == 1
Series series_log(const Series& a, std::size_t len) {
  Series u = a;
  u.resize(len, 0);
  u[0] = 0;
  Series r(len, 0), power(len, 0);
  power[0] = 1;
  for (std::size_t k = 1; k < len; ++k) {
    power = series_mul(power, u, len);
    const Rational w = Rational(k % 2 ? 1 : -1, long(k));
    for (std::size_t i = 0; i < len; ++i) r[i] += w * power[i];
  }
  return r;
}

Polynomial h_coefficient(const LaurentSeries& s, int n) {
  auto parts = s.collect(Var::h());
  auto it = parts.find(n);
  return it == parts.end() ? Polynomial() : it->second.to_polynomial().with_ring(nullptr);
}

}  // namespace

RingPtr tower_ring(int n) { return make_ring({{Var::h(), n}}); }

Polynomial tower_fiber_integral(int n, const Polynomial& extra, const QTable& q, const ResidueOptions& options) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "n must be positive");
  const RingPtr ring = tower_ring(n);
  const Polynomial base = (vandermonde(n) * q.at(n)).with_ring(ring) * extra.with_ring(ring);

  // prod_l (1 + d h/z_l) sum_{j<=n} C(-(n+2), j) (h/z_l)^j, graded by h-degree
  std::vector<LaurentSeries> by_h(std::size_t(n) + 1);
  by_h[0] = LaurentSeries(Polynomial(1));
  for (int l = 1; l <= n; ++l) {
    const Var z = Var::z(unsigned(l));
    std::vector<Term> terms;
    for (int j = 0; j <= n; ++j) {
      const Rational cj = Rational(binomial(n + 1 + j, j)) * (j % 2 ? -1 : 1);
      terms.push_back({Monomial::from_factors(std::vector<Factor>{{z, -j}, {Var::h(), j}}), cj});
      if (j + 1 <= n)
        terms.push_back({Monomial::from_factors(std::vector<Factor>{{z, -j - 1}, {Var::h(), j + 1}, {Var::d(), 1}}), cj});
    }
    const auto factor = LaurentSeries::from_terms(std::move(terms)).collect(Var::h());
    std::vector<LaurentSeries> next(std::size_t(n) + 1);
    for (int a = 0; a <= n; ++a)
      for (const auto& [b, part] : factor)
        if (a + b <= n) next[std::size_t(a + b)] = next[std::size_t(a + b)] + by_h[std::size_t(a)] * part;
    by_h = std::move(next);
  }

  // h-degree n part of base * prod_l(...)
  LaurentSeries numerator;
  for (const auto& [a, part] : base.collect(Var::h())) {
    if (a > n) continue;
    numerator = numerator + LaurentSeries(part.with_ring(nullptr)) * by_h[std::size_t(n - a)];
  }

  ResidueForm form;
  form.numerator = numerator;
  for (const auto& [i, j, l] : thom_triples(n))
    form.denominators.push_back(AffineForm({}, [&] {
      std::map<Var, Rational> lin;
      lin[Var::z(unsigned(i))] += 1;
      lin[Var::z(unsigned(j))] += 1;
      lin[Var::z(unsigned(l))] -= 1;
      return lin;
    }()));
  for (int l = 1; l <= n; ++l) {
    form.ordering.push_back(Var::z(unsigned(l)));
    for (int t = 0; t < n; ++t) form.denominators.push_back(AffineForm({}, {{Var::z(unsigned(l)), 1}}));
  }
  // the h^n factor was stripped above, so the residue is the coefficient itself
  return iterated_residue(form, options) * Rational(orientation_sign(std::size_t(n)));
}

Polynomial jet_tower_integral(int n, const Polynomial& extra, const QTable& q, const ResidueOptions& options) {
  return Polynomial::variable(Var::d()) * tower_fiber_integral(n, extra, q, options);
}

Polynomial gg_integrand(int n) {
  const RingPtr ring = tower_ring(n);
  const long n2 = long(n) * n;
  const Polynomial h = Polynomial::variable(Var::h(), ring);
  const Polynomial a = zsum(n, ring) + Rational(2 * n2) * h;
  const Polynomial b = (Polynomial(Rational(2 * n2), ring) +
                        Rational(binomial(n + 1, 2)) * Polynomial::variable(Var::delta(), ring) *
                            (Polynomial::variable(Var::d(), ring) - Polynomial(Rational(n + 2), ring))) *
                       h;
  const Polynomial an1 = a.pow(unsigned(n2 - 1));
  return an1 * a - Rational(n2) * an1 * b;
}

Rational theta(int n, const QTable& q, const ResidueOptions& options) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "n must be positive");
  (void)q.at(n);
  ResidueForm form;
  form.numerator = LaurentSeries(vandermonde(n) * q.at(n) * zsum(n, nullptr).pow(unsigned(n * n)));
  for (const auto& [i, j, l] : thom_triples(n))
    form.denominators.push_back(AffineForm::from_polynomial(Polynomial::variable(Var::z(unsigned(i))) +
                                                            Polynomial::variable(Var::z(unsigned(j))) -
                                                            Polynomial::variable(Var::z(unsigned(l)))));
  for (int l = 1; l <= n; ++l) {
    form.ordering.push_back(Var::z(unsigned(l)));
    for (int t = 0; t < n; ++t) form.denominators.push_back(AffineForm({}, {{Var::z(unsigned(l)), 1}}));
  }
  const std::vector<int> zero(std::size_t(n), 0);
  const Polynomial c = expansion_coefficient(form, zero, options);
  auto v = c.as_constant();
  if (!v) throw Error(ErrorKind::invalid_argument, "constant term is not a number");
  return *v;
}

Polynomial expected_leading(int n, const Rational& theta_n) {
  const Rational k = Rational(long(n) * n) * Rational(binomial(n + 1, 2));
  return (Polynomial(1) - k * Polynomial::variable(Var::delta())) * theta_n;
}

GGResult gg_polynomial(int n, const QTable& q, const ResidueOptions& options) {
  (void)q.at(n);
  GGResult r;
  r.n = n;
  r.p = tower_fiber_integral(n, gg_integrand(n), q, options);
  r.intersection = Polynomial::variable(Var::d()) * r.p;
  r.theta = theta(n, q, options);
  auto parts = r.p.collect(Var::d());
  auto it = parts.find(n);
  r.leading = it == parts.end() ? Polynomial() : it->second;
  return r;
}

Threshold positivity_threshold(const GGResult& r, const Rational& delta) {
  Threshold t;
  t.delta = delta;
  t.at_delta = evaluate(r.p, {{Var::delta(), delta}});
  for (Var v : t.at_delta.variables())
    if (v != Var::d()) throw Error(ErrorKind::invalid_argument, "p still depends on " + v.name());
  std::map<int, Rational> coeffs;
  for (const auto& [e, c] : t.at_delta.collect(Var::d())) coeffs[e] = c.constant_term();
  if (coeffs.empty() || coeffs.rbegin()->second <= 0)
    throw Error(ErrorKind::invalid_argument, "leading coefficient in d is not positive at delta = " + delta.get_str());
  const int top = coeffs.rbegin()->first;
  const Rational lead = coeffs.rbegin()->second;
  // Fujiwara: every root has modulus at most 2 max_i |a_{top-i}/a_top|^(1/i),
  // with the constant term halved. Integer i-th roots are taken upwards.
  auto ceil_root = [](const Rational& x, int i) {
    Integer lo = 0, hi = 1;
    auto pw = [&](const Integer& b) {
      Integer r = 1;
      for (int t = 0; t < i; ++t) r *= b;
      return r;
    };
    while (Rational(pw(hi)) < x) hi *= 2;
    while (lo < hi) {
      Integer mid = (lo + hi) / 2;
      if (Rational(pw(mid)) >= x) hi = mid;
      else lo = mid + 1;
    }
    return hi;
  };
  Integer radius = 0;
  for (const auto& [e, c] : coeffs) {
    if (e == top) continue;
    Rational x = abs(c / lead);
    if (e == 0) x /= 2;
    radius = std::max(radius, ceil_root(x, top - e));
  }
  const Integer ceiling = 2 * radius + 1;
  auto value = [&](const Integer& d) {
    Rational s = 0, dp = 1;
    for (int e = 0; e <= top; ++e) {
      auto it = coeffs.find(e);
      if (it != coeffs.end()) s += it->second * dp;
      dp *= Rational(d);
    }
    return s;
  };
  t.d0 = 1;
  for (Integer d = ceiling; d >= 1; --d)
    if (value(d) <= 0) {
      t.d0 = d + 1;
      break;
    }
  return t;
}

Polynomial todd_polynomial(int n) {
  const std::size_t len = std::size_t(n) + 1;
  // log(x / (1 - e^-x)) = -log((1 - e^-x)/x)
  Series g(len + 1, 0);
  Rational fact = 1;
  for (std::size_t j = 0; j <= len; ++j) {
    fact *= Rational(long(j) + 1);
    g[j] = Rational(j % 2 ? -1 : 1) / fact;
  }
  const Series a = series_log(series_inverse(g, len), len);

  auto weight_cut = [&](const Polynomial& p) {
    std::vector<Term> keep;
    for (const auto& t : p.terms())
      if (t.mono.chern_weight() <= n) keep.push_back(t);
    return Polynomial::from_terms(std::move(keep));
  };
  auto c = [](int i) { return Polynomial::variable(Var::c(unsigned(i))); };
  // Newton: p_j = sum_{i<j} (-1)^(i-1) c_i p_{j-i} + (-1)^(j-1) j c_j
  std::vector<Polynomial> p(len);
  Polynomial log_td;
  for (int j = 1; j <= n; ++j) {
    Polynomial s = Rational((j % 2 ? 1 : -1) * j) * c(j);
    for (int i = 1; i < j; ++i) s += Rational(i % 2 ? 1 : -1) * c(i) * p[std::size_t(j - i)];
    p[std::size_t(j)] = s;
    log_td += a[std::size_t(j)] * s;
  }
  Polynomial td(1), power(1);
  Rational rf = 1;
  for (int r = 1; r <= n; ++r) {
    power = weight_cut(power * log_td);
    rf *= r;
    td += power * Rational(1 / rf);
  }
  return td;
}

Polynomial todd_class(int n) {
  const RingPtr ring = tower_ring(n);
  const Polynomial h = Polynomial::variable(Var::h(), ring);
  const Polynomial dh = Polynomial::variable(Var::d(), ring) * h;
  Polynomial inv(Rational(1), ring), power(Rational(1), ring);
  for (int j = 1; j <= n; ++j) {
    power = power * (-dh);
    inv += power;
  }
  const Polynomial total = (Polynomial(Rational(1), ring) + h).pow(unsigned(n + 2)) * inv;
  std::map<Var, Polynomial> images;
  for (const auto& [e, coeff] : total.collect(Var::h()))
    if (e >= 1) images[Var::c(unsigned(e))] = coeff.with_ring(ring) * h.pow(unsigned(e));
  for (int i = 1; i <= n; ++i)
    if (!images.count(Var::c(unsigned(i)))) images[Var::c(unsigned(i))] = Polynomial(ring);
  return substitute(todd_polynomial(n).with_ring(ring), images);
}

EulerResult euler_characteristic(int n, const QTable& q, std::optional<Rational> d, const ResidueOptions& options) {
  (void)q.at(n);
  const RingPtr ring = tower_ring(n);
  const Polynomial s = zsum(n, ring);
  const Polynomial m = Polynomial::variable(Var::m(), ring);
  Polynomial ch(Rational(1), ring), term(Rational(1), ring);
  for (int j = 1; j <= n * n; ++j) {
    term = term * m * s * Rational(Rational(1) / j);
    ch += term;
  }
  EulerResult r;
  r.n = n;
  r.d = d;
  r.chi = jet_tower_integral(n, ch * todd_class(n), q, options);
  if (d) r.chi = evaluate(r.chi, {{Var::d(), *d}});
  return r;
}

}  // namespace equiloc
