#include "equiloc/thom.hpp"

#include <algorithm>
#include <functional>

#include "equiloc/error.hpp"

namespace equiloc {

namespace {

Polynomial zvar(int i) { return Polynomial::variable(Var::z(unsigned(i))); }

std::vector<Var> z_ordering(int k) {
  std::vector<Var> o;
  for (int i = 1; i <= k; ++i) o.push_back(Var::z(unsigned(i)));
  return o;
}

// sum_{i=0}^{top} c_i z^(shift - i)
LaurentSeries chern_series(int l, int shift, int top) {
  std::vector<Term> terms;
  for (int i = 0; i <= top; ++i) {
    std::vector<Factor> fs{{Var::z(unsigned(l)), shift - i}};
    if (i > 0) fs.push_back({Var::c(unsigned(i)), 1});
    std::erase_if(fs, [](const Factor& f) { return f.exp == 0; });
    terms.push_back({Monomial::from_factors(fs), 1});
  }
  return LaurentSeries::from_terms(std::move(terms));
}

}  // namespace

QTable QTable::builtin() {
  QTable t;
  t.entries_[1] = Polynomial(1);
  t.entries_[2] = Polynomial(1);
  t.entries_[3] = Polynomial(1);
  t.entries_[4] = Polynomial(2) * zvar(1) + zvar(2) - zvar(4);
  return t;
}

void QTable::add(int k, Polynomial q) {
  if (k < 1) throw Error(ErrorKind::invalid_argument, "Q index must be positive");
  for (Var v : q.variables())
    if (!v.is_residue() || int(v.index()) > k)
      throw Error(ErrorKind::invalid_argument, "Q_" + std::to_string(k) + " must be a polynomial in z1..z" +
                                                   std::to_string(k));
  if (k <= 4) {
    if (has(k) && !(entries_.at(k) == q))
      throw Error(ErrorKind::invalid_argument, "Q_" + std::to_string(k) + " is built in and cannot be replaced");
    entries_[k] = std::move(q);
    return;
  }
  entries_[k] = std::move(q);
  unverified_.insert(k);
}

const Polynomial& QTable::at(int k) const {
  auto it = entries_.find(k);
  if (it == entries_.end()) throw Error(ErrorKind::missing_q, "no Q_" + std::to_string(k) + " available");
  return it->second;
}

std::vector<std::array<int, 3>> thom_triples(int k) {
  std::vector<std::array<int, 3>> out;
  for (int i = 1; i <= k; ++i)
    for (int j = i; i + j <= k; ++j)
      for (int l = i + j; l <= k; ++l) out.push_back({i, j, l});
  return out;
}

Polynomial vandermonde(int k) {
  Polynomial r(1);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) r = r * (zvar(i) - zvar(j));
  return r;
}

ResidueForm thom_generating_form(int k, const QTable& q) {
  if (k < 1) throw Error(ErrorKind::invalid_argument, "k must be positive");
  ResidueForm form;
  form.numerator = LaurentSeries(vandermonde(k) * q.at(k));
  for (const auto& [i, j, l] : thom_triples(k))
    form.denominators.push_back(AffineForm::from_polynomial(zvar(i) + zvar(j) - zvar(l)));
  form.ordering = z_ordering(k);
  return form;
}

ThomResult thom_polynomial(int k, int codim, const QTable& q, const ThomOptions& options) {
  if (codim < 0) throw Error(ErrorKind::invalid_argument, "codimension m-n must be nonnegative");
  ResidueForm form = thom_generating_form(k, q);
  const int weight = k * (codim + 1);
  LaurentSeries chern(Polynomial(1));
  for (int l = 1; l <= k; ++l) {
    chern = chern * chern_series(l, codim, weight);
    if (options.grade_filter)
      chern = chern.filtered([&](const Monomial& m) { return m.chern_weight() <= weight; });
  }
  if (options.grade_filter)
    chern = chern.filtered([&](const Monomial& m) { return m.chern_weight() == weight; });
  form.numerator = form.numerator * chern;
  ThomResult r;
  r.k = k;
  r.codim = codim;
  r.sign_calibration = orientation_sign(std::size_t(k));
  r.polynomial = iterated_residue(form, options.residue) * Rational(r.sign_calibration);
  return r;
}

PositivityReport positivity_check(const ThomResult& r) {
  PositivityReport rep;
  for (const auto& t : r.polynomial.terms()) {
    if (t.coef < 0) rep.negative.push_back(t);
    if (!is_integer(t.coef)) rep.non_integral.push_back(t);
  }
  return rep;
}

bool RatioReport::all_below() const {
  return std::all_of(ratios.begin(), ratios.end(), [](const RatioEntry& e) { return e.below_bound; });
}

RatioReport ratio_check(int k, const QTable& q, int depth, const ResidueOptions& options) {
  if (depth < 0) throw Error(ErrorKind::invalid_argument, "depth must be nonnegative");
  const ResidueForm form = thom_generating_form(k, q);
  int total = form.numerator.is_zero() ? 0 : form.numerator.terms()[0].mono.degree();
  total -= int(form.denominators.size());
  RatioReport rep;
  rep.k = k;
  rep.depth = depth;
  rep.bound = Rational(k * k);

  std::vector<int> e(std::size_t(k), 0);
  std::function<void(int, int, int)> rec = [&](int idx, int sum, int neg) {
    if (idx == k - 1) {
      const int last = total - sum;
      const int n2 = neg + std::max(0, -last);
      if (n2 > depth) return;
      e[std::size_t(idx)] = last;
      Polynomial c = expansion_coefficient(form, e, options);
      if (!c.is_zero()) {
        auto v = c.as_constant();
        if (!v) throw Error(ErrorKind::invalid_argument, "generating-function coefficient is not a number");
        rep.coefficients[e] = *v;
      }
      return;
    }
    for (int x = -depth; x <= total + depth; ++x) {
      const int n2 = neg + std::max(0, -x);
      if (n2 > depth) continue;
      e[std::size_t(idx)] = x;
      rec(idx + 1, sum + x, n2);
    }
  };
  rec(0, 0, 0);

  for (const auto& [a, ca] : rep.coefficients) {
    for (int l = 0; l < k; ++l)
      for (int m = l + 1; m < k; ++m) {
        auto b = a;
        ++b[std::size_t(l)];
        --b[std::size_t(m)];
        auto it = rep.coefficients.find(b);
        if (it == rep.coefficients.end()) continue;
        RatioEntry entry{a, b, ca / it->second, false};
        entry.below_bound = entry.ratio < rep.bound;
        rep.ratios.push_back(std::move(entry));
      }
  }
  return rep;
}

}  // namespace equiloc
