#include "equiloc/localization.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "equiloc/error.hpp"
#include "equiloc/residue.hpp"

namespace equiloc {

namespace {

Polynomial weight(int i) { return Polynomial::variable(Var::l(unsigned(i))); }

void check_weights(std::span<const Rational> weights, int n) {
  if (int(weights.size()) != n)
    throw Error(ErrorKind::invalid_argument, "expected " + std::to_string(n) + " weights");
  for (std::size_t i = 0; i < weights.size(); ++i)
    for (std::size_t j = i + 1; j < weights.size(); ++j)
      if (weights[i] == weights[j])
        throw Error(ErrorKind::repeated_weights, "weights " + std::to_string(i + 1) + " and " +
                                                     std::to_string(j + 1) + " coincide");
}

std::map<Var, Rational> weight_assignment(std::span<const Rational> weights) {
  std::map<Var, Rational> a;
  for (std::size_t i = 0; i < weights.size(); ++i) a[Var::l(unsigned(i + 1))] = weights[i];
  return a;
}

Rational as_number(const Polynomial& p, const char* what) {
  auto c = p.as_constant();
  if (!c) throw Error(ErrorKind::invalid_argument, std::string(what) + " did not reduce to a number: " + p.to_string());
  return *c;
}

void check_grass_class(int n, int k, const Polynomial& cls) {
  if (k < 1 || k > n) throw Error(ErrorKind::invalid_argument, "need 1 <= k <= n");
  const int dim = k * (n - k);
  for (const auto& t : cls.terms()) {
    for (const auto& f : t.mono.factors())
      if (f.var.kind() != VarKind::chern)
        throw Error(ErrorKind::invalid_argument, "class must be a polynomial in c1..ck, found " + f.var.name());
    if (t.mono.chern_weight() != dim)
      throw Error(ErrorKind::degree_mismatch, "monomial " + t.mono.to_string() + " has weighted degree " +
                                                  std::to_string(t.mono.chern_weight()) + ", Gr(" +
                                                  std::to_string(k) + "," + std::to_string(n) +
                                                  ") has dimension " + std::to_string(dim));
  }
}

// c_i -> e_i(tautological weights)
std::map<Var, Polynomial> chern_images(const GrassFixedPoint& p, int max_index) {
  std::map<Var, Polynomial> images;
  for (int i = 1; i <= max_index; ++i) images[Var::c(unsigned(i))] = elementary_symmetric(i, p.tautological);
  return images;
}

int max_chern_index(const Polynomial& cls) {
  int m = 0;
  for (Var v : cls.variables()) m = std::max(m, int(v.index()));
  return m;
}

Polynomial product(std::span<const Polynomial> ps) {
  Polynomial r(1);
  for (const auto& p : ps) r = r * p;
  return r;
}

Polynomial vandermonde_weights(int n) {
  Polynomial r(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) r = r * (weight(i) - weight(j));
  return r;
}

std::vector<Polynomial> flag_denominator(const std::vector<int>& seq, int n) {
  std::vector<int> full = seq;
  for (int i = 1; i <= n; ++i)
    if (std::find(seq.begin(), seq.end(), i) == seq.end()) full.push_back(i);
  std::vector<Polynomial> den;
  for (std::size_t m = 0; m < seq.size(); ++m)
    for (std::size_t i = m + 1; i < full.size(); ++i) den.push_back(weight(full[i]) - weight(full[m]));
  return den;
}

std::map<Var, Polynomial> z_images(const std::vector<int>& seq) {
  std::map<Var, Polynomial> images;
  for (std::size_t m = 0; m < seq.size(); ++m) images[Var::z(unsigned(m + 1))] = weight(seq[m]);
  return images;
}

void check_flag_args(int n, int d, const Polynomial& q) {
  if (d < 1 || d > n) throw Error(ErrorKind::invalid_argument, "need 1 <= d <= n");
  for (Var v : q.variables())
    if (!v.is_residue() || int(v.index()) > d)
      throw Error(ErrorKind::invalid_argument, "Q must be a polynomial in z1..z" + std::to_string(d));
}

ResidueForm flag_form(int n, int d, const Polynomial& q, const std::function<Polynomial(int)>& lambda) {
  Polynomial num = q;
  for (int m = 1; m <= d; ++m)
    for (int l = m + 1; l <= d; ++l)
      num = num * (Polynomial::variable(Var::z(unsigned(m))) - Polynomial::variable(Var::z(unsigned(l))));
  ResidueForm form;
  form.numerator = LaurentSeries(num);
  for (int l = 1; l <= d; ++l) {
    form.ordering.push_back(Var::z(unsigned(l)));
    for (int i = 1; i <= n; ++i) form.denominators.emplace_back(lambda(i), std::map<Var, Rational>{{Var::z(unsigned(l)), -1}});
  }
  return form;
}

}  // namespace

std::vector<GrassFixedPoint> grass_fixed_points(int n, int k) {
  if (k < 0 || k > n) throw Error(ErrorKind::invalid_argument, "need 0 <= k <= n");
  std::vector<GrassFixedPoint> out;
  std::vector<bool> pick(std::size_t(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    GrassFixedPoint p;
    for (int i = 0; i < n; ++i)
      if (pick[std::size_t(i)]) p.subset.push_back(i + 1);
    for (int i : p.subset) {
      p.tautological.push_back(weight(i));
      for (int s = 1; s <= n; ++s)
        if (!pick[std::size_t(s - 1)]) p.tangent.push_back(weight(s) - weight(i));
    }
    out.push_back(std::move(p));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::vector<std::vector<int>> flag_fixed_points(int n, int d) {
  if (d < 0 || d > n) throw Error(ErrorKind::invalid_argument, "need 0 <= d <= n");
  std::vector<std::vector<int>> out;
  std::vector<int> seq;
  std::vector<bool> used(std::size_t(n) + 1, false);
  std::function<void()> rec = [&] {
    if (int(seq.size()) == d) {
      out.push_back(seq);
      return;
    }
    for (int i = 1; i <= n; ++i) {
      if (used[std::size_t(i)]) continue;
      used[std::size_t(i)] = true;
      seq.push_back(i);
      rec();
      seq.pop_back();
      used[std::size_t(i)] = false;
    }
  };
  rec();
  return out;
}

std::vector<Rational> random_weights(int n, std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> dist(-range, range);
  std::set<long> seen;
  std::vector<Rational> w;
  while (int(w.size()) < n) {
    const long x = dist(rng);
    if (seen.insert(x).second) w.emplace_back(x);
  }
  return w;
}

Rational grass_integrate_at(int n, int k, const Polynomial& cls, std::span<const Rational> weights) {
  check_grass_class(n, k, cls);
  check_weights(weights, n);
  const auto at = weight_assignment(weights);
  const int cmax = max_chern_index(cls);
  Rational sum = 0;
  for (const auto& p : grass_fixed_points(n, k)) {
    const Rational num = as_number(evaluate(substitute(cls, chern_images(p, cmax)), at), "class");
    if (num == 0) continue;
    Rational den = 1;
    for (const auto& t : p.tangent) den *= as_number(evaluate(t, at), "tangent weight");
    sum += num / den;
  }
  return sum;
}

Rational grass_integrate(int n, int k, const Polynomial& cls, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::optional<Rational> value;
  for (int draw = 0; draw < 3; ++draw) {
    const auto w = random_weights(n, rng);
    const Rational r = grass_integrate_at(n, k, cls, w);
    if (value && *value != r)
      throw Error(ErrorKind::weight_dependence, "fixed-point sum depends on the weights: " + value->get_str() +
                                                    " vs " + r.get_str());
    value = r;
  }
  return *value;
}

Polynomial grass_integrate_symbolic(int n, int k, const Polynomial& cls) {
  check_grass_class(n, k, cls);
  const Polynomial full = vandermonde_weights(n);
  const int cmax = max_chern_index(cls);
  Polynomial sum;
  for (const auto& p : grass_fixed_points(n, k)) {
    const Polynomial num = substitute(cls, chern_images(p, cmax));
    if (num.is_zero()) continue;
    sum += num * exact_divide(full, product(p.tangent));
  }
  return exact_divide(sum, full);
}

Rational flag_fixed_sum(int n, int d, const Polynomial& q, std::span<const Rational> weights) {
  check_flag_args(n, d, q);
  check_weights(weights, n);
  const auto at = weight_assignment(weights);
  Rational sum = 0;
  for (const auto& seq : flag_fixed_points(n, d)) {
    const Rational num = as_number(evaluate(substitute(q, z_images(seq)), at), "Q");
    if (num == 0) continue;
    Rational den = 1;
    for (const auto& t : flag_denominator(seq, n)) den *= as_number(evaluate(t, at), "weight");
    sum += num / den;
  }
  return sum;
}

Polynomial flag_fixed_sum_symbolic(int n, int d, const Polynomial& q) {
  check_flag_args(n, d, q);
  const Polynomial full = vandermonde_weights(n);
  Polynomial sum;
  for (const auto& seq : flag_fixed_points(n, d)) {
    const Polynomial num = substitute(q, z_images(seq));
    if (num.is_zero()) continue;
    sum += num * exact_divide(full, product(flag_denominator(seq, n)));
  }
  return exact_divide(sum, full);
}

Rational flag_residue(int n, int d, const Polynomial& q, std::span<const Rational> weights) {
  check_flag_args(n, d, q);
  check_weights(weights, n);
  const auto form = flag_form(n, d, q, [&](int i) { return Polynomial(weights[std::size_t(i - 1)]); });
  return as_number(iterated_residue(form), "residue");
}

Polynomial flag_residue_symbolic(int n, int d, const Polynomial& q) {
  check_flag_args(n, d, q);
  return iterated_residue(flag_form(n, d, q, weight));
}

bool FlagCheckReport::all_agree() const {
  return std::all_of(trials.begin(), trials.end(), [](const FlagTrial& t) { return t.agree; });
}

FlagCheckReport flag_check(int n_max, int d_max, int trials, std::uint64_t seed) {
  if (d_max < 1 || n_max < std::max(d_max, 2)) throw Error(ErrorKind::invalid_argument, "need 1 <= d_max <= n_max and n_max >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-5, 5);
  FlagCheckReport report;
  for (int t = 0; t < trials; ++t) {
    FlagTrial trial;
    trial.d = std::uniform_int_distribution<int>(1, d_max)(rng);
    trial.n = std::uniform_int_distribution<int>(std::max(trial.d, 2), n_max)(rng);
    const int deg = flag_dimension(trial.n, trial.d);
    // a few random monomials of the exact degree
    std::vector<Term> terms;
    for (int m = 0; m < 3; ++m) {
      std::vector<Factor> fs;
      int left = deg;
      for (int i = 1; i < trial.d; ++i) {
        const int e = std::uniform_int_distribution<int>(0, left)(rng);
        fs.push_back({Var::z(unsigned(i)), e});
        left -= e;
      }
      fs.push_back({Var::z(unsigned(trial.d)), left});
      std::erase_if(fs, [](const Factor& f) { return f.exp == 0; });
      int c = coef(rng);
      if (c == 0) c = 1;
      terms.push_back({Monomial::from_factors(fs), Rational(c)});
    }
    trial.q = Polynomial::from_terms(std::move(terms));
    for (int draw = 0; draw < 3; ++draw) {
      const auto w = random_weights(trial.n, rng, 1000);
      trial.fixed_sums.push_back(flag_fixed_sum(trial.n, trial.d, trial.q, w));
      trial.residues.push_back(flag_residue(trial.n, trial.d, trial.q, w));
    }
    trial.agree = true;
    for (int draw = 0; draw < 3; ++draw)
      trial.agree = trial.agree && trial.fixed_sums[std::size_t(draw)] == trial.residues[std::size_t(draw)] &&
                    trial.fixed_sums[std::size_t(draw)] == trial.fixed_sums[0];
    report.trials.push_back(std::move(trial));
  }
  return report;
}

}  // namespace equiloc
