#include "equiloc/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "equiloc/error.hpp"

namespace equiloc {

int Ring::nilpotency(Var v) const {
  for (const auto& [var, order] : nilpotent)
    if (var == v) return order;
  return -1;
}

bool Ring::keeps(const Monomial& m) const {
  for (const auto& [var, order] : nilpotent)
    if (m.exponent(var) > order) return false;
  return true;
}

RingPtr make_ring(std::vector<std::pair<Var, int>> nilpotent) {
  for (const auto& [v, order] : nilpotent)
    if (order < 0 || v.is_residue())
      throw Error(ErrorKind::invalid_argument, "invalid nilpotency declaration for " + v.name());
  std::sort(nilpotent.begin(), nilpotent.end());
  return std::make_shared<const Ring>(Ring{std::move(nilpotent)});
}

namespace detail {

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_compare(a.mono, b.mono) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = terms[i].coef;
    while (j < terms.size() && terms[j].mono == terms[i].mono) sum += terms[j++].coef;
    if (sum != 0) {
      if (out != i) terms[out].mono = std::move(terms[i].mono);
      terms[out].coef = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

std::vector<Term> add_terms(std::span<const Term> a, std::span<const Term> b, bool negate_b) {
  std::vector<Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int c = 0;
    if (i == a.size())
      c = -1;
    else if (j == b.size())
      c = 1;
    else
      c = grlex_compare(a[i].mono, b[j].mono);
    if (c > 0) {
      r.push_back(a[i++]);
    } else if (c < 0) {
      r.push_back(b[j]);
      if (negate_b) r.back().coef = -r.back().coef;
      ++j;
    } else {
      Rational s = negate_b ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (s != 0) r.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

RingPtr join_rings(const RingPtr& a, const RingPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (*a == *b) return a;
  throw Error(ErrorKind::ring_mismatch, "operands belong to different ring declarations");
}

}  // namespace detail

Polynomial::Polynomial(const Rational& c, RingPtr ring) : ring_(std::move(ring)) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::variable(Var v, RingPtr ring) { return term(Monomial(v), 1, std::move(ring)); }

Polynomial Polynomial::term(Monomial m, Rational c, RingPtr ring) {
  Polynomial p(std::move(ring));
  if (m.has_negative())
    throw Error(ErrorKind::invalid_argument, "negative exponent in polynomial monomial " + m.to_string());
  if (c != 0 && (!p.ring_ || p.ring_->keeps(m))) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms, RingPtr ring) {
  Polynomial p(std::move(ring));
  for (const auto& t : terms)
    if (t.mono.has_negative())
      throw Error(ErrorKind::invalid_argument, "negative exponent in polynomial monomial " + t.mono.to_string());
  if (p.ring_)
    std::erase_if(terms, [&](const Term& t) { return !p.ring_->keeps(t.mono); });
  detail::canonicalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::with_ring(RingPtr ring) const {
  return from_terms(terms_, std::move(ring));
}

std::optional<Rational> Polynomial::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].mono.is_one()) return terms_[0].coef;
  return std::nullopt;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return 0;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

int Polynomial::degree_in(Var v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

int Polynomial::degree_in(VarKind kind) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(kind));
  return d;
}

std::set<Var> Polynomial::variables() const {
  std::set<Var> vs;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) vs.insert(f.var);
  return vs;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coef;
  return 0;
}

std::map<int, Polynomial> Polynomial::collect(Var v) const {
  std::map<int, std::vector<Term>> parts;
  for (const auto& t : terms_) parts[t.mono.exponent(v)].push_back({t.mono.without(v), t.coef});
  std::map<int, Polynomial> out;
  for (auto& [e, ts] : parts) out.emplace(e, from_terms(std::move(ts), ring_));
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  ring_ = detail::join_rings(ring_, o.ring_);
  terms_ = detail::add_terms(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  ring_ = detail::join_rings(ring_, o.ring_);
  terms_ = detail::add_terms(terms_, o.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(detail::join_rings(a.ring_, b.ring_));
  if (a.is_zero() || b.is_zero()) return r;
  const Ring* ring = r.ring_.get();
  if (a.size() == 1 || b.size() == 1) {
    const Polynomial& single = a.size() == 1 ? a : b;
    const Polynomial& other = a.size() == 1 ? b : a;
    const Term& s = single.terms_[0];
    std::vector<Term> out;
    out.reserve(other.size());
    for (const auto& t : other.terms_) {
      Monomial m = s.mono * t.mono;
      if (ring && !ring->keeps(m)) continue;
      out.push_back({std::move(m), s.coef * t.coef});
    }
    // Multiplying by a single monomial preserves the grlex order.
    r.terms_ = std::move(out);
    return r;
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size() / 2 + 8);
  Rational prod;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Monomial m = x.mono * y.mono;
      if (ring && !ring->keeps(m)) continue;
      mpq_mul(prod.get_mpq_t(), x.coef.get_mpq_t(), y.coef.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(std::move(m), prod);
      if (!inserted) it->second += prod;
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, std::move(c)});
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& s, const Term& t) { return grlex_compare(s.mono, t.mono) > 0; });
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(Rational(1), ring_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    const bool neg = t.coef < 0;
    const Rational mag = neg ? Rational(-t.coef) : t.coef;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    if (t.mono.is_one()) {
      s += mag.get_str();
    } else if (mag == 1) {
      s += t.mono.to_string();
    } else {
      s += mag.get_str() + "*" + t.mono.to_string();
    }
  }
  return s;
}

namespace {

bool divides(const Monomial& d, const Monomial& m) {
  for (const auto& f : d.factors())
    if (m.exponent(f.var) < f.exp) return false;
  return true;
}

Monomial quotient(const Monomial& m, const Monomial& d) {
  std::vector<Factor> inv;
  for (const auto& f : d.factors()) inv.push_back({f.var, -f.exp});
  return m * Monomial::from_factors(inv);
}

}  // namespace

Polynomial exact_divide(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error(ErrorKind::invalid_argument, "division by the zero polynomial");
  RingPtr ring = detail::join_rings(num.ring(), den.ring());
  Polynomial q(ring);
  Polynomial r = num;
  const Term& lead = den.terms()[0];
  while (!r.is_zero()) {
    const Term& lt = r.terms()[0];
    if (!divides(lead.mono, lt.mono))
      throw Error(ErrorKind::not_divisible,
                  "(" + num.to_string() + ") is not divisible by (" + den.to_string() + ")");
    Polynomial step = Polynomial::term(quotient(lt.mono, lead.mono), lt.coef / lead.coef, ring);
    q += step;
    r -= step * den;
  }
  return q;
}

Polynomial evaluate(const Polynomial& p, const std::map<Var, Rational>& assignment) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Rational c = t.coef;
    std::vector<Factor> rest;
    for (const auto& f : t.mono.factors()) {
      auto it = assignment.find(f.var);
      if (it == assignment.end()) {
        rest.push_back(f);
        continue;
      }
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), it->second.get_num_mpz_t(), unsigned(f.exp));
      mpz_pow_ui(pw.get_den_mpz_t(), it->second.get_den_mpz_t(), unsigned(f.exp));
      c *= pw;
    }
    if (c != 0) out.push_back({Monomial::from_factors(rest), std::move(c)});
  }
  return Polynomial::from_terms(std::move(out), p.ring());
}

Polynomial substitute(const Polynomial& p, const std::map<Var, Polynomial>& images) {
  RingPtr ring = p.ring();
  for (const auto& [v, img] : images) ring = detail::join_rings(ring, img.ring());
  std::map<std::pair<Var, int>, Polynomial> powers;
  auto power = [&](Var v, int e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    return powers.emplace(key, images.at(v).with_ring(ring).pow(unsigned(e))).first->second;
  };
  Polynomial result(ring);
  for (const auto& t : p.terms()) {
    std::vector<Factor> rest;
    Polynomial acc(t.coef, ring);
    for (const auto& f : t.mono.factors()) {
      if (images.count(f.var))
        acc = acc * power(f.var, f.exp);
      else
        rest.push_back(f);
    }
    result += acc * Polynomial::term(Monomial::from_factors(rest), 1, ring);
  }
  return result;
}

Polynomial elementary_symmetric(int i, std::span<const Polynomial> xs) {
  if (i < 0 || std::size_t(i) > xs.size()) return Polynomial();
  std::vector<Polynomial> e(std::size_t(i) + 1);
  e[0] = Polynomial(1);
  for (const auto& x : xs)
    for (int j = i; j >= 1; --j) e[std::size_t(j)] += e[std::size_t(j) - 1] * x;
  return e[std::size_t(i)];
}

Polynomial symmetric_reduce(const Polynomial& p, int n) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "symmetric_reduce needs n >= 1");
  for (const auto& v : p.variables())
    if (v.kind() == VarKind::weight && int(v.index()) > n)
      throw Error(ErrorKind::invalid_argument, "weight " + v.name() + " outside l1..l" + std::to_string(n));
  for (int i = 1; i < n; ++i) {
    std::map<Var, Polynomial> swap{{Var::l(unsigned(i)), Polynomial::variable(Var::l(unsigned(i + 1)))},
                                   {Var::l(unsigned(i + 1)), Polynomial::variable(Var::l(unsigned(i)))}};
    if (!(substitute(p, swap) == p))
      throw Error(ErrorKind::not_symmetric, "polynomial is not symmetric under l" + std::to_string(i) +
                                                " <-> l" + std::to_string(i + 1));
  }
  std::vector<Polynomial> weights;
  for (int i = 1; i <= n; ++i) weights.push_back(Polynomial::variable(Var::l(unsigned(i))));
  std::vector<Polynomial> esym(std::size_t(n) + 1);
  for (int i = 1; i <= n; ++i) esym[std::size_t(i)] = elementary_symmetric(i, weights);

  auto weight_exponents = [n](const Monomial& m) {
    std::vector<int> a(std::size_t(n), 0);
    for (const auto& f : m.factors())
      if (f.var.kind() == VarKind::weight) a[f.var.index() - 1] = f.exp;
    return a;
  };

  Polynomial rest = p;
  Polynomial result(p.ring());
  while (!rest.is_zero()) {
    // Lex-leading weight exponent vector; its coefficient may involve other variables.
    std::vector<int> lead;
    for (const auto& t : rest.terms()) {
      auto a = weight_exponents(t.mono);
      if (lead.empty() || a > lead) lead = std::move(a);
    }
    std::vector<Term> coef_terms;
    for (const auto& t : rest.terms()) {
      if (weight_exponents(t.mono) != lead) continue;
      std::vector<Factor> others;
      for (const auto& f : t.mono.factors())
        if (f.var.kind() != VarKind::weight) others.push_back(f);
      coef_terms.push_back({Monomial::from_factors(others), t.coef});
    }
    Polynomial coef = Polynomial::from_terms(std::move(coef_terms), p.ring());
    Polynomial in_weights = coef;
    std::vector<Factor> esym_factors;
    for (int i = 1; i <= n; ++i) {
      const int e = lead[std::size_t(i) - 1] - (i < n ? lead[std::size_t(i)] : 0);
      if (e < 0) throw Error(ErrorKind::not_symmetric, "leading exponents are not non-increasing");
      if (e == 0) continue;
      in_weights = in_weights * esym[std::size_t(i)].pow(unsigned(e));
      esym_factors.push_back({Var::e(unsigned(i)), e});
    }
    result += coef * Polynomial::term(Monomial::from_factors(esym_factors), 1);
    rest -= in_weights;
  }
  return result;
}

}  // namespace equiloc
