#include "equiloc/laurent.hpp"

#include <algorithm>
#include <climits>
#include <unordered_map>

#include "equiloc/error.hpp"

namespace equiloc {

namespace {

void check_exponents(const Monomial& m) {
  for (const auto& f : m.factors())
    if (f.exp < 0 && !f.var.is_residue())
      throw Error(ErrorKind::invalid_argument,
                  "negative exponent on non-residue variable " + f.var.name());
}

bool inside(const Monomial& m, const std::map<Var, Window>& windows) {
  for (const auto& [v, w] : windows) {
    const int e = m.exponent(v);
    if (w.lo && e < *w.lo) return false;
    if (w.hi && e > *w.hi) return false;
  }
  return true;
}

}  // namespace

LaurentSeries::LaurentSeries(const Polynomial& p)
    : ring_(p.ring()), terms_(p.terms().begin(), p.terms().end()) {}

LaurentSeries LaurentSeries::from_terms(std::vector<Term> terms, RingPtr ring,
                                        std::map<Var, Window> windows) {
  LaurentSeries s;
  s.ring_ = std::move(ring);
  for (const auto& [v, w] : windows)
    if (!v.is_residue())
      throw Error(ErrorKind::invalid_argument, "windows are only defined on residue variables");
  for (const auto& t : terms) check_exponents(t.mono);
  std::erase_if(terms, [&](const Term& t) {
    return (s.ring_ && !s.ring_->keeps(t.mono)) || !inside(t.mono, windows);
  });
  detail::canonicalize(terms);
  s.terms_ = std::move(terms);
  s.windows_ = std::move(windows);
  return s;
}

LaurentSeries LaurentSeries::monomial(Monomial m, Rational c, RingPtr ring) {
  std::vector<Term> t;
  t.push_back({std::move(m), std::move(c)});
  return from_terms(std::move(t), std::move(ring));
}

Window LaurentSeries::window(Var v) const {
  auto it = windows_.find(v);
  return it == windows_.end() ? Window{} : it->second;
}

bool LaurentSeries::is_exact() const {
  return std::none_of(windows_.begin(), windows_.end(), [](const auto& kv) { return kv.second.lo.has_value(); });
}

int LaurentSeries::max_exponent(Var v) const {
  if (terms_.empty()) return 0;
  int e = INT_MIN;
  for (const auto& t : terms_) e = std::max(e, t.mono.exponent(v));
  return e;
}

int LaurentSeries::min_exponent(Var v) const {
  if (terms_.empty()) return 0;
  int e = INT_MAX;
  for (const auto& t : terms_) e = std::min(e, t.mono.exponent(v));
  return e;
}

std::set<Var> LaurentSeries::variables() const {
  std::set<Var> vs;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) vs.insert(f.var);
  return vs;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries r;
  r.ring_ = detail::join_rings(a.ring_, b.ring_);
  std::set<Var> vars;
  for (const auto& [v, w] : a.windows_) vars.insert(v);
  for (const auto& [v, w] : b.windows_) vars.insert(v);
  for (Var v : vars) {
    const Window wa = a.window(v);
    const Window wb = b.window(v);
    Window w;
    if (wa.lo || wb.lo) w.lo = std::max(wa.lo.value_or(INT_MIN), wb.lo.value_or(INT_MIN));
    if (wa.hi || wb.hi)
      w.hi = std::max(wa.hi ? *wa.hi : a.max_exponent(v), wb.hi ? *wb.hi : b.max_exponent(v));
    r.windows_[v] = w;
  }
  r.terms_ = detail::add_terms(a.terms_, b.terms_, false);
  std::erase_if(r.terms_, [&](const Term& t) { return !inside(t.mono, r.windows_); });
  return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

LaurentSeries LaurentSeries::scaled(const Rational& c) const {
  LaurentSeries r = *this;
  if (c == 0) {
    r.terms_.clear();
    return r;
  }
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries r;
  r.ring_ = detail::join_rings(a.ring_, b.ring_);
  std::set<Var> vars;
  for (const auto& [v, w] : a.windows_) vars.insert(v);
  for (const auto& [v, w] : b.windows_) vars.insert(v);
  for (Var v : vars) {
    const Window wa = a.window(v);
    const Window wb = b.window(v);
    const int ha = wa.hi ? *wa.hi : a.max_exponent(v);
    const int hb = wb.hi ? *wb.hi : b.max_exponent(v);
    Window w;
    if (wa.lo) w.lo = *wa.lo + hb;
    if (wb.lo) w.lo = w.lo ? std::max(*w.lo, *wb.lo + ha) : *wb.lo + ha;
    if (wa.hi || wb.hi) w.hi = ha + hb;
    r.windows_[v] = w;
  }
  if (a.terms_.empty() || b.terms_.empty()) return r;
  const Ring* ring = r.ring_.get();
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size() / 2 + 8);
  Rational prod;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Monomial m = x.mono * y.mono;
      if (ring && !ring->keeps(m)) continue;
      if (!r.windows_.empty() && !inside(m, r.windows_)) continue;
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

LaurentSeries LaurentSeries::truncated(Var v, int lo) const {
  if (!v.is_residue()) throw Error(ErrorKind::invalid_argument, "truncation on non-residue variable");
  LaurentSeries r = *this;
  Window& w = r.windows_[v];
  if (!w.hi) w.hi = max_exponent(v);
  w.lo = w.lo ? std::max(*w.lo, lo) : lo;
  std::erase_if(r.terms_, [&](const Term& t) { return t.mono.exponent(v) < *w.lo; });
  return r;
}

std::map<int, LaurentSeries> LaurentSeries::collect(Var v) const {
  std::map<int, std::vector<Term>> parts;
  for (const auto& t : terms_) parts[t.mono.exponent(v)].push_back({t.mono.without(v), t.coef});
  std::map<Var, Window> rest = windows_;
  rest.erase(v);
  std::map<int, LaurentSeries> out;
  for (auto& [e, ts] : parts) {
    LaurentSeries s;
    s.ring_ = ring_;
    s.windows_ = rest;
    detail::canonicalize(ts);
    s.terms_ = std::move(ts);
    out.emplace(e, std::move(s));
  }
  return out;
}

Polynomial LaurentSeries::to_polynomial() const {
  for (const auto& t : terms_)
    if (t.mono.has_negative())
      throw Error(ErrorKind::invalid_argument, "series has negative exponents: " + t.mono.to_string());
  return Polynomial::from_terms(terms_, ring_);
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

std::string LaurentSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    const bool neg = t.coef < 0;
    const Rational mag = neg ? Rational(-t.coef) : t.coef;
    s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    if (t.mono.is_one())
      s += mag.get_str();
    else if (mag == 1)
      s += t.mono.to_string();
    else
      s += mag.get_str() + "*" + t.mono.to_string();
  }
  return s;
}

}  // namespace equiloc
