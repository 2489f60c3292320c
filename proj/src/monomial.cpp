#include "equiloc/monomial.hpp"

#include <algorithm>

namespace equiloc {

Monomial::Monomial(Var v, int exp) {
  if (exp != 0) f_.push_back({v, exp});
}

Monomial Monomial::from_factors(std::span<const Factor> factors) {
  Monomial m;
  m.f_.assign(factors.begin(), factors.end());
  std::sort(m.f_.begin(), m.f_.end(), [](const Factor& a, const Factor& b) { return a.var < b.var; });
  Storage merged;
  for (const auto& f : m.f_) {
    if (!merged.empty() && merged.back().var == f.var)
      merged.back().exp += f.exp;
    else
      merged.push_back(f);
  }
  m.f_.clear();
  for (const auto& f : merged)
    if (f.exp != 0) m.f_.push_back(f);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : f_) d += f.exp;
  return d;
}

int Monomial::exponent(Var v) const {
  for (const auto& f : f_)
    if (f.var == v) return f.exp;
  return 0;
}

bool Monomial::has_negative() const {
  return std::any_of(f_.begin(), f_.end(), [](const Factor& f) { return f.exp < 0; });
}

int Monomial::degree_in(VarKind kind) const {
  int d = 0;
  for (const auto& f : f_)
    if (f.var.kind() == kind) d += f.exp;
  return d;
}

int Monomial::chern_weight() const {
  int w = 0;
  for (const auto& f : f_)
    if (f.var.kind() == VarKind::chern) w += f.exp * int(f.var.index());
  return w;
}

Monomial Monomial::without(Var v) const {
  Monomial r;
  for (const auto& f : f_)
    if (!(f.var == v)) r.f_.push_back(f);
  return r;
}

Monomial Monomial::with_exponent(Var v, int exp) const {
  Monomial r;
  bool placed = false;
  for (const auto& f : f_) {
    if (!placed && v < f.var) {
      if (exp != 0) r.f_.push_back({v, exp});
      placed = true;
    }
    if (f.var == v) {
      if (exp != 0) r.f_.push_back({v, exp});
      placed = true;
      continue;
    }
    r.f_.push_back(f);
  }
  if (!placed && exp != 0) r.f_.push_back({v, exp});
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.f_.reserve(a.f_.size() + b.f_.size());
  auto i = a.f_.begin();
  auto j = b.f_.begin();
  while (i != a.f_.end() && j != b.f_.end()) {
    if (i->var == j->var) {
      const int e = i->exp + j->exp;
      if (e != 0) r.f_.push_back({i->var, e});
      ++i;
      ++j;
    } else if (i->var < j->var) {
      r.f_.push_back(*i++);
    } else {
      r.f_.push_back(*j++);
    }
  }
  r.f_.insert(r.f_.end(), i, a.f_.end());
  r.f_.insert(r.f_.end(), j, b.f_.end());
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto& f : f_) {
    h ^= f.var.key() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= std::size_t(f.exp) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& f : f_) {
    if (!s.empty()) s += '*';
    s += f.var.name();
    if (f.exp != 1) s += '^' + std::to_string(f.exp);
  }
  return s.empty() ? "1" : s;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  const auto fa = a.factors();
  const auto fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  auto cmp = [](int x, int y) { return x < y ? -1 : 1; };
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].var == fb[j].var) {
      if (fa[i].exp != fb[j].exp) return cmp(fa[i].exp, fb[j].exp);
      ++i;
      ++j;
    } else if (fa[i].var < fb[j].var) {
      return cmp(fa[i].exp, 0);
    } else {
      return cmp(0, fb[j].exp);
    }
  }
  if (i < fa.size()) return cmp(fa[i].exp, 0);
  if (j < fb.size()) return cmp(0, fb[j].exp);
  return 0;
}

}  // namespace equiloc
