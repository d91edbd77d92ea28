#include "lpg/markerpoly.hpp"

#include <algorithm>
#include <numeric>

namespace lpg {

namespace {

bool exps_less(const Exponents& a, const Exponents& b) { return a < b; }

bool is_unit_monomial(const Exponents& e) {
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

}  // namespace

MarkerPoly::MarkerPoly(long c) : MarkerPoly(Rational(c)) {}
MarkerPoly::MarkerPoly(const Integer& c) : MarkerPoly(Rational(c)) {}
MarkerPoly::MarkerPoly(const Rational& c) {
  Rational r = c;
  r.canonicalize();
  if (r == 0) return;
  terms_.push_back({Exponents{}, r});
}

MarkerPoly MarkerPoly::monomial(Marker m, unsigned power, const Rational& c) {
  MarkerPoly p;
  if (c == 0) return p;
  Term t{Exponents{}, c};
  t.coef.canonicalize();
  t.exps[static_cast<int>(m)] = static_cast<std::uint16_t>(power);
  p.terms_.push_back(std::move(t));
  return p;
}

bool MarkerPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && is_unit_monomial(terms_[0].exps));
}

Rational MarkerPoly::constant() const {
  if (!terms_.empty() && is_unit_monomial(terms_[0].exps)) return terms_[0].coef;
  return 0;
}

int MarkerPoly::degree(Marker m) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, t.exps[static_cast<int>(m)]);
  return d;
}

int MarkerPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_)
    d = std::max(d, std::accumulate(t.exps.begin(), t.exps.end(), 0));
  return d;
}

void MarkerPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return exps_less(a.exps, b.exps); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exps == t.exps)
      out.back().coef += t.coef;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.coef == 0; });
  terms_ = std::move(out);
}

MarkerPoly& MarkerPoly::operator+=(const MarkerPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.size() == 1 && o.terms_.size() == 1 && terms_[0].exps == o.terms_[0].exps) {
    terms_[0].coef += o.terms_[0].coef;
    if (terms_[0].coef == 0) terms_.clear();
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && exps_less(i->exps, j->exps))) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || exps_less(j->exps, i->exps)) {
      out.push_back(*j++);
    } else {
      Rational c = i->coef + j->coef;
      if (c != 0) out.push_back({i->exps, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MarkerPoly& MarkerPoly::operator-=(const MarkerPoly& o) { return *this += -o; }

MarkerPoly MarkerPoly::operator-() const {
  MarkerPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

MarkerPoly& MarkerPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

MarkerPoly& MarkerPoly::operator*=(const MarkerPoly& o) {
  *this = *this * o;
  return *this;
}

MarkerPoly operator*(const MarkerPoly& a, const MarkerPoly& b) {
  MarkerPoly r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    MarkerPoly::Term t{a.terms_[0].exps, a.terms_[0].coef * b.terms_[0].coef};
    for (int m = 0; m < kMarkers; ++m) t.exps[m] += b.terms_[0].exps[m];
    r.terms_.push_back(std::move(t));
    return r;
  }
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      MarkerPoly::Term t{x.exps, x.coef * y.coef};
      for (int m = 0; m < kMarkers; ++m) t.exps[m] += y.exps[m];
      r.terms_.push_back(std::move(t));
    }
  r.normalize();
  return r;
}

void MarkerPoly::add_product(const MarkerPoly& a, const MarkerPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return;
  if (a.is_constant() && b.is_constant() && is_constant()) {
    if (terms_.empty()) {
      terms_.push_back({Exponents{}, a.terms_[0].coef * b.terms_[0].coef});
    } else {
      mpq_class& c = terms_[0].coef;
      c += a.terms_[0].coef * b.terms_[0].coef;
      if (c == 0) terms_.clear();
    }
    return;
  }
  *this += a * b;
}

bool operator==(const MarkerPoly& a, const MarkerPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coef != b.terms_[i].coef)
      return false;
  return true;
}

MarkerPoly MarkerPoly::pow(unsigned e) const {
  MarkerPoly r(1);
  MarkerPoly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

MarkerPoly MarkerPoly::coeff(Marker m, unsigned k) const {
  MarkerPoly r;
  int idx = static_cast<int>(m);
  for (const auto& t : terms_) {
    if (t.exps[idx] != k) continue;
    Term c = t;
    c.exps[idx] = 0;
    r.terms_.push_back(std::move(c));
  }
  r.normalize();
  return r;
}

MarkerPoly MarkerPoly::eval(Marker m, const Rational& value) const {
  return subst(m, MarkerPoly(value));
}

MarkerPoly MarkerPoly::subst(Marker m, const MarkerPoly& value) const {
  int idx = static_cast<int>(m);
  int d = degree(m);
  if (d <= 0) return *this;
  std::vector<MarkerPoly> powers{MarkerPoly(1)};
  for (int k = 1; k <= d; ++k) powers.push_back(powers.back() * value);
  MarkerPoly r;
  for (const auto& t : terms_) {
    Term rest = t;
    rest.exps[idx] = 0;
    MarkerPoly mono;
    mono.terms_.push_back(std::move(rest));
    r += mono * powers[t.exps[idx]];
  }
  return r;
}

MarkerPoly MarkerPoly::derivative(Marker m) const {
  int idx = static_cast<int>(m);
  MarkerPoly r;
  for (const auto& t : terms_) {
    if (t.exps[idx] == 0) continue;
    Term d = t;
    d.coef *= t.exps[idx];
    d.exps[idx] -= 1;
    r.terms_.push_back(std::move(d));
  }
  r.normalize();
  return r;
}

std::string marker_name(Marker m) {
  switch (m) {
    case Marker::u: return "u";
    case Marker::w: return "w";
    case Marker::U: return "U";
  }
  return "?";
}

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string MarkerPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> order;
  for (const auto& t : terms_) order.push_back(&t);
  auto deg = [](const Term* t) { return std::accumulate(t->exps.begin(), t->exps.end(), 0); };
  std::sort(order.begin(), order.end(), [&](const Term* a, const Term* b) {
    int da = deg(a), db = deg(b);
    if (da != db) return da > db;
    return b->exps < a->exps;
  });
  std::string out;
  for (const Term* t : order) {
    bool unit = is_unit_monomial(t->exps);
    Rational c = t->coef;
    bool neg = c < 0;
    if (neg) c = -c;
    if (neg)
      out += "-";
    else if (!out.empty())
      out += "+";
    std::string mono;
    for (int m = 0; m < kMarkers; ++m) {
      if (t->exps[m] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += marker_name(static_cast<Marker>(m));
      if (t->exps[m] > 1) mono += "^" + std::to_string(t->exps[m]);
    }
    if (unit) {
      out += rational_str(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += rational_str(c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace lpg
