#include "lpg/series.hpp"

#include <algorithm>
#include <sstream>

#include "lpg/errors.hpp"

namespace lpg {

std::string var_name(Var v) {
  switch (v) {
    case Var::z: return "z";
    case Var::x: return "x";
    case Var::v: return "v";
    case Var::t: return "t";
    case Var::w: return "w";
  }
  return "?";
}

namespace {

void same_var(const PowerSeries& a, const PowerSeries& b, const char* op) {
  if (a.var() != b.var())
    throw UsageError(std::string(op) + ": variable mismatch (" + var_name(a.var()) + " vs " +
                     var_name(b.var()) + ")");
}

std::vector<Rational> scalars(const PowerSeries& a, int order) {
  std::vector<Rational> r(static_cast<std::size_t>(order + 1));
  for (int i = 0; i <= order; ++i) r[i] = a[i].constant();
  return r;
}

PowerSeries mul_impl(const PowerSeries& a, const PowerSeries& b, bool parallel) {
  same_var(a, b, "mul");
  const int n = std::min(a.order(), b.order());
  PowerSeries r(a.var(), n);
  if (a.is_scalar() && b.is_scalar()) {
    auto x = scalars(a, n);
    auto y = scalars(b, n);
    // skip structural zeros: many of these series are even or sparse
    std::vector<int> nzx, nzy;
    for (int i = 0; i <= n; ++i) {
      if (x[i] != 0) nzx.push_back(i);
      if (y[i] != 0) nzy.push_back(i);
    }
    std::vector<Rational> out(static_cast<std::size_t>(n + 1));
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
    for (int k = 0; k <= n; ++k) {
      Rational s = 0;
      for (int i : nzx) {
        if (i > k) break;
        if (y[k - i] != 0) s += x[i] * y[k - i];
      }
      out[k] = std::move(s);
    }
    for (int k = 0; k <= n; ++k) r.at(k) = MarkerPoly(out[k]);
    return r;
  }
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
  for (int k = 0; k <= n; ++k) {
    MarkerPoly s;
    for (int i = 0; i <= k; ++i) s.add_product(a[i], b[k - i]);
    r.at(k) = std::move(s);
  }
  return r;
}

}  // namespace

PowerSeries::PowerSeries(Var var, int order) : var_(var) {
  if (order < 0) throw UsageError("series order must be non-negative");
  c_.resize(static_cast<std::size_t>(order + 1));
}

PowerSeries PowerSeries::constant(Var var, int order, const MarkerPoly& c) {
  PowerSeries s(var, order);
  s.c_[0] = c;
  return s;
}

PowerSeries PowerSeries::identity(Var var, int order) {
  PowerSeries s(var, order);
  if (order >= 1) s.c_[1] = MarkerPoly(1);
  return s;
}

PowerSeries PowerSeries::from_coeffs(Var var, int order, std::vector<MarkerPoly> coeffs) {
  PowerSeries s(var, order);
  for (std::size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= order; ++i)
    s.c_[i] = std::move(coeffs[i]);
  return s;
}

PowerSeries PowerSeries::polynomial(Var var, int order, std::initializer_list<long> coeffs) {
  std::vector<MarkerPoly> c;
  for (long x : coeffs) c.emplace_back(x);
  return from_coeffs(var, order, std::move(c));
}

const MarkerPoly& PowerSeries::operator[](int n) const {
  if (n < 0 || n > order())
    throw UsageError("coefficient index " + std::to_string(n) + " beyond truncation order " +
                     std::to_string(order()));
  return c_[static_cast<std::size_t>(n)];
}

MarkerPoly& PowerSeries::at(int n) {
  if (n < 0 || n > order()) throw UsageError("coefficient index beyond truncation order");
  return c_[static_cast<std::size_t>(n)];
}

bool PowerSeries::is_scalar() const {
  return std::all_of(c_.begin(), c_.end(), [](const MarkerPoly& p) { return p.is_constant(); });
}

Rational PowerSeries::scalar(int n) const {
  const MarkerPoly& p = (*this)[n];
  if (!p.is_constant()) throw UsageError("coefficient carries markers: " + p.str());
  return p.constant();
}

Integer PowerSeries::integer(int n) const {
  Rational q = scalar(n);
  if (q.get_den() != 1) throw UsageError("coefficient is not an integer: " + rational_str(q));
  return q.get_num();
}

std::vector<Integer> PowerSeries::integers() const {
  std::vector<Integer> r;
  for (int i = 0; i <= order(); ++i) r.push_back(integer(i));
  return r;
}

PowerSeries PowerSeries::truncate(int order) const {
  PowerSeries s(var_, std::min(order, this->order()));
  for (int i = 0; i <= s.order(); ++i) s.c_[i] = c_[i];
  return s;
}

PowerSeries PowerSeries::pad(int order) const {
  if (order <= this->order()) return truncate(order);
  PowerSeries s(var_, order);
  for (int i = 0; i <= this->order(); ++i) s.c_[i] = c_[i];
  return s;
}

PowerSeries PowerSeries::relabel(Var var) const {
  PowerSeries s = *this;
  s.var_ = var;
  return s;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  same_var(*this, o, "add");
  c_.resize(static_cast<std::size_t>(std::min(order(), o.order()) + 1));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  same_var(*this, o, "sub");
  c_.resize(static_cast<std::size_t>(std::min(order(), o.order()) + 1));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries s = *this;
  for (auto& c : s.c_) c = -c;
  return s;
}

PowerSeries PowerSeries::marker_derivative(Marker m) const {
  PowerSeries s = *this;
  for (auto& c : s.c_) c = c.derivative(m);
  return s;
}

PowerSeries PowerSeries::marker_eval(Marker m, const Rational& value) const {
  PowerSeries s = *this;
  for (auto& c : s.c_) c = c.eval(m, value);
  return s;
}

PowerSeries PowerSeries::marker_coeff(Marker m, unsigned k) const {
  PowerSeries s = *this;
  for (auto& c : s.c_) c = c.coeff(m, k);
  return s;
}

PowerSeries PowerSeries::marker_subst(Marker m, const MarkerPoly& value) const {
  PowerSeries s = *this;
  for (auto& c : s.c_) c = c.subst(m, value);
  return s;
}

PowerSeries PowerSeries::shift_down(int k) const {
  if (k > order()) throw UsageError("shift_down: shift exceeds order");
  for (int i = 0; i < k; ++i)
    if (!c_[i].is_zero()) throw UsageError("shift_down: low-order coefficient is not zero");
  PowerSeries s(var_, order() - k);
  for (int i = 0; i <= s.order(); ++i) s.c_[i] = c_[i + k];
  return s;
}

PowerSeries PowerSeries::shift_up(int k) const {
  PowerSeries s(var_, order() + k);
  for (int i = 0; i <= order(); ++i) s.c_[i + k] = c_[i];
  return s;
}

std::string PowerSeries::dump() const {
  std::ostringstream os;
  for (int i = 0; i <= order(); ++i) os << i << '\t' << c_[i].str() << '\n';
  return os.str();
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
  return a.var_ == b.var_ && a.c_ == b.c_;
}

PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }

PowerSeries operator+(const PowerSeries& a, const MarkerPoly& c) {
  PowerSeries s = a;
  s.at(0) += c;
  return s;
}
PowerSeries operator-(const PowerSeries& a, const MarkerPoly& c) { return a + (-c); }
PowerSeries operator+(const MarkerPoly& c, const PowerSeries& a) { return a + c; }
PowerSeries operator-(const MarkerPoly& c, const PowerSeries& a) { return (-a) + c; }

PowerSeries mul_serial(const PowerSeries& a, const PowerSeries& b) {
  return mul_impl(a, b, false);
}
PowerSeries mul_parallel(const PowerSeries& a, const PowerSeries& b) {
  return mul_impl(a, b, true);
}
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return mul_parallel(a, b); }

PowerSeries operator*(const MarkerPoly& c, const PowerSeries& a) {
  PowerSeries s(a.var(), a.order());
  for (int i = 0; i <= a.order(); ++i) s.at(i) = c * a[i];
  return s;
}

PowerSeries pow(const PowerSeries& f, unsigned e) {
  PowerSeries r = PowerSeries::constant(f.var(), f.order(), 1);
  PowerSeries base = f;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

PowerSeries operator/(const PowerSeries& f, const PowerSeries& g) {
  same_var(f, g, "div");
  const MarkerPoly& g0 = g[0];
  if (g0.is_zero() || !g0.is_constant())
    throw SingularDivision("div: constant term of divisor is " + g0.str());
  const Rational inv = 1 / g0.constant();
  const int n = std::min(f.order(), g.order());
  PowerSeries h(f.var(), n);
  for (int k = 0; k <= n; ++k) {
    MarkerPoly s = f[k];
    for (int i = 1; i <= k; ++i) {
      if (g[i].is_zero() || h[k - i].is_zero()) continue;
      s -= g[i] * h[k - i];
    }
    s *= inv;
    h.at(k) = std::move(s);
  }
  return h;
}

PowerSeries reciprocal(const PowerSeries& g) {
  return PowerSeries::constant(g.var(), g.order(), 1) / g;
}

PowerSeries sqrt(const PowerSeries& f) {
  if (!(f[0] == MarkerPoly(1)))
    throw UnsupportedBranch("sqrt: constant term must be 1, got " + f[0].str());
  const int n = f.order();
  PowerSeries h(f.var(), n);
  h.at(0) = 1;
  const Rational half(1, 2);
  for (int k = 1; k <= n; ++k) {
    MarkerPoly s = f[k];
    for (int i = 1; i < k; ++i) {
      if (h[i].is_zero() || h[k - i].is_zero()) continue;
      s -= h[i] * h[k - i];
    }
    s *= half;
    h.at(k) = std::move(s);
  }
  return h;
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
  if (!g[0].is_zero()) throw CompositionError("compose: inner series has nonzero constant term");
  const int n = std::min(f.order(), g.order());
  int top = n;
  while (top > 0 && f[top].is_zero()) --top;
  PowerSeries r = PowerSeries::constant(g.var(), n, f[top]);
  const PowerSeries inner = g.truncate(n);
  for (int i = top - 1; i >= 0; --i) {
    r = r * inner;
    r.at(0) += f[i];
  }
  return r;
}

PowerSeries expand_square(const PowerSeries& f, Var to, int order) {
  PowerSeries r(to, order);
  for (int i = 0; 2 * i <= order; ++i) r.at(2 * i) = f[i];
  return r;
}

AlgebraicSubstitution::AlgebraicSubstitution(PowerSeries phi_v) : phi(std::move(phi_v)) {
  if (phi.var() != Var::v) throw UsageError("substitution: phi must be a series in v");
  const MarkerPoly& c = phi[0];
  if (c.is_zero() || !c.is_constant())
    throw DomainError("substitution: phi(0) must be a nonzero constant");
}

PowerSeries invert_substitution(const AlgebraicSubstitution& s, int order, Var target) {
  // Lagrange: [X^n] V = (1/n) [V^(n-1)] phi^n
  PowerSeries v(target, order);
  if (order < 1) return v;
  const PowerSeries phi = s.phi.relabel(target).truncate(order - 1);
  PowerSeries power = phi;
  for (int n = 1; n <= order; ++n) {
    v.at(n) = power[n - 1];
    v.at(n) *= Rational(1, n);
    if (n < order) power = power * phi;
  }
  return v;
}

PowerSeries quadratic_v(const Integer& b, int order, Var target) {
  // V = (1 - bX - sqrt((1 - bX)^2 - 4X^2)) / (2X)
  const long bl = b.get_si();
  PowerSeries q(target, order + 1);
  q.at(0) = 1;
  q.at(1) = MarkerPoly(Integer(-2 * b));
  q.at(2) = MarkerPoly(Integer(b * b - 4));
  PowerSeries num = PowerSeries::polynomial(target, order + 1, {1, -bl}) - sqrt(q);
  return Rational(1, 2) * num.shift_down(1);
}

PowerSeries eval_in_v(const PowerSeries& expr, const PowerSeries& v_of_x) {
  return compose(expr.relabel(v_of_x.var()), v_of_x);
}

PowerSeries eval_in_v(const PowerSeries& expr, const AlgebraicSubstitution& s, int order,
                      Var target) {
  return eval_in_v(expr.truncate(order), invert_substitution(s, order, target));
}

}  // namespace lpg
