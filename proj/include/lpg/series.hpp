#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "lpg/markerpoly.hpp"

namespace lpg {

enum class Var { z, x, v, t, w };
std::string var_name(Var v);

// Truncated power series c_0 + c_1 X + ... + c_N X^N in one size variable X,
// coefficients are MarkerPolys. Binary operations truncate to the smaller order.
class PowerSeries {
 public:
  PowerSeries() = default;
  PowerSeries(Var var, int order);

  static PowerSeries constant(Var var, int order, const MarkerPoly& c);
  // The size variable itself, X.
  static PowerSeries identity(Var var, int order);
  static PowerSeries from_coeffs(Var var, int order, std::vector<MarkerPoly> coeffs);
  static PowerSeries polynomial(Var var, int order, std::initializer_list<long> coeffs);

  Var var() const { return var_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  const MarkerPoly& operator[](int n) const;
  MarkerPoly& at(int n);
  const std::vector<MarkerPoly>& coeffs() const { return c_; }

  bool is_scalar() const;
  Rational scalar(int n) const;   // throws if c_n carries markers
  Integer integer(int n) const;   // throws unless c_n is an integer constant
  std::vector<Integer> integers() const;

  PowerSeries truncate(int order) const;
  // Zero-extends to `order`; only meaningful when the series is an exact polynomial.
  PowerSeries pad(int order) const;
  PowerSeries relabel(Var var) const;

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries operator-() const;

  // Series in markers: d/dm, m := value, [m^k], m := polynomial.
  PowerSeries marker_derivative(Marker m) const;
  PowerSeries marker_eval(Marker m, const Rational& value) const;
  PowerSeries marker_coeff(Marker m, unsigned k) const;
  PowerSeries marker_subst(Marker m, const MarkerPoly& value) const;

  // X^-k f; requires c_0..c_{k-1} = 0. Order drops by k.
  PowerSeries shift_down(int k) const;
  // X^k f; order grows by k.
  PowerSeries shift_up(int k) const;

  // "n<TAB>poly" lines.
  std::string dump() const;

  friend bool operator==(const PowerSeries& a, const PowerSeries& b);

 private:
  Var var_ = Var::z;
  std::vector<MarkerPoly> c_;
};

PowerSeries operator+(PowerSeries a, const PowerSeries& b);
PowerSeries operator-(PowerSeries a, const PowerSeries& b);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const MarkerPoly& c, const PowerSeries& a);
PowerSeries operator/(const PowerSeries& f, const PowerSeries& g);
PowerSeries operator+(const PowerSeries& a, const MarkerPoly& c);
PowerSeries operator-(const PowerSeries& a, const MarkerPoly& c);
PowerSeries operator+(const MarkerPoly& c, const PowerSeries& a);
PowerSeries operator-(const MarkerPoly& c, const PowerSeries& a);

// Cauchy products; operator* dispatches to the parallel kernel.
PowerSeries mul_serial(const PowerSeries& a, const PowerSeries& b);
PowerSeries mul_parallel(const PowerSeries& a, const PowerSeries& b);

PowerSeries pow(const PowerSeries& f, unsigned e);
PowerSeries reciprocal(const PowerSeries& g);
PowerSeries sqrt(const PowerSeries& f);
// f(g(X)); g(0) must vanish. Result lives in g's variable.
PowerSeries compose(const PowerSeries& f, const PowerSeries& g);
// f(X^2) in variable `to`, truncated at `order`.
PowerSeries expand_square(const PowerSeries& f, Var to, int order);

// V = X * phi(V), phi(0) invertible.
struct AlgebraicSubstitution {
  PowerSeries phi;  // series in v
  explicit AlgebraicSubstitution(PowerSeries phi_v);
};

// V(X) with V = X phi(V), by fixed-point iteration.
PowerSeries invert_substitution(const AlgebraicSubstitution& s, int order, Var target = Var::z);
PowerSeries eval_in_v(const PowerSeries& expr, const AlgebraicSubstitution& s, int order,
                      Var target = Var::z);
// V(X) for X = V/(1 + bV + V^2), from the quadratic's small root.
PowerSeries quadratic_v(const Integer& b, int order, Var target = Var::z);
// As above with a precomputed V(X).
PowerSeries eval_in_v(const PowerSeries& expr, const PowerSeries& v_of_x);

}  // namespace lpg
