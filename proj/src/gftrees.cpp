#include "lpg/gftrees.hpp"

#include "gfcommon.hpp"
#include "lpg/errors.hpp"
#include "lpg/numkernel.hpp"

namespace lpg {

using detail::exact_div;
using detail::one;
using detail::poly;
using detail::spow;
using detail::vpow;

namespace {

// v^(2^p) for the Horton forms; 2^p beyond the order means zero.
PowerSeries vpow2(const PowerSeries& v, int p, long offset) {
  if (p >= 30) return PowerSeries(v.var(), v.order());
  return vpow(v, (1L << p) + offset);
}

void check_horton(int p, int a, const char* who) {
  if (p < 0 || a < 0) throw DomainError(std::string(who) + ": p and a must be >= 0");
}

}  // namespace

// ---- Horton-Strahler ----------------------------------------------------------

PowerSeries horton_Rp(int p, int a, int N) {
  check_horton(p, a, "horton_Rp");
  const PowerSeries v = quadratic_v(a + 2, N);
  const PowerSeries o = one(Var::z, N);
  // (1-v^2)/v * v^(2^p) / (1 - v^(2^(p+1)))
  return (o - v * v) * vpow2(v, p, -1) / (o - vpow2(v, p + 1, 0));
}

PowerSeries horton_Sp(int p, int a, int N) {
  check_horton(p, a, "horton_Sp");
  const PowerSeries v = quadratic_v(a + 2, N);
  const PowerSeries o = one(Var::z, N);
  return (o - v * v) * vpow2(v, p, -1) / (o - vpow2(v, p, 0));
}

PowerSeries horton_Rp_recursive(int p, int a, int N) {
  check_horton(p, a, "horton_Rp_recursive");
  const PowerSeries z = PowerSeries::identity(Var::z, N);
  PowerSeries r = one(Var::z, N), below(Var::z, N);
  for (int q = 1; q <= p; ++q) {
    below += r;
    PowerSeries den = one(Var::z, N) - MarkerPoly(2) * z * below - MarkerPoly(a) * z;
    r = z * r * r / den;
  }
  return r;
}

Integer unary_binary_count(int n, int a) {
  if (n < 0 || a < 0) throw DomainError("unary_binary_count: n and a must be >= 0");
  if (n == 0) return 1;
  // [v^n] (1-v)(1+v)^2 (1+(a+2)v+v^2)^(n-1)
  const Integer b = a + 2;
  return trinomial(n - 1, b, n) + trinomial(n - 1, b, n - 1) - trinomial(n - 1, b, n - 2) -
         trinomial(n - 1, b, n - 3);
}

Integer horton_reg_total(int n, int a) {
  if (n < 0 || a < 0) throw DomainError("horton_reg_total: n and a must be >= 0");
  if (n == 0) return 0;
  const auto row = trinomial_row_recurrence(n - 1, a + 2);
  auto tri = [&](long k) -> Integer {
    if (k < 0 || k > 2L * (n - 1)) return 0;
    return row[static_cast<std::size_t>(k)];
  };
  Integer s = 0;
  for (long j = 2; j <= n + 1; j += 2)
    s += v2(static_cast<unsigned long>(j)) * (tri(n + 1 - j) - 2 * tri(n - 1 - j) + tri(n - 3 - j));
  return s;
}

Rational horton_average(int n, int a) {
  return ratio(horton_reg_total(n, a), unary_binary_count(n, a));
}

// ---- marked ordered trees ------------------------------------------------------

PowerSeries marked_leaf_series(int N) {
  const MarkerPoly u = MarkerPoly::monomial(Marker::u);
  // 1 - 4z - 2zu + 4z^2 + z^2u^2
  PowerSeries q(Var::z, N);
  q.at(0) = 1;
  if (N >= 1) q.at(1) = MarkerPoly(-4) - MarkerPoly(2) * u;
  if (N >= 2) q.at(2) = MarkerPoly(4) + u * u;
  PowerSeries lin(Var::z, N);
  lin.at(0) = Rational(1, 2);
  if (N >= 1) lin.at(1) = Rational(1, 2) * u - MarkerPoly(1);
  return lin - Rational(1, 2) * sqrt(q);
}

PowerSeries marked_leaf_total(int N) {
  PowerSeries w = sqrt(poly(Var::z, N, {1, -6, 5}));
  return Rational(1, 2) * (poly(Var::z, N, {0, 1}) + poly(Var::z, N, {0, 1, -1}) / w);
}

PowerSeries marked_count_series(int N) {
  return Rational(1, 2) * (poly(Var::z, N, {1, -1}) - sqrt(poly(Var::z, N, {1, -6, 5})));
}

Rational marked_leaf_average(int n) {
  if (n < 1) throw DomainError("marked_leaf_average: n must be >= 1");
  return marked_leaf_total(n).scalar(n) / marked_count_series(n).scalar(n);
}

PowerSeries marked_height_ph(int h, int N) {
  if (h < 1) throw DomainError("marked_height_ph: h must be >= 1");
  const PowerSeries v = quadratic_v(3, N);
  const PowerSeries o = one(Var::z, N);
  const PowerSeries z = PowerSeries::identity(Var::z, N);
  const PowerSeries a = pow(o + MarkerPoly(2) * v, h - 1);
  const PowerSeries b = pow(v + MarkerPoly(2), h - 1);
  return z * (o + v) * (a - vpow(v, h) * b) / (a - vpow(v, h + 1) * b);
}

PowerSeries marked_height_recursive(int h, int N) {
  if (h < 1) throw DomainError("marked_height_recursive: h must be >= 1");
  const PowerSeries z = PowerSeries::identity(Var::z, N);
  const PowerSeries num = poly(Var::z, N, {0, 2, -1});
  PowerSeries p = z;
  for (int i = 1; i < h; ++i) p = num / (one(Var::z, N) - p) - z;
  return p;
}

// ---- ternary ------------------------------------------------------------------

Integer ternary_T(int n, int k) {
  if (n < 0 || k < 0) throw DomainError("ternary_T: n and k must be >= 0");
  if (n == 0) return k == 0 ? 1 : 0;
  return exact_div(binomial(n, k) * binomial(2L * n, n - 1 - k), n);
}

namespace {

MarkerPoly mu() { return MarkerPoly::monomial(Marker::u); }

// 1 - t + ut in variable var
PowerSeries ternary_den(Var var, int N) {
  PowerSeries s(var, N);
  s.at(0) = 1;
  if (N >= 1) s.at(1) = mu() - MarkerPoly(1);
  return s;
}

}  // namespace

PowerSeries ternary_t_series(int N) {
  // t = x (1 - t + ut)/(1 - t)^2
  const PowerSeries phi = ternary_den(Var::v, N) / pow(poly(Var::v, N, {1, -1}), 2);
  return invert_substitution(AlgebraicSubstitution(phi), N, Var::x);
}

PowerSeries ternary_r1_series(int N) {
  return reciprocal(one(Var::x, N) - ternary_t_series(N));
}

PowerSeries ternary_inverse_root_product(int N) {
  // t^2/4 - t (t(1-t) + u(2-t)^2) / (4(1 - t + tu))
  const Var t = Var::t;
  PowerSeries inner = poly(t, N, {0, 1, -1}) + mu() * poly(t, N, {4, -4, 1});
  PowerSeries s = poly(t, N, {0, 0, 1}) - poly(t, N, {0, 1}) * inner / ternary_den(t, N);
  return Rational(1, 4) * s;
}

PowerSeries ternary_xi_series(int N) {
  const MarkerPoly U = MarkerPoly::monomial(Marker::U);
  const MarkerPoly u = MarkerPoly(1) + U;
  PowerSeries q(Var::t, N);
  q.at(0) = 1;
  if (N >= 1) q.at(1) = Rational(-1, 4) * (MarkerPoly(3) + MarkerPoly(4) * U);
  if (N >= 2) q.at(2) = Rational(1, 4) * U * u;
  PowerSeries den(Var::t, N);
  den.at(0) = 1;
  if (N >= 1) den.at(1) = -u;
  return sqrt(q) / den;
}

bool ternary_factorization_check(int N) {
  const Var t = Var::t;
  // x as a series in t
  PowerSeries x = poly(t, N, {0, 1}) * pow(poly(t, N, {1, -1}), 2) / ternary_den(t, N);
  PowerSeries r1 = reciprocal(poly(t, N, {1, -1}));
  bool ok = mu() * x * r1 + ternary_inverse_root_product(N) == PowerSeries(t, N);

  // r1 = Xi^2 - t^2/(4ux) in tau = t/u, u = 1 + U
  const MarkerPoly U = MarkerPoly::monomial(Marker::U);
  const MarkerPoly u = MarkerPoly(1) + U;
  PowerSeries one_minus(t, N), corr(t, N);
  one_minus.at(0) = 1;
  if (N >= 1) one_minus.at(1) = -u;
  corr.at(0) = 1;
  if (N >= 1) corr.at(1) = u * u - u;
  PowerSeries xi = ternary_xi_series(N);
  PowerSeries tail = Rational(1, 4) * PowerSeries::identity(t, N) * corr / pow(one_minus, 2);
  ok = ok && (xi * xi - tail == reciprocal(one_minus));
  return ok;
}

// ---- Retakh ---------------------------------------------------------------------

PowerSeries retakh_Gk(int k, int N) {
  if (k < 1) throw DomainError("retakh_Gk: k must be >= 1");
  const PowerSeries v = quadratic_v(1, N);
  const PowerSeries o = one(Var::z, N);
  return v / (o + v) * (o - vpow(v, 2L * k)) / (o - vpow(v, 2L * k + 1));
}

PowerSeries retakh_Gk_recursive(int k, int N) {
  if (k < 1) throw DomainError("retakh_Gk_recursive: k must be >= 1");
  const PowerSeries z = PowerSeries::identity(Var::z, N);
  const PowerSeries o = one(Var::z, N);
  PowerSeries g = z;
  for (int i = 1; i < k; ++i) g = z / (o - z * g / (o - g));
  return g;
}

PowerSeries retakh_F(int N) {
  const PowerSeries v = quadratic_v(1, N);
  return v * v / (one(Var::z, N) + v + v * v);
}

PowerSeries retakh_full(int N) { return quadratic_v(1, N); }

PowerSeries retakh_leaf_series(int N) {
  const PowerSeries v = quadratic_v(1, N);
  const PowerSeries o = one(Var::z, N);
  PowerSeries num = v * (o + v) * (o - v + MarkerPoly(2) * v * v - v * v * v);
  return num / ((o - v) * (o + v + v * v));
}

Rational retakh_leaf_average(int n) {
  if (n < 1) throw DomainError("retakh_leaf_average: n must be >= 1");
  return retakh_leaf_series(n).scalar(n) / retakh_full(n).scalar(n);
}

}  // namespace lpg
