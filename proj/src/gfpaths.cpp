#include "lpg/gfpaths.hpp"

#include <algorithm>

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

Integer to_integer(const Rational& q, const char* who) {
  if (q.get_den() != 1) throw DomainError(std::string(who) + ": non-integral value " + rational_str(q));
  return q.get_num();
}

Rational pow2(long e) {
  Rational r(1);
  if (e >= 0)
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  else
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(-e));
  return r;
}

// sqrt(1 - 6X + 5X^2)
PowerSeries w_root(Var var, int order) { return sqrt(poly(var, order, {1, -6, 5})); }

// f(x) with x = z^2, multiplied by z^j, in z up to N.
PowerSeries odd_lift(const PowerSeries& fx, int j, int N) {
  if (N < j) return PowerSeries(Var::z, N);
  return expand_square(fx, Var::z, N - j).shift_up(j);
}

}  // namespace

// ---- k-Dyck ---------------------------------------------------------------

Integer ubar_coeff(int k, long l) {
  if (k < 1) throw DomainError("ubar: k must be >= 1");
  if (l < 0) return 0;
  const long m = 1 + l * (k + 1);
  return exact_div(binomial(m, l), m);
}

PowerSeries ubar(int k, int N) {
  PowerSeries s(Var::z, N);
  for (int l = 0; l <= N; ++l) s.at(l) = ubar_coeff(k, l);
  return s;
}

Integer ubar_power_coeff(int d, int k, long l) {
  if (d < 1) throw DomainError("ubar_power: d must be >= 1");
  if (k < 1) throw DomainError("ubar_power: k must be >= 1");
  if (l < 0) return 0;
  return exact_div(binomial(d - 1 + (k + 1) * l, l) * d, Integer(k * l + d));
}

PowerSeries ubar_power(int d, int k, int N) {
  PowerSeries s(Var::z, N);
  for (int l = 0; l <= N; ++l) s.at(l) = ubar_power_coeff(d, k, l);
  return s;
}

namespace {

// [z^n] S_j; only 0 <= m <= j/k contributes.
Integer sj_coeff(long j, int k, long n) {
  if (j < 0 || n < 0 || n * k > j) return 0;
  Integer c = binomial(j - k * n, n);
  return (n % 2) ? Integer(-c) : c;
}

}  // namespace

PowerSeries denom_Sj(int j, int k) {
  if (k < 1) throw DomainError("denom_Sj: k must be >= 1");
  if (j < 0) return PowerSeries(Var::z, 0);
  int top = j / k;
  while (top > 0 && sj_coeff(j, k, top) == 0) --top;
  PowerSeries s(Var::z, top);
  for (int m = 0; m <= top; ++m) s.at(m) = sj_coeff(j, k, m);
  return s;
}

Integer deng_mansour_count(int n_up, int j, int k) {
  if (k < 1) throw DomainError("deng_mansour_count: k must be >= 1");
  if (n_up < 1) throw DomainError("deng_mansour_count: n_up must be >= 1");
  if (j < k) return 0;
  // after the shift n -> n+1, j -> j+k
  const long n = n_up - 1, jj = j - k;
  Integer s = 0;
  for (long m = 0; m * k <= jj && m <= n; ++m) s += sj_coeff(jj, k, m) * ubar_coeff(k, n - m);
  return s - sj_coeff(jj - 1, k, n);
}

Integer last_downrun_total(int m, int k) {
  if (m < 1) throw DomainError("last_downrun_total: m must be >= 1");
  return ubar_coeff(k, m + 1) - ubar_coeff(k, m);
}

Integer hoppy_early_total(int m, int k) {
  if (m < 1) throw DomainError("hoppy_early_total: m must be >= 1");
  if (k < 1) throw DomainError("hoppy_early_total: k must be >= 1");
  return exact_div(binomial(static_cast<long>(k + 1) * m, m) * k, Integer(m + 1));
}

PowerSeries hoppy_negative_series(int k, int N) {
  PowerSeries u2 = ubar_power(2, k, N + 1);
  PowerSeries r = (u2 - MarkerPoly(1)).shift_down(1) - MarkerPoly(2) * u2.truncate(N);
  return r;
}

// ---- skew -----------------------------------------------------------------

PowerSeries skew_sj_series(int j, int N) {
  if (j < 0) throw DomainError("skew_sj: j must be >= 0");
  const int nx = std::max(0, (N - j) / 2);
  PowerSeries w = w_root(Var::x, nx);
  PowerSeries p = Rational(1, 2) * (poly(Var::x, nx, {1, 1}) + w);
  PowerSeries s = Rational(1, 2) * (poly(Var::x, nx, {3, -3}) - w) / pow(p, j + 1);
  return odd_lift(s, j, N);
}

Integer skew_sj_coeff(int n, int j) {
  if (j < 0) throw DomainError("skew_sj: j must be >= 0");
  if (n < j || (n - j) % 2) return 0;
  const long m = (n - j) / 2;
  if (m == 0) return 1;
  Rational s = 0;
  for (long k = 0; k <= m; ++k) {
    Rational lam = pow2(k - 3) * Rational(3 * binomial(-j, k) + 5 * binomial(1 - j, k) +
                                          binomial(2 - j, k) - binomial(3 - j, k));
    s += lam * Rational(trinomial(m + j - 1, Integer(3), m - k));
  }
  return to_integer(s, "skew_sj_coeff");
}

PowerSeries skew_open_ended(int N) {
  const int n1 = N + 1;
  PowerSeries w = sqrt(poly(Var::z, n1, {1, 0, -6, 0, 5}));
  PowerSeries num = poly(Var::z, n1, {1, 1}) * poly(Var::z, n1, {-2, 3, 1}) + poly(Var::z, n1, {2, 1}) * w;
  return -num.shift_down(1) / poly(Var::z, N, {-2, 4, 2});
}

PowerSeries skew_red_series(int N) {
  const MarkerPoly w = MarkerPoly::monomial(Marker::w);
  PowerSeries q(Var::x, N + 1);
  q.at(0) = 1;
  q.at(1) = -(MarkerPoly(4) + MarkerPoly(2) * w);
  if (N + 1 >= 2) q.at(2) = MarkerPoly(4) * w + w * w;
  PowerSeries lin(Var::x, N + 1);
  lin.at(0) = 1;
  lin.at(1) = -w;
  return Rational(1, 2) * (lin - sqrt(q)).shift_down(1);
}

PowerSeries skew_red_fixed_power(int kred, int N) {
  if (kred < 0) throw DomainError("skew_red_fixed_power: kred must be >= 0");
  const Var x = Var::x;
  if (kred == 0)
    return Rational(1, 2) * (one(x, N + 1) - sqrt(poly(x, N + 1, {1, -4}))).shift_down(1);
  PowerSeries r = sqrt(poly(x, N, {1, -4}));
  switch (kred) {
    case 1: return (poly(x, N, {1, -2}) - r) / (MarkerPoly(2) * r);
    case 2: return poly(x, N, {0, 0, 0, 1}) / pow(r, 3);
    case 3: return poly(x, N, {0, 0, 0, 0, 1, -2}) / pow(r, 5);
    case 4: return poly(x, N, {0, 0, 0, 0, 0, 1, -4, 5}) / pow(r, 7);
    default: return skew_red_series(N).marker_coeff(Marker::w, static_cast<unsigned>(kred));
  }
}

PowerSeries skew_red_derivative(int N) {
  const Var x = Var::x;
  // differentiating S(0) gives (1-3x) here, not (1+3x)
  PowerSeries num = poly(x, N, {-1, 6, -5}) + poly(x, N, {1, -3}) * w_root(x, N);
  return num / (MarkerPoly(2) * poly(x, N, {1, -1}) * poly(x, N, {1, -5}));
}

Rational skew_red_average(int n) {
  if (n < 0) throw DomainError("skew_red_average: n must be >= 0");
  return skew_red_derivative(n).scalar(n) / Rational(skew_sj_coeff(2 * n, 0));
}

// ---- dual skew ------------------------------------------------------------

PowerSeries dual_skew_Gj_series(int j, int N) {
  if (j < 0) throw DomainError("dual_skew_Gj: j must be >= 0");
  const int nx = std::max(0, (N - j) / 2);
  const Var x = Var::x;
  PowerSeries s = Rational(1, 2) * (poly(x, nx + 1, {1, 1}) - w_root(x, nx + 1)).shift_down(1);
  PowerSeries g = (poly(x, nx, {-3, 3}) + w_root(x, nx)) / poly(x, nx, {-4, 2}) * pow(s, j + 1);
  return odd_lift(g, j, N);
}

Integer dual_skew_coeff(int n_half, int j) {
  if (j < 0 || n_half < 0) throw DomainError("dual_skew_coeff: arguments must be >= 0");
  if (n_half == 0) return Integer(1) << j;
  Rational s = 0;
  for (long k = 0; k <= n_half; ++k) {
    Rational mu = Rational(3 * binomial(j, k)) * pow2(j - k) -
                  Rational(7 * binomial(j + 1, k)) * pow2(j + 1 - k) +
                  Rational(5 * binomial(j + 2, k)) * pow2(j + 2 - k) -
                  Rational(binomial(j + 3, k)) * pow2(j + 3 - k);
    s += mu * Rational(trinomial(n_half - 1, Integer(3), n_half - k));
  }
  return to_integer(s, "dual_skew_coeff");
}

PowerSeries dual_open_ended(int N) {
  PowerSeries w = sqrt(poly(Var::z, N, {1, 0, -6, 0, 5}));
  return (poly(Var::z, N, {-3, 0, 3}) + w) / (poly(Var::z, N, {-1, 4, -1, -2}) - w);
}

// ---- Motzkin strip and amplitude --------------------------------------------

PowerSeries motzkin_det(int h, MotzkinVariant variant, int N) {
  if (h < -1) throw DomainError("motzkin_det: h must be >= -1");
  const PowerSeries z2 = poly(Var::z, N, {0, 0, 1});
  const PowerSeries step = poly(Var::z, N, {1, -1});
  // D_{-1} = 0, D_0 = 1
  std::vector<PowerSeries> d{PowerSeries(Var::z, N), one(Var::z, N)};
  for (int n = 1; n <= h; ++n) d.push_back(step * d[n] - z2 * d[n - 1]);
  auto D = [&](int n) { return d[static_cast<std::size_t>(n + 1)]; };
  if (variant == MotzkinVariant::all || h <= 0) return h < 0 ? PowerSeries(Var::z, N) : D(h);
  if (h == 1) return one(Var::z, N);
  return D(h - 1) - z2 * D(h - 2);
}

PowerSeries motzkin_bounded(int h, MotzkinVariant variant, int N) {
  if (h < 0) return PowerSeries(Var::z, N);
  return motzkin_det(h, variant, N) / motzkin_det(h + 1, variant, N);
}

PowerSeries amplitude_series(int h, AmplitudeKind kind, int N) {
  if (h < 0) throw DomainError("amplitude_series: h must be >= 0");
  const PowerSeries n_h = motzkin_bounded(h, MotzkinVariant::no_top_horizontal, N);
  if (kind == AmplitudeKind::horiz) return motzkin_bounded(h, MotzkinVariant::all, N) - n_h;
  return n_h - motzkin_bounded(h - 1, MotzkinVariant::all, N);
}

namespace {

// [z^n] (1+v+v^2)(1 - v^-2) v^b/(1 - v^b), from the row of (1+t+t^2)^n.
Integer amplitude_T(const std::vector<Integer>& row, long n, long b) {
  auto tri = [&](long k) -> Integer {
    if (k < 0 || k > 2 * n) return 0;
    return row[static_cast<std::size_t>(k)];
  };
  Integer s = 0;
  for (long k = 1; n + 2 - k * b >= 0; ++k)
    s += tri(n + 2 - k * b) - 2 * tri(n - k * b) + tri(n - 2 - k * b);
  return -s;
}

Integer amplitude_from_row(const std::vector<Integer>& row, long n, long h, AmplitudeKind kind) {
  if (kind == AmplitudeKind::horiz) return amplitude_T(row, n, 2 * h + 4) - amplitude_T(row, n, 2 * h + 3);
  return amplitude_T(row, n, 2 * h + 3) - amplitude_T(row, n, 2 * h + 2);
}

}  // namespace

Integer amplitude_coeff(int n, int h, AmplitudeKind kind) {
  if (n < 0 || h < 0) throw DomainError("amplitude_coeff: n, h must be >= 0");
  return amplitude_from_row(trinomial_row_recurrence(n, 1), n, h, kind);
}

Integer amplitude_total(int n) {
  if (n < 0) throw DomainError("amplitude_total: n must be >= 0");
  const auto row = trinomial_row_recurrence(n, 1);
  Integer s = 0;
  for (long h = 0; 2 * h <= n; ++h) {
    s += (2 * h + 1) * amplitude_from_row(row, n, h, AmplitudeKind::horiz);
    s += (2 * h) * amplitude_from_row(row, n, h, AmplitudeKind::no_horiz);
  }
  return s;
}

Rational amplitude_average(int n) {
  const auto row = trinomial_row_recurrence(n, 1);
  // Motzkin number: [t^n] - [t^(n+2)] of (1+t+t^2)^n
  Integer count = row[static_cast<std::size_t>(n)];
  if (n + 2 <= 2 * n) count -= row[static_cast<std::size_t>(n + 2)];
  return ratio(amplitude_total(n), count);
}

Rational amplitude_horiz_fraction(int n) {
  if (n < 0) throw DomainError("amplitude_horiz_fraction: n must be >= 0");
  const auto row = trinomial_row_recurrence(n, 1);
  Integer count = row[static_cast<std::size_t>(n)], horiz = 0;
  if (n + 2 <= 2 * n) count -= row[static_cast<std::size_t>(n + 2)];
  for (long h = 0; 2 * h <= n; ++h) horiz += amplitude_from_row(row, n, h, AmplitudeKind::horiz);
  return ratio(horiz, count);
}

// ---- Kemp -------------------------------------------------------------------

namespace {

// 3 sqrt(1 - 10w/9 + w^2/9) = sqrt((1-w)(9-w))
PowerSeries kemp_root(int M) {
  PowerSeries q(Var::w, M);
  q.at(0) = 1;
  if (M >= 1) q.at(1) = Rational(-10, 9);
  if (M >= 2) q.at(2) = Rational(1, 9);
  return MarkerPoly(3) * sqrt(q);
}

}  // namespace

PowerSeries kemp_valley_series(int M) {
  PowerSeries num = poly(Var::w, M, {-3, 2, 1}) + poly(Var::w, M, {1, 1}) * kemp_root(M);
  return num / poly(Var::w, M, {2, -4, 2});
}

PowerSeries kemp_peak_series(int M) {
  return poly(Var::w, M, {0, 1}) * kemp_root(M) / poly(Var::w, M, {1, -2, 1});
}

std::vector<Rational> kemp_finite_oracle(TurnKind kind, int max_m, int n) {
  if (max_m < 1 || n < 0) throw DomainError("kemp_finite_oracle: need m >= 1, n >= 0");
  const int len = 2 * n;
  std::vector<Integer> hits(static_cast<std::size_t>(max_m), 0), heights(hits);

  // state (turns seen c, last step: 0 down / 1 up / 2 none, level h)
  const int levels = n + 2;
  auto idx = [&](int c, int last, int h) {
    return (static_cast<std::size_t>(c) * 3 + static_cast<std::size_t>(last)) * levels + h;
  };
  std::vector<Integer> cur(static_cast<std::size_t>(max_m) * 3 * levels), nxt(cur.size());
  cur[idx(0, 2, 0)] = 1;

  std::vector<Integer> binom;  // C(L, a) for the current L
  for (int p = 0; p < len; ++p) {
    const int L = len - p - 1;  // steps left after this one
    binom.assign(static_cast<std::size_t>(L + 1), 0);
    binom[0] = 1;
    for (int a = 1; a <= L; ++a) {
      binom[a] = binom[a - 1] * (L - a + 1);
      mpz_divexact_ui(binom[a].get_mpz_t(), binom[a].get_mpz_t(), static_cast<unsigned long>(a));
    }
    // paths of length L from level g down to 0, never below 0
    auto completions = [&](int g) -> Integer {
      if (g > L || (L - g) % 2) return 0;
      const int a = (L - g) / 2;
      return a == 0 ? binom[0] : Integer(binom[a] - binom[a - 1]);
    };
    for (auto& x : nxt) x = 0;
    const int hmax = std::min(p, len - p);
    for (int c = 0; c < max_m; ++c)
      for (int last = 0; last < 3; ++last)
        for (int h = 0; h <= hmax && h < levels; ++h) {
          const Integer& ways = cur[idx(c, last, h)];
          if (ways == 0) continue;
          // up-step
          if (h + 1 <= L) {
            if (kind == TurnKind::valley && last == 0) {
              hits[c] += ways * completions(h + 1);
              heights[c] += ways * completions(h + 1) * h;
              if (c + 1 < max_m) nxt[idx(c + 1, 1, h + 1)] += ways;
            } else {
              nxt[idx(c, 1, h + 1)] += ways;
            }
          }
          // down-step
          if (h >= 1) {
            if (kind == TurnKind::peak && last == 1) {
              hits[c] += ways * completions(h - 1);
              heights[c] += ways * completions(h - 1) * h;
              if (c + 1 < max_m) nxt[idx(c + 1, 0, h - 1)] += ways;
            } else {
              nxt[idx(c, 0, h - 1)] += ways;
            }
          }
        }
    cur.swap(nxt);
  }
  std::vector<Rational> avg(static_cast<std::size_t>(max_m), 0);
  for (int m = 0; m < max_m; ++m)
    if (hits[m] != 0) avg[m] = ratio(heights[m], hits[m]);
  return avg;
}

// ---- Deutsch ----------------------------------------------------------------

PowerSeries deutsch_phi(int t, int j, int m, int N) {
  if (t < 0 || j < 0) throw DomainError("deutsch_phi: t, j must be >= 0");
  const bool bounded = m != kUnbounded;
  if (bounded && m <= std::max(t, j)) throw DomainError("deutsch_phi: strip height must exceed t and j");
  const PowerSeries v = quadratic_v(1, N);
  const PowerSeries o = one(Var::z, N);
  const PowerSeries phi = o + v + v * v;
  PowerSeries r;
  if (j < t) {
    r = spow(o + v, t - j - 2) * (o - vpow(v, j + 1)) * v * phi / (o - v);
    if (bounded) r = r * (o - vpow(v, m - t)) / (o - vpow(v, m + 2));
  } else {
    r = vpow(v, j - t) * (o - vpow(v, t + 2)) * phi / ((o - v) * pow(o + v, j - t + 2));
    if (bounded) r = r * (o - vpow(v, 1 - j + m)) / (o - vpow(v, m + 2));
  }
  return r;
}

namespace {

// Gaussian elimination on the band system; pivots stay = 1 mod z.
struct BandSolve {
  std::vector<std::vector<PowerSeries>> a;
  PowerSeries det;

  BandSolve(int m, int N, int rhs_row) {
    const PowerSeries mz = poly(Var::z, N, {0, -1});
    a.assign(m, std::vector<PowerSeries>(m + 1, PowerSeries(Var::z, N)));
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < m; ++k)
        if (k == i)
          a[i][k] = one(Var::z, N);
        else if (k == i - 1 || k > i)
          a[i][k] = mz;
      if (i == rhs_row) a[i][m] = one(Var::z, N);
    }
    det = one(Var::z, N);
    for (int c = 0; c < m; ++c) {
      det = det * a[c][c];
      for (int r = c + 1; r < m; ++r) {
        if (a[r][c] == PowerSeries(Var::z, N)) continue;
        PowerSeries f = a[r][c] / a[c][c];
        for (int k = c; k <= m; ++k) a[r][k] -= f * a[c][k];
      }
    }
  }

  PowerSeries solution(int j) const {
    const int m = static_cast<int>(a.size());
    std::vector<PowerSeries> x(m);
    for (int i = m - 1; i >= 0; --i) {
      PowerSeries s = a[i][m];
      for (int k = i + 1; k < m; ++k) s -= a[i][k] * x[k];
      x[i] = s / a[i][i];
    }
    return x[j];
  }
};

}  // namespace

PowerSeries deutsch_phi_band(int t, int j, int m, int N) {
  if (t < 0 || j < 0 || m <= std::max(t, j)) throw DomainError("deutsch_phi_band: need 0 <= t, j < m");
  return BandSolve(m, N, t).solution(j);
}

PowerSeries deutsch_det(int m, int N) {
  if (m < 0) throw DomainError("deutsch_det: m must be >= 0");
  const PowerSeries v = quadratic_v(1, N);
  const PowerSeries o = one(Var::z, N);
  return spow(o + v, m - 1) / pow(o + v + v * v, m) * (o - vpow(v, m + 2)) / (o - v);
}

PowerSeries deutsch_det_band(int m, int N) {
  if (m < 0) throw DomainError("deutsch_det_band: m must be >= 0");
  if (m == 0) return one(Var::z, N);
  return BandSolve(m, N, 0).det;
}

}  // namespace lpg
