#include <doctest.h>

#include <map>

#include "lpg/errors.hpp"
#include "lpg/gfpaths.hpp"
#include "lpg/numkernel.hpp"
#include "lpg/paths.hpp"

using namespace lpg;

namespace {

PowerSeries poly(std::initializer_list<long> c, int order, Var v = Var::z) {
  return PowerSeries::polynomial(v, order, c);
}

std::vector<Integer> ints(std::initializer_list<long> c) { return {c.begin(), c.end()}; }

// coefficients at n = first, first+step, ...
std::vector<Integer> pick(const PowerSeries& s, int first, int step, int count) {
  std::vector<Integer> r;
  for (int i = 0; i < count; ++i) r.push_back(s.integer(first + i * step));
  return r;
}

PowerSeries zero(int N, Var v = Var::z) { return PowerSeries(v, N); }

}  // namespace

// ---- k-Dyck ----------------------------------------------------------------

TEST_CASE("ubar: Catalan, closed coefficients, functional equation") {
  CHECK(pick(ubar(1, 6), 0, 1, 5) == ints({1, 1, 2, 5, 14}));
  CHECK(ubar_coeff(2, 0) == 1);
  CHECK(ubar_coeff(2, 2) == 3);
  const int N = 14;
  PowerSeries z = PowerSeries::identity(Var::z, N);
  for (int k = 1; k <= 4; ++k) {
    PowerSeries u = ubar(k, N);
    CHECK(u == MarkerPoly(1) + z * pow(u, k + 1));
    for (int d = 1; d <= 4; ++d) CHECK(ubar_power(d, k, N) == pow(u, d));
  }
  CHECK(ubar_power_coeff(2, 2, 1) == 2);
  CHECK(ubar_power_coeff(3, 1, 1) == 3);
}

TEST_CASE("denom_Sj: values and recursion") {
  for (int k = 1; k <= 3; ++k)
    for (int j = 0; j <= k; ++j) CHECK(denom_Sj(j, k) == poly({1}, 0));
  CHECK(denom_Sj(2, 1) == poly({1, -1}, 1));
  // the sum gives 1 - z here; the recursion agrees
  CHECK(denom_Sj(3, 2) == poly({1, -1}, 1));
  const int N = 12;
  for (int k = 1; k <= 3; ++k)
    for (int j = k + 1; j <= 20; ++j) {
      PowerSeries lhs = denom_Sj(j, k).pad(N) - denom_Sj(j - 1, k).pad(N) +
                        PowerSeries::identity(Var::z, N) * denom_Sj(j - k - 1, k).pad(N);
      CHECK(lhs == zero(N));
    }
}

TEST_CASE("deng_mansour_count against brute force and the series identity") {
  CHECK(deng_mansour_count(1, 2, 2) == 1);
  CHECK(deng_mansour_count(2, 3, 2) == 1);
  CHECK(deng_mansour_count(3, 2, 2) == 3);
  CHECK(deng_mansour_count(3, 1, 2) == 0);
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 6; ++n)
      for (int j = 0; j <= k * n; ++j) CHECK(deng_mansour_count(n, j, k) == count_kdyck(k, n, j, 0, true));
  // [z^(n-1) u^(j-k)] (u - u)/(1 - u + z u^(k+1)) = u S_j - S_(j-1)
  const int N = 10;
  for (int k = 1; k <= 3; ++k) {
    PowerSeries u = ubar(k, N);
    for (int jj = 0; jj <= 12; ++jj) {
      PowerSeries c = u * denom_Sj(jj, k).pad(N) - denom_Sj(jj - 1, k).pad(N);
      for (int n = 1; n <= N + 1; ++n) CHECK(c.integer(n - 1) == deng_mansour_count(n, jj + k, k));
    }
  }
}

TEST_CASE("last_downrun_total against brute force") {
  CHECK(last_downrun_total(1, 2) == 2);
  CHECK(last_downrun_total(2, 2) == 9);
  CHECK(last_downrun_total(1, 3) == 3);
  for (int k = 1; k <= 3; ++k)
    for (int m = 1; m <= 6; ++m) {
      Integer s = 0;
      for (int j = 0; j <= k * m; ++j)
        for (const auto& p : gen_kdyck(k, m, j, 0, true)) s += p.end_level();
      CHECK(last_downrun_total(m, k) == s);
    }
}

TEST_CASE("hoppy_early_total against brute force with m+1 up-steps") {
  CHECK(hoppy_early_total(1, 2) == 3);
  CHECK(hoppy_early_total(2, 2) == 10);
  CHECK(hoppy_early_total(2, 1) == 2);
  for (int k = 1; k <= 3; ++k)
    for (int m = 1; m <= 5; ++m) {
      Integer s = 0;
      for (const auto& p : gen_kdyck(k, m + 1, 0, 0, false)) {
        std::size_t i = 1;
        while (i < p.steps.size() && p.steps[i].kind == StepKind::down) ++i;
        s += static_cast<long>(i - 1);
      }
      CHECK(hoppy_early_total(m, k) == s);
    }
}

TEST_CASE("hoppy_negative_series: known values and brute force") {
  CHECK(pick(hoppy_negative_series(2, 6), 1, 1, 5) == ints({3, 16, 83, 442, 2420}));
  CHECK(pick(hoppy_negative_series(3, 6), 1, 1, 5) == ints({5, 34, 236, 1714, 12922}));
  CHECK(pick(hoppy_negative_series(4, 6), 1, 1, 5) == ints({7, 58, 505, 4650, 44677}));
  for (int k = 1; k <= 4; ++k) {
    PowerSeries s = hoppy_negative_series(k, 6);
    CHECK(s.integer(0) == 0);
    for (int n = 1; n <= (k <= 2 ? 6 : 4); ++n) {
      Integer tot = 0;
      for (int j = -1; j <= k * n; ++j)
        for (const auto& p : gen_kdyck(k, n, j, -1, true)) tot += p.end_level();
      CHECK(s.integer(n) == tot);
    }
  }
}

// ---- skew -------------------------------------------------------------------

TEST_CASE("skew s_j: known series, trinomial route, brute force") {
  const int N = 16;
  CHECK(pick(skew_sj_series(0, N), 0, 2, 7) == ints({1, 1, 3, 10, 36, 137, 543}));
  CHECK(pick(skew_sj_series(1, N), 1, 2, 7) == ints({1, 2, 6, 21, 79, 311, 1265}));
  CHECK(pick(skew_sj_series(2, N), 2, 2, 7) == ints({1, 3, 10, 37, 145, 589, 2455}));
  CHECK(pick(skew_sj_series(3, N), 3, 2, 7) == ints({1, 4, 15, 59, 241, 1010, 4314}));
  for (int j = 0; j <= 6; ++j) {
    PowerSeries s = skew_sj_series(j, N);
    for (int n = 0; n <= N; ++n) {
      CHECK(s.integer(n) == skew_sj_coeff(n, j));
      if (n <= 14) CHECK(s.integer(n) == count_skew(n, j));
    }
  }
}

TEST_CASE("skew open-ended series") {
  PowerSeries s = skew_open_ended(14);
  CHECK(pick(s, 0, 1, 11) == ints({1, 1, 2, 3, 7, 11, 26, 43, 102, 175, 416}));
  for (int n = 0; n <= 12; ++n) {
    Integer tot = 0;
    for (int j = 0; j <= n; ++j) tot += count_skew(n, j);
    CHECK(s.integer(n) == tot);
  }
}

TEST_CASE("skew red-step series") {
  PowerSeries s = skew_red_series(8);
  CHECK(s[2].str() == "w+2");
  CHECK(s[3].str() == "w^2+4*w+5");
  CHECK(s[4].str() == "w^3+6*w^2+15*w+14");
  CHECK(s.marker_eval(Marker::w, 1).integer(2) == 3);
  for (int k = 0; k <= 6; ++k) CHECK(skew_red_fixed_power(k, 8) == s.marker_coeff(Marker::w, k));
  CHECK(pick(skew_red_fixed_power(0, 6), 0, 1, 5) == ints({1, 1, 2, 5, 14}));
  CHECK(pick(skew_red_fixed_power(2, 6), 3, 1, 2) == ints({1, 6}));
  CHECK(skew_red_fixed_power(1, 6).integer(3) == 4);
  PowerSeries d = skew_red_derivative(8);
  CHECK(d == s.marker_derivative(Marker::w).marker_eval(Marker::w, 1));
  // a (1+3x) numerator is not the derivative
  PowerSeries wr = lpg::sqrt(poly({1, -6, 5}, 8, Var::x));
  PowerSeries plus3 = (poly({-1, 6, -5}, 8, Var::x) + poly({1, 3}, 8, Var::x) * wr) /
                        (poly({2, -2}, 8, Var::x) * poly({1, -5}, 8, Var::x));
  CHECK_FALSE(plus3 == d);
  CHECK(d.integer(3) == 6);
  // red steps over closed paths of 2n steps
  for (int n = 0; n <= 6; ++n) {
    Integer red = 0;
    for (const auto& p : gen_skew(2 * n, 0)) red += path_stats(p).red_count;
    CHECK(d.integer(n) == red);
    if (n >= 1) CHECK(skew_red_average(n) == ratio(red, static_cast<long>(gen_skew(2 * n, 0).size())));
  }
  CHECK(skew_red_average(3) == ratio(6, 10));
}

TEST_CASE("kernel roots and W factorizations") {
  const int N = 20;
  PowerSeries w = lpg::sqrt(poly({1, 0, -6, 0, 5}, N));
  PowerSeries a = poly({1, 0, 1}, N) + w, b = poly({1, 0, 1}, N) - w;
  // r1 r2 = 2 - z^2 with r = (1 + z^2 +- W)/(2z)
  CHECK((Rational(1, 4) * (a * b)).shift_down(2) == poly({2, 0, -1}, N - 2));
  // s1 s2 = 1/(2 - z^2) with s = r/(2 - z^2)
  PowerSeries two = poly({2, 0, -1}, N - 2);
  CHECK((Rational(1, 4) * (a * b)).shift_down(2) / (two * two) == poly({1}, N - 2) / two);
  CHECK(poly({1, 0, -1}, 8) * poly({1, 0, -5}, 8) == poly({1, 0, -6, 0, 5}, 8));
  MarkerPoly wm = MarkerPoly::monomial(Marker::w);
  PowerSeries f1(Var::z, 8), f2(Var::z, 8), lhs(Var::z, 8);
  f1.at(0) = 1;
  f1.at(2) = -wm;
  f2.at(0) = 1;
  f2.at(2) = -(MarkerPoly(4) + wm);
  lhs.at(0) = 1;
  lhs.at(2) = -(MarkerPoly(4) + MarkerPoly(2) * wm);
  lhs.at(4) = MarkerPoly(4) * wm + wm * wm;
  CHECK(f1 * f2 == lhs);
}

// ---- dual skew ----------------------------------------------------------------

TEST_CASE("dual skew G_j: known series, trinomial route, brute force") {
  const int N = 18;
  CHECK(pick(dual_skew_Gj_series(0, N), 0, 2, 8) == ints({1, 1, 3, 10, 36, 137, 543, 2219}));
  CHECK(pick(dual_skew_Gj_series(2, N), 2, 2, 8) == ints({4, 8, 29, 111, 442, 1813, 7609, 32521}));
  CHECK(pick(dual_skew_Gj_series(3, N), 3, 2, 8) == ints({8, 20, 78, 315, 1306, 5527, 23779, 103699}));
  for (int j = 0; j <= 6; ++j) {
    PowerSeries g = dual_skew_Gj_series(j, N);
    for (int n = 0; n <= N; ++n) {
      if ((n - j) % 2 == 0 && n >= j) CHECK(g.integer(n) == dual_skew_coeff((n - j) / 2, j));
      else CHECK(g.integer(n) == 0);
      if (n <= 14) CHECK(g.integer(n) == count_dual_skew(n, j));
    }
  }
}

TEST_CASE("dual open-ended series") {
  PowerSeries g = dual_open_ended(12);
  CHECK(pick(g, 0, 1, 10) == ints({1, 2, 5, 11, 27, 62, 151, 354, 859, 2036}));
  for (int n = 0; n <= 12; ++n) {
    Integer tot = 0;
    for (int j = 0; j <= n; ++j) tot += count_dual_skew(n, j);
    CHECK(g.integer(n) == tot);
  }
}

// ---- Motzkin strip, amplitude --------------------------------------------------

TEST_CASE("bounded Motzkin series") {
  const int N = 14;
  CHECK(motzkin_det(0, MotzkinVariant::all, N) == poly({1}, N));
  CHECK(motzkin_det(1, MotzkinVariant::all, N) == poly({1, -1}, N));
  // D_1 = (1+v^2)/(1+v+v^2)
  PowerSeries v = quadratic_v(1, N);
  CHECK((poly({1}, N) + v * v) / (poly({1}, N) + v + v * v) == poly({1, -1}, N));
  CHECK(motzkin_bounded(0, MotzkinVariant::all, N) == poly({1}, N) / poly({1, -1}, N));
  for (int h = 0; h <= 5; ++h) {
    PowerSeries m = motzkin_bounded(h, MotzkinVariant::all, N);
    PowerSeries nn = motzkin_bounded(h, MotzkinVariant::no_top_horizontal, N);
    for (int n = 0; n <= 12; ++n) {
      CHECK(m.integer(n) == count_motzkin(n, 1, h));
      long no_top = 0;
      for (const auto& p : gen_motzkin(n, 1, h)) {
        int lvl = 0;
        bool top = false;
        for (const auto& s : p.steps) {
          if (s.kind == StepKind::horizontal && lvl == h) top = true;
          lvl += s.kind == StepKind::up ? 1 : s.kind == StepKind::down ? -1 : 0;
        }
        if (!top) ++no_top;
      }
      CHECK(nn.integer(n) == no_top);
    }
  }
}

TEST_CASE("amplitude: table, decomposition, trinomial extraction, brute force") {
  CHECK(amplitude_coeff(4, 0, AmplitudeKind::horiz) == 1);
  CHECK(amplitude_coeff(4, 1, AmplitudeKind::no_horiz) == 4);
  CHECK(amplitude_coeff(4, 1, AmplitudeKind::horiz) == 3);
  CHECK(amplitude_coeff(4, 2, AmplitudeKind::no_horiz) == 1);
  CHECK(amplitude_coeff(0, 0, AmplitudeKind::no_horiz) == 1);
  CHECK(amplitude_coeff(0, 0, AmplitudeKind::horiz) == 0);
  const int N = 20;
  for (int h = 0; h <= 6; ++h) {
    PowerSeries sum = amplitude_series(h, AmplitudeKind::horiz, N) + amplitude_series(h, AmplitudeKind::no_horiz, N);
    PowerSeries exact = motzkin_bounded(h, MotzkinVariant::all, N) - motzkin_bounded(h - 1, MotzkinVariant::all, N);
    CHECK(sum == exact);
  }
  for (int n = 0; n <= 12; ++n) {
    std::map<int, long> by_amp;
    long total = 0;
    for (const auto& p : gen_motzkin(n, 1)) {
      int a = path_stats(p).amplitude;
      ++by_amp[a];
      total += a;
    }
    for (int h = 0; 2 * h <= n; ++h) {
      Integer hz = amplitude_coeff(n, h, AmplitudeKind::horiz);
      Integer nh = amplitude_coeff(n, h, AmplitudeKind::no_horiz);
      CHECK(hz == amplitude_series(h, AmplitudeKind::horiz, 12).integer(n));
      CHECK(nh == amplitude_series(h, AmplitudeKind::no_horiz, 12).integer(n));
      CHECK(hz == by_amp[2 * h + 1]);
      CHECK(nh == by_amp[2 * h]);
    }
    CHECK(amplitude_total(n) == total);
    long odd = 0, all = 0;
    for (auto [a, c] : by_amp) {
      all += c;
      if (a % 2 == 1) odd += c;
    }
    CHECK(amplitude_horiz_fraction(n) == ratio(odd, all));
  }
  CHECK(amplitude_average(4) == Rational(22, 9));
}

// ---- Kemp --------------------------------------------------------------------

TEST_CASE("Kemp series: first coefficients") {
  PowerSeries v = kemp_valley_series(10), p = kemp_peak_series(10);
  CHECK(v.scalar(0) == 0);
  CHECK(p.scalar(0) == 0);
  CHECK(p.scalar(1) == 3);
  CHECK(v.scalar(1) == Rational(5, 3));
}

TEST_CASE("Kemp finite oracle against enumeration") {
  CHECK(kemp_finite_oracle(TurnKind::valley, 1, 2)[0] == 0);
  CHECK(kemp_finite_oracle(TurnKind::peak, 1, 1)[0] == 1);
  for (int n = 1; n <= 9; ++n) {
    std::vector<Integer> vh(4), vc(4), ph(4), pc(4);
    for (const auto& path : gen_kdyck(1, n, 0, 0, false)) {
      PathStats st = path_stats(path);
      for (std::size_t m = 0; m < 4; ++m) {
        if (m < st.valley_heights.size()) vh[m] += st.valley_heights[m], vc[m] += 1;
        if (m < st.peak_heights.size()) ph[m] += st.peak_heights[m], pc[m] += 1;
      }
    }
    auto va = kemp_finite_oracle(TurnKind::valley, 4, n);
    auto pa = kemp_finite_oracle(TurnKind::peak, 4, n);
    for (std::size_t m = 0; m < 4; ++m) {
      CHECK(va[m] == (vc[m] == 0 ? Rational(0) : ratio(vh[m], vc[m])));
      CHECK(pa[m] == (pc[m] == 0 ? Rational(0) : ratio(ph[m], pc[m])));
    }
  }
}

// ---- Deutsch -----------------------------------------------------------------

TEST_CASE("Deutsch strips: closed forms, band solve, brute force") {
  const int N = 16;
  CHECK(deutsch_det(0, N) == poly({1}, N));
  for (int m = 0; m <= 8; ++m) CHECK(deutsch_det(m, N) == deutsch_det_band(m, N));
  for (int m = 1; m <= 8; ++m)
    for (int t = 0; t < m; ++t)
      for (int j = 0; j < m; ++j) {
        PowerSeries phi = deutsch_phi(t, j, m, N);
        CHECK(phi == deutsch_phi_band(t, j, m, N));
        if (m <= 6)
          for (int n = 0; n <= 12; ++n) CHECK(phi.integer(n) == count_deutsch(n, t, 0, m - 1, j));
      }
  CHECK_THROWS_AS(deutsch_phi(3, 1, 3, N), DomainError);
}

TEST_CASE("Deutsch unbounded forms") {
  const int N = 12;
  CHECK(pick(deutsch_phi(0, 0, kUnbounded, N), 0, 1, 4) == ints({1, 0, 1, 1}));
  PowerSeries v = quadratic_v(1, N);
  PowerSeries o = poly({1}, N), phi = o + v + v * v;
  for (int j = 0; j <= 4; ++j)
    CHECK(deutsch_phi(0, j, kUnbounded, N) == phi * pow(v, j) / pow(o + v, j + 1));
  CHECK(deutsch_phi(1, 0, kUnbounded, N) == v * phi / (o + v));
  for (int t = 2; t <= 4; ++t) CHECK(deutsch_phi(t, 0, kUnbounded, N) == v * phi * pow(o + v, t - 2));
  for (int t = 0; t <= 4; ++t)
    for (int j = 0; j <= 4; ++j) {
      PowerSeries phi_tj = deutsch_phi(t, j, kUnbounded, N);
      for (int n = 0; n <= 10; ++n) CHECK(phi_tj.integer(n) == count_deutsch(n, t, 0, kUnbounded, j));
    }
}
