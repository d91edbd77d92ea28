#pragma once

#include <vector>

#include "lpg/paths.hpp"
#include "lpg/series.hpp"

namespace lpg {

// ---- k-Dyck paths ----------------------------------------------------------

// Fuss-Catalan series u = 1 + z u^(k+1).
PowerSeries ubar(int k, int N);
Integer ubar_coeff(int k, long l);
// u^d, coefficient C(d-1+(k+1)l, l) d/(kl+d).
PowerSeries ubar_power(int d, int k, int N);
Integer ubar_power_coeff(int d, int k, long l);

// S_j = [u^j] 1/(1 - u + z u^(k+1)) as an exact polynomial in z (order = degree);
// S_j = 0 for j < 0.
PowerSeries denom_Sj(int j, int k);

// Paths with n_up up-steps ending at level j, last step up.
Integer deng_mansour_count(int n_up, int j, int k);
// Sum of end levels over paths with m up-steps ending on an up-step.
Integer last_downrun_total(int m, int k);
// k/(m+1) C((k+1)m, m).
Integer hoppy_early_total(int m, int k);
// u^2/z - 2u^2 - 1/z.
PowerSeries hoppy_negative_series(int k, int N);

// ---- skew and dual skew ----------------------------------------------------

// [u^j] of the decorated path series, in z; only n = j mod 2 survive.
PowerSeries skew_sj_series(int j, int N);
// Same coefficient through the trinomial extraction.
Integer skew_sj_coeff(int n, int j);
PowerSeries skew_open_ended(int N);
// S(0) in x = z^2 with w marking red steps.
PowerSeries skew_red_series(int N);
// [w^kred] S(0); closed forms for kred <= 4.
PowerSeries skew_red_fixed_power(int kred, int N);
// d/dw S(0) at w = 1.
PowerSeries skew_red_derivative(int N);
// Average number of red steps over skew paths of length 2n.
Rational skew_red_average(int n);

PowerSeries dual_skew_Gj_series(int j, int N);
// [z^(2 n_half + j)] G_j through the trinomial extraction.
Integer dual_skew_coeff(int n_half, int j);
PowerSeries dual_open_ended(int N);

// ---- Motzkin paths in a strip, amplitude ------------------------------------

enum class MotzkinVariant { all, no_top_horizontal };
enum class AmplitudeKind { horiz, no_horiz };

// D_h resp. D*_h as polynomials in z.
PowerSeries motzkin_det(int h, MotzkinVariant variant, int N);
// M^{<=h} or N^{<=h}; h = -1 gives 0.
PowerSeries motzkin_bounded(int h, MotzkinVariant variant, int N);
PowerSeries amplitude_series(int h, AmplitudeKind kind, int N);
Integer amplitude_coeff(int n, int h, AmplitudeKind kind);
// Sum of amplitudes over all Motzkin paths of length n.
Integer amplitude_total(int n);
Rational amplitude_average(int n);
// Share of length-n Motzkin paths whose amplitude is attained by a horizontal step.
Rational amplitude_horiz_fraction(int n);

// ---- Kemp: heights of the m-th valley / peak ------------------------------

PowerSeries kemp_valley_series(int M);
PowerSeries kemp_peak_series(int M);

enum class TurnKind { valley, peak };
// Exact average height of the m-th turn over Dyck paths of length 2n having at
// least m such turns, for m = 1..max_m (index m-1). Entries with no such paths are 0.
std::vector<Rational> kemp_finite_oracle(TurnKind kind, int max_m, int n);

// ---- Deutsch paths in a strip ---------------------------------------------

// Start level t, end level j, floor 0, ceiling m-1 (m = kUnbounded: no ceiling).
PowerSeries deutsch_phi(int t, int j, int m, int N);
// Same quantity by exact elimination on the m x m band system.
PowerSeries deutsch_phi_band(int t, int j, int m, int N);
// Determinant of the m x m band matrix: closed form, and by elimination.
PowerSeries deutsch_det(int m, int N);
PowerSeries deutsch_det_band(int m, int N);

}  // namespace lpg
