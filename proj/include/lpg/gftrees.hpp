#pragma once

#include "lpg/series.hpp"

namespace lpg {

// ---- Horton-Strahler numbers of unary-binary trees (a unary colours) ----------

// Trees with reg = p, from z = v/(1+(a+2)v+v^2).
PowerSeries horton_Rp(int p, int a, int N);
// Trees with reg >= p.
PowerSeries horton_Sp(int p, int a, int N);
// R_p from R_p = z R_{p-1}^2 + 2z R_p sum_{j<p} R_j + a z R_p.
PowerSeries horton_Rp_recursive(int p, int a, int N);

Integer unary_binary_count(int n, int a);
// Sum of reg over all trees with n internal nodes.
Integer horton_reg_total(int n, int a);
Rational horton_average(int n, int a);

// ---- marked ordered trees ------------------------------------------------

// F(z,u), u marking leaves.
PowerSeries marked_leaf_series(int N);
// d/du F at u = 1.
PowerSeries marked_leaf_total(int N);
// F(z,1) = z(1+v).
PowerSeries marked_count_series(int N);
Rational marked_leaf_average(int n);
// Trees of height <= h (height in nodes), closed form and recursion.
PowerSeries marked_height_ph(int h, int N);
PowerSeries marked_height_recursive(int h, int N);

// ---- ternary trees by middle edges -----------------------------------------

// Trees with n nodes and k middle edges.
Integer ternary_T(int n, int k);
// t(x) from x = t(1-t)^2/(1-t+ut), marker u.
PowerSeries ternary_t_series(int N);
// G(x,u) = r1 = 1/(1-t).
PowerSeries ternary_r1_series(int N);
// (1/r2)(1/r3) as a series in t; r2, r3 alone carry sqrt(t).
PowerSeries ternary_inverse_root_product(int N);
// Xi in tau = t/u (series variable t), marker U = u - 1.
PowerSeries ternary_xi_series(int N);
// r1 u x r2 r3 = -1 and r1 = Xi^2 - t^2/(4ux), both to order N in t.
bool ternary_factorization_check(int N);

// ---- Retakh trees ------------------------------------------------------------

// Trees of height <= 2k in the odd/even system.
PowerSeries retakh_Gk(int k, int N);
PowerSeries retakh_Gk_recursive(int k, int N);
// F = zG/(1-G) for the full system, = z^2 M(z).
PowerSeries retakh_F(int N);
// zM(z) = v: Retakh trees by nodes.
PowerSeries retakh_full(int N);
// Total leaves of Retakh trees by nodes.
PowerSeries retakh_leaf_series(int N);
Rational retakh_leaf_average(int n);

}  // namespace lpg
