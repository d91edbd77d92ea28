#pragma once

#include <vector>

#include "lpg/markerpoly.hpp"

namespace lpg {

// C(n,k) with C(n,k) = 0 for k < 0 and the negative-upper convention
// C(n,k) = (-1)^k C(k-n-1,k) for n < 0.
Integer binomial(long n, long k);
// num/den in lowest terms (mpq_class(num, den) does not canonicalize).
Rational ratio(const Integer& num, const Integer& den);

// [t^k](1 + a t + t^2)^n.
MarkerPoly trinomial(long n, const MarkerPoly& a, long k);
Integer trinomial(long n, const Integer& a, long k);

// Whole row [t^0..t^2n](1 + a t + t^2)^n, built by repeated multiplication
// with (1 + a t + t^2). The parallel version splits each pass over k.
std::vector<Integer> trinomial_row(long n, const Integer& a);
std::vector<Integer> trinomial_row_serial(long n, const Integer& a);
// Same row from the three-term recurrence in k; O(n) big-number operations.
std::vector<Integer> trinomial_row_recurrence(long n, const Integer& a);

Integer divisor_count(long h);

// Highest power of 2 dividing j (j >= 1).
int v2(unsigned long j);

}  // namespace lpg
