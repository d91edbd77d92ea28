#pragma once

// Small helpers shared by the generating-function modules.

#include <initializer_list>
#include <string>

#include "lpg/errors.hpp"
#include "lpg/series.hpp"

namespace lpg::detail {

inline PowerSeries poly(Var var, int order, std::initializer_list<long> c) {
  return PowerSeries::polynomial(var, order, c);
}

inline PowerSeries one(Var var, int order) { return PowerSeries::constant(var, order, 1); }

inline Integer exact_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// X^e of a series without constant term; zero once e exceeds the order.
inline PowerSeries vpow(const PowerSeries& v, long e) {
  if (e > v.order()) return PowerSeries(v.var(), v.order());
  return pow(v, static_cast<unsigned>(e));
}

// f^e for any integer e.
inline PowerSeries spow(const PowerSeries& f, long e) {
  if (e >= 0) return pow(f, static_cast<unsigned>(e));
  return reciprocal(pow(f, static_cast<unsigned>(-e)));
}

}  // namespace lpg::detail
