#include "lpg/numkernel.hpp"

#include "lpg/errors.hpp"

namespace lpg {

Integer binomial(long n, long k) {
  if (k < 0) return 0;
  Integer r;
  if (n >= 0) {
    if (k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
  }
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
  return (k % 2) ? Integer(-r) : r;
}

MarkerPoly trinomial(long n, const MarkerPoly& a, long k) {
  if (n < 0) throw DomainError("trinomial: n must be non-negative");
  if (k < 0 || k > 2 * n) return MarkerPoly();
  // (1 + a t + t^2)^n = sum_{i+j+l=n} n!/(i!j!l!) a^j t^{j+2l}
  MarkerPoly r;
  for (long l = 0; 2 * l <= k; ++l) {
    long j = k - 2 * l;
    long i = n - j - l;
    if (i < 0) continue;
    Integer multi = binomial(n, l) * binomial(n - l, j);
    r += a.pow(static_cast<unsigned>(j)) * MarkerPoly(multi);
  }
  return r;
}

Integer trinomial(long n, const Integer& a, long k) {
  if (n < 0) throw DomainError("trinomial: n must be non-negative");
  if (k < 0 || k > 2 * n) return 0;
  Integer r = 0;
  Integer ap;
  for (long l = 0; 2 * l <= k; ++l) {
    long j = k - 2 * l;
    if (n - j - l < 0) continue;
    mpz_pow_ui(ap.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(j));
    r += binomial(n, l) * binomial(n - l, j) * ap;
  }
  return r;
}

namespace {

void row_step(const std::vector<Integer>& prev, std::vector<Integer>& next, const Integer& a,
              bool parallel) {
  const long len = static_cast<long>(next.size());
  const long plen = static_cast<long>(prev.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (long k = 0; k < len; ++k) {
    Integer s = 0;
    if (k < plen) s += prev[k];
    if (k - 1 >= 0 && k - 1 < plen) s += a * prev[k - 1];
    if (k - 2 >= 0 && k - 2 < plen) s += prev[k - 2];
    next[k] = std::move(s);
  }
}

std::vector<Integer> row_impl(long n, const Integer& a, bool parallel) {
  if (n < 0) throw DomainError("trinomial_row: n must be non-negative");
  std::vector<Integer> row{1};
  for (long i = 1; i <= n; ++i) {
    std::vector<Integer> next(static_cast<std::size_t>(2 * i + 1));
    row_step(row, next, a, parallel);
    row.swap(next);
  }
  return row;
}

}  // namespace

std::vector<Integer> trinomial_row(long n, const Integer& a) { return row_impl(n, a, true); }
std::vector<Integer> trinomial_row_serial(long n, const Integer& a) {
  return row_impl(n, a, false);
}

std::vector<Integer> trinomial_row_recurrence(long n, const Integer& a) {
  if (n < 0) throw DomainError("trinomial_row: n must be non-negative");
  // from f'(1 + a t + t^2) = n (a + 2t) f
  std::vector<Integer> c(static_cast<std::size_t>(2 * n + 1));
  c[0] = 1;
  for (long k = 0; k < 2 * n; ++k) {
    Integer next = (n - k) * a * c[k];
    if (k > 0) next += (2 * n - k + 1) * c[k - 1];
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(k + 1));
    c[k + 1] = next;
  }
  return c;
}

Integer divisor_count(long h) {
  if (h < 1) throw DomainError("divisor_count: h must be >= 1");
  long c = 0;
  for (long d = 1; d * d <= h; ++d) {
    if (h % d) continue;
    c += (d * d == h) ? 1 : 2;
  }
  return c;
}

int v2(unsigned long j) {
  int e = 0;
  while (j && !(j & 1ul)) {
    j >>= 1;
    ++e;
  }
  return e;
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("ratio: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace lpg
