#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lpg {

using Integer = mpz_class;
using Rational = mpq_class;

// Marker variables that may appear inside series coefficients.
enum class Marker : int { u = 0, w = 1, U = 2 };
inline constexpr int kMarkers = 3;

using Exponents = std::array<std::uint16_t, kMarkers>;

// Multivariate polynomial in the markers with exact rational coefficients.
// Terms are kept sorted by exponent vector and never hold a zero coefficient.
class MarkerPoly {
 public:
  struct Term {
    Exponents exps{};
    Rational coef;
  };

  MarkerPoly() = default;
  MarkerPoly(long c);  // NOLINT: implicit on purpose, scalars mix freely
  MarkerPoly(const Integer& c);
  MarkerPoly(const Rational& c);

  static MarkerPoly monomial(Marker m, unsigned power = 1, const Rational& c = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant part (coefficient of the empty monomial).
  Rational constant() const;
  const std::vector<Term>& terms() const { return terms_; }
  int degree(Marker m) const;
  int total_degree() const;

  // Coefficient of m^k, as a polynomial in the remaining markers.
  MarkerPoly coeff(Marker m, unsigned k) const;
  MarkerPoly eval(Marker m, const Rational& value) const;
  MarkerPoly subst(Marker m, const MarkerPoly& value) const;
  MarkerPoly derivative(Marker m) const;

  MarkerPoly& operator+=(const MarkerPoly& o);
  MarkerPoly& operator-=(const MarkerPoly& o);
  MarkerPoly& operator*=(const MarkerPoly& o);
  MarkerPoly& operator*=(const Rational& c);
  MarkerPoly operator-() const;

  friend MarkerPoly operator+(MarkerPoly a, const MarkerPoly& b) { return a += b; }
  friend MarkerPoly operator-(MarkerPoly a, const MarkerPoly& b) { return a -= b; }
  friend MarkerPoly operator*(const MarkerPoly& a, const MarkerPoly& b);
  friend bool operator==(const MarkerPoly& a, const MarkerPoly& b);

  MarkerPoly pow(unsigned e) const;

  // Canonical text: descending degree-lex, e.g. "w^2+4*w+5", "3/2*u*U^2".
  std::string str() const;

  // Accumulates a*b into this (fused, avoids a temporary for scalars).
  void add_product(const MarkerPoly& a, const MarkerPoly& b);

 private:
  void normalize();
  std::vector<Term> terms_;
};

std::string marker_name(Marker m);
std::string rational_str(const Rational& q);

}  // namespace lpg
