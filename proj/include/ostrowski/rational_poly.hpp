#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "ostrowski/complex.hpp"

namespace ostrowski {

/// Reduced fraction num/den with den >= 1.
struct Rational {
  long num = 0;
  long den = 1;

  static Rational make(long num, long den);
  /// max(|num|, den)
  long height() const;
  Real to_real(Precision p) const;
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  /// Orders by value.
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
};

struct GaussianRational {
  Rational re;
  Rational im;

  long height() const;
  bool is_zero() const { return re.num == 0 && im.num == 0; }
  Complex to_complex(Precision p) const;
  std::string to_string() const;

  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

/// Polynomial in w with coefficients in Q + iQ, constant term first. The
/// leading coefficient is nonzero except for the zero polynomial, stored as
/// a single zero constant.
struct RationalPoly {
  std::vector<GaussianRational> coeffs;

  std::size_t degree() const { return coeffs.size() - 1; }
  long height() const;
  std::vector<Complex> to_complex(Precision p) const;
  std::string to_string() const;

  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;
};

/// Every polynomial of degree <= max_degree whose coefficient parts are
/// reduced fractions of height <= max_height, each listed once, ordered by
/// (degree, height, coefficients lexicographically from the constant term,
/// real part before imaginary part).
std::vector<RationalPoly> enumerate_rational_polys(std::size_t max_degree, long max_height);

/// Evaluates sum c_k w^k by Horner's rule.
Complex evaluate_polynomial(const std::vector<Complex>& coeffs, const Complex& w);

}  // namespace ostrowski
