#pragma once

#include <string>
#include <utility>

#include "ostrowski/real.hpp"

namespace ostrowski {

/// Complex number whose parts are multiprecision reals.
///
/// The precision of a Complex is the larger of its parts' precisions;
/// operations produce results at the larger precision of their operands.
class Complex {
 public:
  explicit Complex(Precision p = kDefaultPrecision) : re_(p), im_(p) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit Complex(Real re) : re_(re), im_(re.precision()) {}
  Complex(double re, double im, Precision p) : re_(re, p), im_(im, p) {}

  static Complex parse(const std::string& re, const std::string& im, Precision p);
  /// radius * exp(i angle)
  static Complex polar(const Real& radius, const Real& angle);

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Real& re() { return re_; }
  Real& im() { return im_; }

  Precision precision() const { return max(re_.precision(), im_.precision()); }
  Complex with_precision(Precision p) const { return {re_.with_precision(p), im_.with_precision(p)}; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator*=(const Real& rhs);
  Complex& operator/=(const Complex& rhs);
  Complex& operator/=(const Real& rhs);

  Complex operator-() const { return {-re_, -im_}; }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  friend Complex operator*(const Real& a, Complex b) { return b *= a; }
  friend Complex operator/(const Complex& a, const Complex& b);
  friend Complex operator/(Complex a, const Real& b) { return a /= b; }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  bool identical(const Complex& other) const { return re_.identical(other.re_) && im_.identical(other.im_); }

 private:
  Real re_;
  Real im_;
};

Real abs(const Complex& z);
Real arg(const Complex& z);
Complex conj(const Complex& z);
/// Principal logarithm, imaginary part in (-pi, pi].
Complex log(const Complex& z);
Complex exp(const Complex& z);
/// Integer power by repeated squaring; negative exponents invert.
Complex pow(const Complex& z, long n);

/// acc += a * b, reusing the caller's scratch to avoid allocation in hot loops.
struct MulAddScratch {
  explicit MulAddScratch(Precision p) : t1(p), t2(p) {}
  Real t1;
  Real t2;
};
void mul_add(Complex& acc, const Complex& a, const Complex& b, MulAddScratch& scratch);

std::string to_string(const Complex& z, int digits = 17);

}  // namespace ostrowski
