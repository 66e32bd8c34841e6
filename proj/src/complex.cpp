#include "ostrowski/complex.hpp"

namespace ostrowski {

Complex Complex::parse(const std::string& re, const std::string& im, Precision p) {
  return {Real::parse(re, p), Real::parse(im, p)};
}

Complex Complex::polar(const Real& radius, const Real& angle) {
  Real c(angle.precision());
  Real s(angle.precision());
  mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
  return {radius * c, radius * s};
}

Complex& Complex::operator+=(const Complex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  *this = *this * rhs;
  return *this;
}

Complex& Complex::operator*=(const Real& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
  *this = *this / rhs;
  return *this;
}

Complex& Complex::operator/=(const Real& rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

Complex operator*(const Complex& a, const Complex& b) {
  Precision p = max(a.precision(), b.precision());
  Real re(p);
  Real im(p);
  // re = ac - bd, im = ad + bc, each via a single correctly rounded fused op.
  mpfr_fmms(re.get(), a.re().get(), b.re().get(), a.im().get(), b.im().get(), MPFR_RNDN);
  mpfr_fmma(im.get(), a.re().get(), b.im().get(), a.im().get(), b.re().get(), MPFR_RNDN);
  return {std::move(re), std::move(im)};
}

Complex operator/(const Complex& a, const Complex& b) {
  Precision p = max(a.precision(), b.precision());
  Real den(p);
  mpfr_fmma(den.get(), b.re().get(), b.re().get(), b.im().get(), b.im().get(), MPFR_RNDN);
  Real re(p);
  Real im(p);
  mpfr_fmma(re.get(), a.re().get(), b.re().get(), a.im().get(), b.im().get(), MPFR_RNDN);
  mpfr_fmms(im.get(), a.im().get(), b.re().get(), a.re().get(), b.im().get(), MPFR_RNDN);
  re /= den;
  im /= den;
  return {std::move(re), std::move(im)};
}

Real abs(const Complex& z) { return hypot(z.re(), z.im()); }

Real arg(const Complex& z) { return atan2(z.im(), z.re()); }

Complex conj(const Complex& z) { return {z.re(), -z.im()}; }

Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

Complex exp(const Complex& z) { return Complex::polar(exp(z.re()), z.im()); }

Complex pow(const Complex& z, long n) {
  Complex base = z;
  if (n < 0) {
    base = Complex(Real(1L, z.precision()), Real(z.precision())) / z;
    n = -n;
  }
  Complex out(Real(1L, z.precision()), Real(z.precision()));
  while (n > 0) {
    if (n & 1) out = out * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return out;
}

void mul_add(Complex& acc, const Complex& a, const Complex& b, MulAddScratch& s) {
  mpfr_fmms(s.t1.get(), a.re().get(), b.re().get(), a.im().get(), b.im().get(), MPFR_RNDN);
  mpfr_fmma(s.t2.get(), a.re().get(), b.im().get(), a.im().get(), b.re().get(), MPFR_RNDN);
  mpfr_add(acc.re().get(), acc.re().get(), s.t1.get(), MPFR_RNDN);
  mpfr_add(acc.im().get(), acc.im().get(), s.t2.get(), MPFR_RNDN);
}

std::string to_string(const Complex& z, int digits) {
  return "(" + z.re().to_string(digits) + ", " + z.im().to_string(digits) + ")";
}

}  // namespace ostrowski
