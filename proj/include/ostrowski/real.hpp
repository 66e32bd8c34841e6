#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace ostrowski {

/// Binary precision (mantissa bits) of a multiprecision value.
struct Precision {
  long bits = 256;

  constexpr explicit Precision(long b) : bits(b) {}
  constexpr Precision() = default;
  friend constexpr auto operator<=>(const Precision&, const Precision&) = default;
};

inline constexpr Precision kDefaultPrecision{256};

constexpr Precision max(Precision a, Precision b) { return a.bits >= b.bits ? a : b; }

/// Real number at an explicit binary precision, backed by MPFR.
///
/// Every binary operation rounds to nearest at the larger precision of its
/// operands, so results are a deterministic function of the inputs.
class Real {
 public:
  explicit Real(Precision p = kDefaultPrecision);
  Real(double v, Precision p);
  Real(long v, Precision p);
  Real(int v, Precision p) : Real(static_cast<long>(v), p) {}

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  /// Parses a decimal (or "inf", "-inf", "nan") string, rounding to nearest.
  static Real parse(std::string_view text, Precision p);
  static Real inf(Precision p);
  static Real pi(Precision p);
  static Real two_pow(long exponent, Precision p);

  Precision precision() const { return Precision{mpfr_get_prec(value_)}; }
  /// Same value rounded to a new precision.
  Real with_precision(Precision p) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_inf() const { return mpfr_inf_p(value_) != 0; }
  bool is_nan() const { return mpfr_nan_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Shortest decimal string that reads back to the identical value at this precision.
  std::string to_string() const;
  /// Decimal string with a fixed number of significant digits (for reports).
  std::string to_string(int digits) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

  /// Bitwise identity: same precision, same value (NaNs compare equal to NaNs).
  bool identical(const Real& other) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real log2(const Real& x);
Real exp(const Real& x);
Real exp2(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real cos(const Real& x);
Real sin(const Real& x);
const Real& max(const Real& a, const Real& b);
const Real& min(const Real& a, const Real& b);

}  // namespace ostrowski
