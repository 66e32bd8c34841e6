#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ostrowski/complex.hpp"

namespace ostrowski {

/// Truncated power series sum_{k=0..L} a_k (z - centre)^k.
///
/// The coefficient vector is the series' horizon: operations that would
/// need a coefficient beyond index L throw ErrorKind::horizon instead of
/// treating the missing terms as zero. radius_hint is the declared disc of
/// validity (+inf for entire functions and polynomials).
class PowerSeries {
 public:
  PowerSeries(Complex centre, std::vector<Complex> coeffs, Real radius_hint);

  static PowerSeries constant(const Complex& centre, const Complex& value);
  static PowerSeries zero(const Complex& centre, std::size_t count, const Real& radius_hint);

  const Complex& centre() const { return centre_; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  const Complex& operator[](std::size_t k) const { return coeffs_[k]; }
  /// Number of stored coefficients, L + 1.
  std::size_t size() const { return coeffs_.size(); }
  /// Highest stored index L.
  std::size_t horizon() const { return coeffs_.size() - 1; }
  const Real& radius_hint() const { return radius_hint_; }
  Precision precision() const { return precision_; }

  /// Bit-identical centre, coefficients, hint and precision.
  bool identical(const PowerSeries& other) const;

 private:
  Complex centre_;
  std::vector<Complex> coeffs_;
  Real radius_hint_;
  Precision precision_;
};

/// Coefficientwise sum; length and radius hint are the minima of the inputs.
PowerSeries add(const PowerSeries& a, const PowerSeries& b);
PowerSeries scale(const Complex& c, const PowerSeries& a);
/// b_k = (k+1) a_{k+1}; a constant maps to the one-term zero series.
PowerSeries derivative(const PowerSeries& a);
/// b_0 = value_at_centre, b_k = a_{k-1}/k. One coefficient longer than a.
PowerSeries antiderivative(const PowerSeries& a, const Complex& value_at_centre);
PowerSeries antiderivative(const PowerSeries& a);
/// Series of a(z)/z at the same centre, via centre*b_k + b_{k-1} = a_k.
PowerSeries multiply_by_reciprocal_z(const PowerSeries& a);
/// Series of z*a(z) at the same centre (exact, one coefficient longer).
PowerSeries multiply_by_z(const PowerSeries& a);
/// Keeps the first `count` coefficients.
PowerSeries truncate(const PowerSeries& a, std::size_t count);
/// Pads a polynomial with zero coefficients up to `count`. Throws unless the
/// radius hint is infinite, since only polynomials have a known zero tail.
PowerSeries zero_extend(const PowerSeries& a, std::size_t count);

/// Horner evaluation of sum a_k (z - centre)^k.
Complex evaluate(const PowerSeries& a, const Complex& z);

struct RadiusEstimate {
  Real radius;
  bool entire_at_horizon = false;
};

/// Root-test proxy: 1 / max_{k in last tail_window indices, a_k != 0} |a_k|^{1/k}.
/// A tail of exact zeros gives +inf with entire_at_horizon set.
RadiusEstimate estimate_radius(const PowerSeries& a, std::size_t tail_window);

/// Log(z0) + log(1 + (z - z0)/z0) to index L, the branch used for every
/// log target. Requires |z0| >= r > 0.
PowerSeries log_series(const Complex& z0, const Real& r, std::size_t horizon);

/// Pointwise value of the log_series branch: Log(z0) + Log(1 + (z - z0)/z0).
Complex branch_log(const Complex& z0, const Complex& z);

}  // namespace ostrowski
