#include "ostrowski/power_series.hpp"

#include <algorithm>
#include <string>

#include "ostrowski/errors.hpp"

namespace ostrowski {

namespace {

Complex zero_like(Precision p) { return Complex(p); }

Complex one_like(Precision p) { return Complex(Real(1L, p), Real(p)); }

void require_same_centre(const PowerSeries& a, const PowerSeries& b) {
  if (!(a.centre() == b.centre())) {
    throw Error(ErrorKind::centre_mismatch,
                "centres " + to_string(a.centre()) + " and " + to_string(b.centre()) + " differ; recentre first");
  }
}

}  // namespace

PowerSeries::PowerSeries(Complex centre, std::vector<Complex> coeffs, Real radius_hint)
    : centre_(std::move(centre)),
      coeffs_(std::move(coeffs)),
      radius_hint_(std::move(radius_hint)),
      precision_(centre_.precision()) {
  if (coeffs_.empty()) throw Error(ErrorKind::horizon, "a power series needs at least one coefficient");
  if (radius_hint_.is_nan() || radius_hint_.sign() <= 0) {
    throw Error(ErrorKind::domain, "radius hint must be positive or +inf");
  }
  for (const auto& c : coeffs_) precision_ = max(precision_, c.precision());
}

PowerSeries PowerSeries::constant(const Complex& centre, const Complex& value) {
  return {centre, {value}, Real::inf(centre.precision())};
}

PowerSeries PowerSeries::zero(const Complex& centre, std::size_t count, const Real& radius_hint) {
  return {centre, std::vector<Complex>(count, zero_like(centre.precision())), radius_hint};
}

bool PowerSeries::identical(const PowerSeries& other) const {
  if (size() != other.size() || !centre_.identical(other.centre_) || !radius_hint_.identical(other.radius_hint_)) {
    return false;
  }
  for (std::size_t k = 0; k < size(); ++k) {
    if (!coeffs_[k].identical(other.coeffs_[k])) return false;
  }
  return true;
}

PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
  require_same_centre(a, b);
  const std::size_t n = std::min(a.size(), b.size());
  std::vector<Complex> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(a[k] + b[k]);
  return {a.centre(), std::move(out), min(a.radius_hint(), b.radius_hint())};
}

PowerSeries scale(const Complex& c, const PowerSeries& a) {
  std::vector<Complex> out;
  out.reserve(a.size());
  for (const auto& x : a.coeffs()) out.push_back(c * x);
  return {a.centre(), std::move(out), a.radius_hint()};
}

PowerSeries derivative(const PowerSeries& a) {
  if (a.size() == 1) return PowerSeries::zero(a.centre(), 1, a.radius_hint());
  std::vector<Complex> out;
  out.reserve(a.size() - 1);
  for (std::size_t k = 0; k + 1 < a.size(); ++k) {
    out.push_back(a[k + 1] * Real(static_cast<long>(k + 1), a.precision()));
  }
  return {a.centre(), std::move(out), a.radius_hint()};
}

PowerSeries antiderivative(const PowerSeries& a, const Complex& value_at_centre) {
  std::vector<Complex> out;
  out.reserve(a.size() + 1);
  out.push_back(value_at_centre);
  for (std::size_t k = 1; k <= a.size(); ++k) {
    out.push_back(a[k - 1] / Real(static_cast<long>(k), a.precision()));
  }
  return {a.centre(), std::move(out), a.radius_hint()};
}

PowerSeries antiderivative(const PowerSeries& a) { return antiderivative(a, zero_like(a.precision())); }

PowerSeries multiply_by_reciprocal_z(const PowerSeries& a) {
  const Complex& c = a.centre();
  if (c.is_zero()) throw Error(ErrorKind::singularity, "a(z)/z has a pole at the centre 0");
  std::vector<Complex> out;
  out.reserve(a.size());
  out.push_back(a[0] / c);
  for (std::size_t k = 1; k < a.size(); ++k) out.push_back((a[k] - out.back()) / c);
  // The expansion of 1/z about c converges only on |z - c| < |c|.
  return {c, std::move(out), min(a.radius_hint(), abs(c))};
}

PowerSeries multiply_by_z(const PowerSeries& a) {
  const Complex& c = a.centre();
  std::vector<Complex> out;
  out.reserve(a.size() + 1);
  out.push_back(c * a[0]);
  for (std::size_t k = 1; k < a.size(); ++k) out.push_back(c * a[k] + a[k - 1]);
  out.push_back(a[a.size() - 1]);
  return {c, std::move(out), a.radius_hint()};
}

PowerSeries truncate(const PowerSeries& a, std::size_t count) {
  if (count == 0 || count > a.size()) {
    throw Error(ErrorKind::horizon, "cannot truncate " + std::to_string(a.size()) + " coefficients to " +
                                        std::to_string(count));
  }
  return {a.centre(), std::vector<Complex>(a.coeffs().begin(), a.coeffs().begin() + count), a.radius_hint()};
}

PowerSeries zero_extend(const PowerSeries& a, std::size_t count) {
  if (count <= a.size()) return truncate(a, std::max<std::size_t>(count, 1));
  if (!a.radius_hint().is_inf()) {
    throw Error(ErrorKind::horizon, "zero extension is only defined for polynomials (infinite radius hint)");
  }
  std::vector<Complex> out(a.coeffs().begin(), a.coeffs().end());
  out.resize(count, zero_like(a.precision()));
  return {a.centre(), std::move(out), a.radius_hint()};
}

Complex evaluate(const PowerSeries& a, const Complex& z) {
  const Complex w = z - a.centre();
  Complex acc = a[a.size() - 1];
  for (std::size_t k = a.size() - 1; k-- > 0;) acc = acc * w + a[k];
  return acc;
}

RadiusEstimate estimate_radius(const PowerSeries& a, std::size_t tail_window) {
  if (tail_window < 8) throw Error(ErrorKind::config, "tail_window must be at least 8");
  if (a.size() < tail_window) {
    throw Error(ErrorKind::horizon, "series has " + std::to_string(a.size()) + " coefficients, tail window needs " +
                                        std::to_string(tail_window));
  }
  const Precision p = a.precision();
  Real worst(p);
  bool any = false;
  for (std::size_t k = std::max<std::size_t>(a.size() - tail_window, 1); k < a.size(); ++k) {
    if (a[k].is_zero()) continue;
    Real root = pow(abs(a[k]), Real(1L, p) / Real(static_cast<long>(k), p));
    if (!any || worst < root) worst = root;
    any = true;
  }
  if (!any) return {Real::inf(p), true};
  return {Real(1L, p) / worst, false};
}

PowerSeries log_series(const Complex& z0, const Real& r, std::size_t horizon) {
  if (r.sign() <= 0) throw Error(ErrorKind::branch_domain, "radius must be positive");
  if (abs(z0) < r) throw Error(ErrorKind::branch_domain, "disc D(z0, r) contains 0; no single-valued log");
  const Precision p = max(z0.precision(), r.precision());
  std::vector<Complex> out;
  out.reserve(horizon + 1);
  out.push_back(log(z0));
  const Complex inv = one_like(p) / z0;
  Complex inv_pow = inv;
  for (std::size_t k = 1; k <= horizon; ++k) {
    Complex term = inv_pow / Real(static_cast<long>(k), p);
    out.push_back(k % 2 == 1 ? term : -term);
    inv_pow = inv_pow * inv;
  }
  return {z0, std::move(out), r};
}

Complex branch_log(const Complex& z0, const Complex& z) {
  const Precision p = max(z0.precision(), z.precision());
  return log(z0) + log(one_like(p) + (z - z0) / z0);
}

}  // namespace ostrowski
