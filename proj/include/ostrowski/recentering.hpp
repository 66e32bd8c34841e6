#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "ostrowski/power_series.hpp"

namespace ostrowski {

/// Interchangeable Taylor-shift kernels; all compute the same map.
enum class ShiftAlgorithm { naive_binomial, horner_shift, divide_and_conquer };

std::string_view to_string(ShiftAlgorithm alg);
ShiftAlgorithm parse_shift_algorithm(std::string_view name);

/// First N+1 Taylor coefficients about zeta of the stored truncation:
/// b_n = sum_{k >= n} a_k C(k, n) (zeta - centre)^{k-n}.
///
/// Throws ErrorKind::domain when zeta lies outside a finite radius hint and
/// ErrorKind::horizon when N exceeds the stored horizon.
PowerSeries shift(const PowerSeries& a, const Complex& zeta, std::size_t n,
                  ShiftAlgorithm alg = ShiftAlgorithm::naive_binomial);

/// S_N(a, zeta)(w).
Complex partial_sum_eval(const PowerSeries& a, const Complex& zeta, std::size_t n, const Complex& w);

struct ScaledValue {
  Complex value;
  /// Largest summand magnitude, the reference for cancellation-aware tolerances.
  Real scale;
};

/// T_N(a)(z) = S_N(a, z)(0) = sum_{n <= N} a^{(n)}(z)/n! (-z)^n.
Complex t_eval(const PowerSeries& a, std::size_t n, const Complex& z);
ScaledValue t_eval_scaled(const PowerSeries& a, std::size_t n, const Complex& z);
/// T_0(a)(z), ..., T_{n_max}(a)(z) from a single recentering.
std::vector<Complex> t_eval_all(const PowerSeries& a, std::size_t n_max, const Complex& z);

/// d/dz T_N(a)(z) in closed form: a^{(N+1)}(z)/N! (-z)^N.
Complex t_derivative_eval(const PowerSeries& a, std::size_t n, const Complex& z);

struct IdentityResidual {
  Real residual;
  Real scale;
};

/// |T_N(z f)(z) - z f^{(N)}(z)/N! (-z)^N| with the summand scale of the left side.
IdentityResidual zf_identity_check(const PowerSeries& f, std::size_t n, const Complex& z);

struct TailBound {
  Real bound;
  bool divergent = false;
};

/// Bound on the part of S_N(a, zeta)(zeta) = a(zeta) lost to truncation at the
/// horizon, extrapolating the stored tail geometrically with the root-test
/// radius of its last `tail_window` coefficients.
TailBound tail_bound(const PowerSeries& a, const Complex& zeta, std::size_t n, std::size_t tail_window = 32);

}  // namespace ostrowski
