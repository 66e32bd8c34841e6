#pragma once

// Independent reference computations. None of these call the shift kernels;
// they exist to cross-check the library through a different algebraic route.

#include <gmp.h>

#include <cstddef>

#include "ostrowski/complex.hpp"
#include "ostrowski/power_series.hpp"

namespace ostrowski::testing {

/// T_N(f)(z) without recentering.
///
/// Swapping the sums gives T_N(f)(z) = sum_k a_k B_k with
/// B_k = sum_{n <= min(k, N)} C(k, n) d^{k-n} x^n, d = z - c, x = -z.
/// For k <= N, B_k = (d + x)^k = (-c)^k. Past N the truncated binomial obeys
/// B_{k+1} = (-c) B_k - C(k, N) d^{k-N} x^{N+1}.
/// The recurrence amplifies rounding by |c/d| per step, so it runs with
/// `guard_bits` extra precision.
inline Complex t_eval_by_truncated_binomials(const PowerSeries& f, std::size_t n, const Complex& z,
                                             long guard_bits = 1024) {
  const Precision p{max(f.precision(), z.precision()).bits + guard_bits};
  const Complex c = f.centre().with_precision(p);
  const Complex d = z.with_precision(p) - c;
  const Complex x = -z.with_precision(p);
  const Complex minus_c = -c;
  Complex b(Real(1L, p), Real(p));
  Complex sum(p);
  for (std::size_t k = 0; k <= n && k < f.size(); ++k) {
    sum += f[k] * b;
    b = b * minus_c;
  }
  if (f.size() <= n + 1) return sum.with_precision(f.precision());
  // b now holds (-c)^{N+1}; B_{N+1} = (-c)^{N+1} - x^{N+1}.
  const Complex x_pow = pow(x, static_cast<long>(n + 1));
  b = b - x_pow;
  mpz_t binom;
  mpz_init_set_ui(binom, 1);  // C(N, N)
  Complex d_pow(Real(1L, p), Real(p));
  Real binom_real(p);
  for (std::size_t k = n + 1; k < f.size(); ++k) {
    sum += f[k] * b;
    // advance: C(k, N) and d^{k-N}
    mpz_mul_ui(binom, binom, k);
    mpz_divexact_ui(binom, binom, k - n);
    d_pow = d_pow * d;
    mpfr_set_z(binom_real.get(), binom, MPFR_RNDN);
    b = minus_c * b - (d_pow * binom_real) * x_pow;
  }
  mpz_clear(binom);
  return sum.with_precision(f.precision());
}

/// Central difference (F(z+h) - F(z-h)) / 2h along the real axis.
template <class Fn>
Complex central_difference(Fn&& fn, const Complex& z, const Real& h) {
  const Complex step(h);
  return (fn(z + step) - fn(z - step)) / (h * Real(2L, h.precision()));
}

}  // namespace ostrowski::testing
