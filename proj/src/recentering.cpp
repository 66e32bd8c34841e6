#include "ostrowski/recentering.hpp"

#include <gmp.h>

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "ostrowski/errors.hpp"
#include "ostrowski/poly_mul.hpp"

namespace ostrowski {

namespace {

class BigInt {
 public:
  explicit BigInt(unsigned long v) { mpz_init_set_ui(value_, v); }
  BigInt(const BigInt&) = delete;
  BigInt& operator=(const BigInt&) = delete;
  ~BigInt() { mpz_clear(value_); }
  mpz_ptr get() { return value_; }

 private:
  mpz_t value_;
};

Complex unit(Precision p) { return Complex(Real(1L, p), Real(p)); }

void check_shift_request(const PowerSeries& a, const Complex& zeta, std::size_t n) {
  if (n > a.horizon()) {
    throw Error(ErrorKind::horizon, "requested order " + std::to_string(n) + " exceeds stored horizon " +
                                        std::to_string(a.horizon()));
  }
  const Real& hint = a.radius_hint();
  if (!hint.is_inf() && !(abs(zeta - a.centre()) < hint)) {
    throw Error(ErrorKind::domain, "centre " + to_string(zeta) + " lies outside the declared disc of radius " +
                                       hint.to_string(10));
  }
}

std::vector<Complex> delta_powers(const Complex& delta, std::size_t count, Precision p) {
  std::vector<Complex> out;
  out.reserve(count);
  out.push_back(unit(p));
  for (std::size_t i = 1; i < count; ++i) out.push_back(out.back() * delta);
  return out;
}

std::vector<Complex> shift_naive(std::span<const Complex> a, const Complex& delta, std::size_t n, Precision p) {
  const std::size_t size = a.size();
  const std::vector<Complex> dpow = delta_powers(delta, size, p);
  std::vector<Complex> out;
  out.reserve(n + 1);
  BigInt binom(1);
  Real binom_real(p);
  Complex term(p);
  MulAddScratch scratch(p);
  for (std::size_t j = 0; j <= n; ++j) {
    Complex acc(p);
    mpz_set_ui(binom.get(), 1);
    for (std::size_t k = j; k < size; ++k) {
      if (k > j) {
        // C(k, j) = C(k-1, j) * k / (k - j)
        mpz_mul_ui(binom.get(), binom.get(), k);
        mpz_divexact_ui(binom.get(), binom.get(), k - j);
      }
      if (a[k].is_zero()) continue;
      mpfr_set_z(binom_real.get(), binom.get(), MPFR_RNDN);
      mpfr_mul(term.re().get(), a[k].re().get(), binom_real.get(), MPFR_RNDN);
      mpfr_mul(term.im().get(), a[k].im().get(), binom_real.get(), MPFR_RNDN);
      mul_add(acc, term, dpow[k - j], scratch);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

void shift_horner_in_place(std::vector<Complex>& c, const Complex& delta) {
  const std::size_t size = c.size();
  if (size < 2) return;
  MulAddScratch scratch(c.front().precision());
  for (std::size_t i = 0; i + 1 < size; ++i) {
    for (std::size_t j = size - 1; j-- > i;) mul_add(c[j], delta, c[j + 1], scratch);
  }
}

// Coefficients of (w + delta)^m.
std::vector<Complex> binomial_power(const Complex& delta, std::size_t m, Precision p) {
  const std::vector<Complex> dpow = delta_powers(delta, m + 1, p);
  std::vector<Complex> out;
  out.reserve(m + 1);
  BigInt binom(1);
  Real binom_real(p);
  for (std::size_t i = 0; i <= m; ++i) {
    if (i > 0) {
      mpz_mul_ui(binom.get(), binom.get(), m - i + 1);
      mpz_divexact_ui(binom.get(), binom.get(), i);
    }
    mpfr_set_z(binom_real.get(), binom.get(), MPFR_RNDN);
    out.push_back(dpow[m - i] * binom_real);
  }
  return out;
}

// Shifts a block whose length is a power of two; powers[j] = (w + delta)^{2^j}.
std::vector<Complex> shift_dc_block(std::span<const Complex> block, const Complex& delta,
                                    const std::vector<std::vector<Complex>>& powers) {
  constexpr std::size_t kLeaf = 16;
  if (block.size() <= kLeaf) {
    std::vector<Complex> c(block.begin(), block.end());
    shift_horner_in_place(c, delta);
    return c;
  }
  const std::size_t h = block.size() / 2;
  std::vector<Complex> low = shift_dc_block(block.first(h), delta, powers);
  std::vector<Complex> high = shift_dc_block(block.subspan(h), delta, powers);
  const auto& factor = powers[static_cast<std::size_t>(std::countr_zero(h))];
  std::vector<Complex> out = multiply(high, factor);
  out.resize(block.size(), Complex(low.front().precision()));
  for (std::size_t i = 0; i < h; ++i) out[i] += low[i];
  return out;
}

std::vector<Complex> shift_divide_and_conquer(std::span<const Complex> a, const Complex& delta, Precision p) {
  const std::size_t padded = std::bit_ceil(a.size());
  std::vector<Complex> block(a.begin(), a.end());
  block.resize(padded, Complex(p));
  std::vector<std::vector<Complex>> powers;
  for (std::size_t m = 1; m < padded; m *= 2) powers.push_back(binomial_power(delta, m, p));
  return shift_dc_block(block, delta, powers);
}

}  // namespace

std::string_view to_string(ShiftAlgorithm alg) {
  switch (alg) {
    case ShiftAlgorithm::naive_binomial: return "naive_binomial";
    case ShiftAlgorithm::horner_shift: return "horner_shift";
    case ShiftAlgorithm::divide_and_conquer: return "divide_and_conquer";
  }
  return "unknown";
}

ShiftAlgorithm parse_shift_algorithm(std::string_view name) {
  if (name == "naive_binomial") return ShiftAlgorithm::naive_binomial;
  if (name == "horner_shift") return ShiftAlgorithm::horner_shift;
  if (name == "divide_and_conquer") return ShiftAlgorithm::divide_and_conquer;
  throw Error(ErrorKind::config, "unknown shift algorithm '" + std::string(name) + "'");
}

PowerSeries shift(const PowerSeries& a, const Complex& zeta, std::size_t n, ShiftAlgorithm alg) {
  check_shift_request(a, zeta, n);
  const Precision p = max(a.precision(), zeta.precision());
  const Complex delta = (zeta - a.centre()).with_precision(p);
  const Real hint = a.radius_hint().is_inf() ? a.radius_hint() : a.radius_hint() - abs(delta);

  if (delta.is_zero()) {
    std::vector<Complex> prefix(a.coeffs().begin(), a.coeffs().begin() + static_cast<std::ptrdiff_t>(n + 1));
    return {zeta, std::move(prefix), hint};
  }

  std::vector<Complex> coeffs;
  switch (alg) {
    case ShiftAlgorithm::naive_binomial:
      coeffs = shift_naive(a.coeffs(), delta, n, p);
      break;
    case ShiftAlgorithm::horner_shift:
      coeffs.assign(a.coeffs().begin(), a.coeffs().end());
      for (auto& c : coeffs) c = c.with_precision(max(c.precision(), p));
      shift_horner_in_place(coeffs, delta);
      break;
    case ShiftAlgorithm::divide_and_conquer:
      coeffs = shift_divide_and_conquer(a.coeffs(), delta, p);
      break;
  }
  coeffs.resize(n + 1, Complex(p));
  return {zeta, std::move(coeffs), hint};
}

Complex partial_sum_eval(const PowerSeries& a, const Complex& zeta, std::size_t n, const Complex& w) {
  return evaluate(shift(a, zeta, n), w);
}

ScaledValue t_eval_scaled(const PowerSeries& a, std::size_t n, const Complex& z) {
  const PowerSeries b = shift(a, z, n);
  const Precision p = b.precision();
  const Complex minus_z = -z;
  Complex power = unit(p);
  Complex sum(p);
  Real scale(p);
  MulAddScratch scratch(p);
  for (std::size_t j = 0; j <= n; ++j) {
    Real magnitude = abs(b[j] * power);
    if (scale < magnitude) scale = magnitude;
    mul_add(sum, b[j], power, scratch);
    power = power * minus_z;
  }
  return {std::move(sum), std::move(scale)};
}

Complex t_eval(const PowerSeries& a, std::size_t n, const Complex& z) {
  const PowerSeries b = shift(a, z, n);
  return evaluate(b, Complex(b.precision()));
}

std::vector<Complex> t_eval_all(const PowerSeries& a, std::size_t n_max, const Complex& z) {
  const PowerSeries b = shift(a, z, n_max);
  const Precision p = b.precision();
  const Complex minus_z = -z;
  Complex power = unit(p);
  Complex sum(p);
  MulAddScratch scratch(p);
  std::vector<Complex> out;
  out.reserve(n_max + 1);
  for (std::size_t j = 0; j <= n_max; ++j) {
    mul_add(sum, b[j], power, scratch);
    out.push_back(sum);
    power = power * minus_z;
  }
  return out;
}

Complex t_derivative_eval(const PowerSeries& a, std::size_t n, const Complex& z) {
  if (n + 1 > a.horizon()) {
    throw Error(ErrorKind::horizon, "T'_N needs coefficient " + std::to_string(n + 1) + " beyond horizon " +
                                        std::to_string(a.horizon()));
  }
  const PowerSeries b = shift(a, z, n + 1);
  const Precision p = b.precision();
  return b[n + 1] * Real(static_cast<long>(n + 1), p) * pow(-z, static_cast<long>(n));
}

IdentityResidual zf_identity_check(const PowerSeries& f, std::size_t n, const Complex& z) {
  if (n > f.horizon()) {
    throw Error(ErrorKind::horizon, "order " + std::to_string(n) + " exceeds horizon " + std::to_string(f.horizon()));
  }
  const PowerSeries g = multiply_by_z(f);
  ScaledValue lhs = t_eval_scaled(g, n, z);
  const PowerSeries b = shift(f, z, n);
  const Complex rhs = z * b[n] * pow(-z, static_cast<long>(n));
  return {abs(lhs.value - rhs), max(lhs.scale, abs(rhs))};
}

TailBound tail_bound(const PowerSeries& a, const Complex& zeta, std::size_t n, std::size_t tail_window) {
  check_shift_request(a, zeta, n);
  const Precision p = a.precision();
  // Short series use their upper half as the tail.
  const std::size_t window = std::min(tail_window, std::max<std::size_t>(a.size() / 2, 1));
  const std::size_t first = std::max<std::size_t>(a.size() - window, 1);

  Real worst_root(p);
  bool any = false;
  for (std::size_t k = first; k < a.size(); ++k) {
    if (a[k].is_zero()) continue;
    Real root = pow(abs(a[k]), Real(1L, p) / Real(static_cast<long>(k), p));
    if (!any || worst_root < root) worst_root = root;
    any = true;
  }
  if (!any) return {Real(p), false};

  // |a_k| <= C (1/R)^k on the tail with R = 1/worst_root; t = |zeta - centre| / R.
  const Real t = abs(zeta - a.centre()) * worst_root;
  if (!(t < Real(1L, p))) return {Real::inf(p), true};
  Real c(p);
  for (std::size_t k = first; k < a.size(); ++k) {
    if (a[k].is_zero()) continue;
    Real weighted = abs(a[k]) / pow(worst_root, static_cast<long>(k));
    if (c < weighted) c = weighted;
  }
  Real bound = c * pow(t, static_cast<long>(a.size())) / (Real(1L, p) - t);
  return {std::move(bound), false};
}

}  // namespace ostrowski
