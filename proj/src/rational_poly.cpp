#include "ostrowski/rational_poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <tuple>

#include "ostrowski/errors.hpp"

namespace ostrowski {

Rational Rational::make(long num, long den) {
  if (den == 0) throw Error(ErrorKind::domain, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

long Rational::height() const { return std::max(std::labs(num), den); }

Real Rational::to_real(Precision p) const { return Real(num, p) / Real(den, p); }

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Denominators are positive and heights small, so the cross products fit.
  return a.num * b.den <=> b.num * a.den;
}

long GaussianRational::height() const { return std::max(re.height(), im.height()); }

Complex GaussianRational::to_complex(Precision p) const { return {re.to_real(p), im.to_real(p)}; }

std::string GaussianRational::to_string() const {
  if (im.num == 0) return re.to_string();
  const std::string imag = im.to_string() + "i";
  if (re.num == 0) return imag;
  return "(" + re.to_string() + (im.num > 0 ? "+" : "") + imag + ")";
}

long RationalPoly::height() const {
  long h = 0;
  for (const auto& c : coeffs) h = std::max(h, c.height());
  return h;
}

std::vector<Complex> RationalPoly::to_complex(Precision p) const {
  std::vector<Complex> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c.to_complex(p));
  return out;
}

std::string RationalPoly::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero() && coeffs.size() > 1) continue;
    if (!out.empty()) out += " + ";
    out += coeffs[k].to_string();
    if (k == 1) out += "*w";
    if (k > 1) out += "*w^" + std::to_string(k);
  }
  return out;
}

std::vector<RationalPoly> enumerate_rational_polys(std::size_t max_degree, long max_height) {
  if (max_height < 0) throw Error(ErrorKind::config, "max_height must be non-negative");
  std::vector<Rational> rationals;
  for (long den = 1; den <= std::max(max_height, 1L); ++den) {
    for (long num = -max_height; num <= max_height; ++num) {
      if (std::gcd(num, den) == 1) rationals.push_back({num, den});
    }
  }
  std::sort(rationals.begin(), rationals.end());
  std::vector<GaussianRational> scalars;
  for (const auto& re : rationals) {
    for (const auto& im : rationals) scalars.push_back({re, im});
  }

  std::vector<RationalPoly> out;
  std::vector<std::size_t> digits;
  for (std::size_t degree = 0; degree <= max_degree; ++degree) {
    std::vector<RationalPoly> block;
    digits.assign(degree + 1, 0);
    while (true) {
      const bool leading_ok = degree == 0 || !scalars[digits[degree]].is_zero();
      if (leading_ok) {
        RationalPoly poly;
        for (std::size_t d : digits) poly.coeffs.push_back(scalars[d]);
        block.push_back(std::move(poly));
      }
      std::size_t k = 0;
      while (k <= degree && ++digits[k] == scalars.size()) digits[k++] = 0;
      if (k > degree) break;
    }
    const auto key = [](const RationalPoly& p) {
      std::vector<std::tuple<Rational, Rational>> parts;
      for (const auto& c : p.coeffs) parts.emplace_back(c.re, c.im);
      return parts;
    };
    std::stable_sort(block.begin(), block.end(), [&](const RationalPoly& a, const RationalPoly& b) {
      const long ha = a.height(), hb = b.height();
      if (ha != hb) return ha < hb;
      return key(a) < key(b);
    });
    for (auto& poly : block) out.push_back(std::move(poly));
  }
  return out;
}

Complex evaluate_polynomial(const std::vector<Complex>& coeffs, const Complex& w) {
  if (coeffs.empty()) return Complex(w.precision());
  Complex acc = coeffs.back();
  MulAddScratch scratch(max(acc.precision(), w.precision()));
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
    Complex next = coeffs[k];
    mul_add(next, acc, w, scratch);
    acc = std::move(next);
  }
  return acc;
}

}  // namespace ostrowski
