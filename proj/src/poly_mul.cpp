#include "ostrowski/poly_mul.hpp"

#include <algorithm>

namespace ostrowski {

namespace {

Precision span_precision(std::span<const Complex> a) {
  Precision p{MPFR_PREC_MIN};
  for (const auto& c : a) p = max(p, c.precision());
  return p;
}

void add_into(std::vector<Complex>& out, std::size_t offset, std::span<const Complex> src) {
  for (std::size_t i = 0; i < src.size(); ++i) out[offset + i] += src[i];
}

std::vector<Complex> sum(std::span<const Complex> a, std::span<const Complex> b) {
  std::vector<Complex> out(a.begin(), a.end());
  if (out.size() < b.size()) out.resize(b.size(), Complex(span_precision(b)));
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

}  // namespace

std::vector<Complex> multiply_schoolbook(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.empty() || b.empty()) return {};
  const Precision p = max(span_precision(a), span_precision(b));
  std::vector<Complex> out(a.size() + b.size() - 1, Complex(p));
  MulAddScratch scratch(p);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mul_add(out[i + j], a[i], b[j], scratch);
  }
  return out;
}

std::vector<Complex> multiply_karatsuba(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) < kKaratsubaCutoff) return multiply_schoolbook(a, b);

  const Precision p = max(span_precision(a), span_precision(b));
  const std::size_t h = std::max(a.size(), b.size()) / 2;
  std::vector<Complex> out(a.size() + b.size() - 1, Complex(p));

  // Unbalanced operands: split only the longer one.
  if (a.size() <= h || b.size() <= h) {
    auto& longer = a.size() > b.size() ? a : b;
    auto& shorter = a.size() > b.size() ? b : a;
    add_into(out, 0, multiply_karatsuba(shorter, longer.first(h)));
    add_into(out, h, multiply_karatsuba(shorter, longer.subspan(h)));
    return out;
  }

  auto a0 = a.first(h), a1 = a.subspan(h);
  auto b0 = b.first(h), b1 = b.subspan(h);
  std::vector<Complex> low = multiply_karatsuba(a0, b0);
  std::vector<Complex> high = multiply_karatsuba(a1, b1);
  std::vector<Complex> mid = multiply_karatsuba(sum(a0, a1), sum(b0, b1));
  for (std::size_t i = 0; i < low.size(); ++i) mid[i] -= low[i];
  for (std::size_t i = 0; i < high.size(); ++i) mid[i] -= high[i];

  add_into(out, 0, low);
  add_into(out, 2 * h, high);
  // mid may carry trailing zeros past the product length.
  const std::size_t mid_len = std::min(mid.size(), out.size() - h);
  add_into(out, h, std::span<const Complex>(mid).first(mid_len));
  return out;
}

}  // namespace ostrowski
