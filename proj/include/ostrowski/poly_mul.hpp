#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ostrowski/complex.hpp"

namespace ostrowski {

/// Inputs shorter than this use the schoolbook product inside karatsuba.
inline constexpr std::size_t kKaratsubaCutoff = 64;

std::vector<Complex> multiply_schoolbook(std::span<const Complex> a, std::span<const Complex> b);
std::vector<Complex> multiply_karatsuba(std::span<const Complex> a, std::span<const Complex> b);

/// Polynomial product, dispatching on size.
inline std::vector<Complex> multiply(std::span<const Complex> a, std::span<const Complex> b) {
  return multiply_karatsuba(a, b);
}

}  // namespace ostrowski
