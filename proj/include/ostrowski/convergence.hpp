#pragma once

#include <span>

#include "ostrowski/real.hpp"

namespace ostrowski {

/// Finite stand-in for "-> 0": each value is strictly below its predecessor,
/// except that once both neighbours sit at or below `floor` (the rounding
/// level) the pair is accepted as converged.
inline bool decreasing_to_floor(std::span<const Real> values, const Real& floor) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] <= floor && values[i - 1] <= floor) continue;
    if (!(values[i] < values[i - 1])) return false;
  }
  return true;
}

/// 2^{-(P - guard)}: the rounding level for identities exact in exact arithmetic.
inline Real exactness_floor(Precision p, long guard_bits) { return Real::two_pow(-(p.bits - guard_bits), p); }

}  // namespace ostrowski
