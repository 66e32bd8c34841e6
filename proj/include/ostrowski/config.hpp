#pragma once

#include <cstddef>

namespace ostrowski::calibration {

// Frozen thresholds. Each was checked against a 256-bit run of the default
// construction (z0 = 2, r = 1, D_4 sampled with 256 + 16 points); the
// observed values are recorded next to the tests that use them.

/// Final-level bound for the root-test proxy over Ostrowski gap windows.
inline constexpr double kGapRootThreshold = 0.05;
/// Final-level sup error for T_{p_n}(g) -> 1 and for gap transfer.
inline constexpr double kConstantSupThreshold = 1e-2;
/// Final-level sup error for T_{p_n}(Q_1) -> log.
inline constexpr double kLogSupThreshold = 5e-2;
/// Final-level sup error for T_{p_n}(Q_k) -> log^k/k!, k >= 2.
inline constexpr double kLogPowerSupThreshold = 1e-1;
/// Allowed excess of max |c_n|^{1/p_n} over |z0|/r.
inline constexpr double kGrowthMargin = 0.1;
/// Relative tolerance on the last-quartile root proxy of partial-sum growth.
inline constexpr double kGrowthRateTolerance = 0.10;
/// Exact identities must hold to 2^{-(P - kExactGuardBits)} times their scale.
inline constexpr long kExactGuardBits = 20;
/// Guard for identities whose two sides are computed by different routes.
inline constexpr long kIdentityGuardBits = 56;
/// Finite-difference agreement for the closed-form derivative of T_N.
inline constexpr double kDerivativeRelTolerance = 1e-8;

inline constexpr std::size_t kBoundaryPoints = 256;
inline constexpr std::size_t kInteriorPoints = 16;

}  // namespace ostrowski::calibration
