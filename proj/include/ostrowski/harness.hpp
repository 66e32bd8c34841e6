#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ostrowski/config.hpp"
#include "ostrowski/gap_series.hpp"
#include "ostrowski/power_series.hpp"

namespace ostrowski {

struct SampleCounts {
  std::size_t boundary = calibration::kBoundaryPoints;
  std::size_t interior = calibration::kInteriorPoints;
};

/// Deterministic sample of the closed disc D_m = closure D(z0, r(1 - 1/m)).
/// Boundary points are equally spaced on the rim starting at angle 0; the
/// interior set is z0 plus equally spaced points on the half-radius circle.
/// For m = 1 the disc is the single point z0.
struct CompactDiscSample {
  std::size_t m = 1;
  Complex centre;
  Real radius;
  std::vector<Complex> points;  // boundary first, then interior
  std::size_t boundary_count = 0;

  std::span<const Complex> boundary() const { return std::span(points).first(boundary_count); }
  std::span<const Complex> interior() const { return std::span(points).subspan(boundary_count); }
};

CompactDiscSample sample_disc(std::size_t m, const Complex& z0, const Real& r, SampleCounts counts = {});

/// Values of a function on an explicit point set.
struct SampledValues {
  std::vector<Complex> points;
  std::vector<Complex> values;
};

SampledValues sample_function(std::span<const Complex> points, const std::function<Complex(const Complex&)>& fn);

/// max |a - b| over a shared point set; throws ErrorKind::point_set_mismatch
/// unless both sides sample bit-identical points in the same order.
Real sup_error(const SampledValues& a, const SampledValues& b);

/// Runs body(i) for i in [0, count) on up to hardware_concurrency threads.
/// Callers write results into per-index slots, so output never depends on
/// scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// P(Log-branch(z)) for P given by coefficients d_0, d_1, ... in w, using
/// the branch of log_series about z0.
Complex log_polynomial_value(const std::vector<Complex>& p, const Complex& z0, const Complex& z);

/// Coefficients of log^k(z)/k! as a polynomial in log.
std::vector<Complex> log_power_target(std::size_t k, Precision p);

struct ReportRow {
  std::string target;
  std::string metric;
  std::size_t level = 0;  // 1-based
  std::size_t n = 0;
  Real value;
  Real threshold;
  bool pass = false;  // value < threshold
};

/// Per-level sup errors with the overall verdict: strictly decreasing over
/// usable levels (degenerate levels with q_n = p_n are skipped; values at the
/// rounding floor count as converged) and final value below threshold.
struct ConvergenceReport {
  std::string target;
  Precision precision;
  std::vector<std::size_t> p;
  std::vector<std::size_t> q;
  std::vector<ReportRow> rows;
  bool pass = false;
  std::vector<std::string> notes;
};

/// Builds the verdict for rows already filled in.
void finalize_convergence(ConvergenceReport& report, const GapSchedule& s);

/// sup over the disc sample of |T_{p_n}(f)(z) - P(log z)| for every level.
ConvergenceReport t_convergence_report(const PowerSeries& f, const GapSchedule& s, const std::vector<Complex>& target,
                                       const std::string& target_tag, const CompactDiscSample& disc, double threshold);

/// sup over the disc sample of |T'_{p_n}(f)(z) - target(z)| for every level.
ConvergenceReport t_derivative_report(const PowerSeries& f, const GapSchedule& s,
                                      const std::function<Complex(const Complex&)>& target,
                                      const std::string& target_tag, const CompactDiscSample& disc, double threshold);

/// `count` deterministic points z0 + rho_i e^{i theta_i} on a golden-angle
/// spiral with rho_i = radius (i + 1)/(count + 1), strictly inside the disc.
std::vector<Complex> spiral_points(const Complex& centre, const Real& radius, std::size_t count);

/// Relative error between the closed form of d/dz T_N(f) and a central
/// difference with step h, one row per (point, N); pass when below threshold.
ConvergenceReport derivative_identity_report(const PowerSeries& f, std::span<const std::size_t> orders,
                                             std::span<const Complex> points, const Real& h, double threshold);

/// zf identity residual divided by its summand scale, one row per (point, N);
/// pass when at most 2^{-(P - guard_bits)}.
ConvergenceReport zf_identity_report(const PowerSeries& f, std::span<const std::size_t> orders,
                                     std::span<const Complex> points, long guard_bits);

bool boundary_dominates(const SampledValues& difference, std::size_t boundary_count, const Real& slack);

struct GrowthReport {
  Real rho;
  Real radius;         // R from the root-test estimator
  std::vector<Real> v; // v[n-1] for n = 1..n_max
  std::size_t tail_start = 0;
  Real tail_max;
  double tolerance = calibration::kGrowthRateTolerance;
  bool pass = false;
  /// |x - rho| <= tolerance * rho
  bool within(const Real& x) const;
};

/// v_n = (max over the circle |z - z0| = rho R of |S_n(a, z0)(z)|)^{1/n};
/// passes when the max of v_n over the last quartile of n is within
/// `tolerance` (relative) of rho. Throws ErrorKind::domain for rho < 1.
GrowthReport growth_rate_check(const PowerSeries& a, const Real& rho, std::size_t n_max,
                    std::size_t circle_points = calibration::kBoundaryPoints,
                    double tolerance = calibration::kGrowthRateTolerance);

struct MembershipCertificate {
  std::size_t m = 0;
  std::size_t j = 0;
  std::size_t s = 0;
  bool pass = false;
  std::size_t witness_n = 0;  // best n when pass is false
  Real sup;                   // achieved at witness_n
};

/// Searches n over 0..p_1 and then p_2, ..., p_levels for
/// sup_{D_m} |T_n(f) - P_j(log)| < 1/s, returning the first witness.
MembershipCertificate a_membership(const PowerSeries& f, std::size_t m, std::size_t j,
                                   const std::vector<Complex>& pj, std::size_t s, const GapSchedule& sched,
                                   std::size_t n_levels, const Real& r, SampleCounts counts = {});

}  // namespace ostrowski
