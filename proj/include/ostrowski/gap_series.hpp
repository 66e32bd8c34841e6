#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ostrowski/config.hpp"
#include "ostrowski/power_series.hpp"

namespace ostrowski {

/// Index sequences p_n <= q_n (levels n = 1..L, stored 0-based) plus the
/// boundary p_{L+1}, which closes the last gap window.
///
/// Invariants: 1 <= p_1; q_n >= p_n; p_{n+1} >= q_n + 2; q_n/p_n strictly
/// increasing; p_{n+1} - q_n strictly increasing and >= slack.
struct GapSchedule {
  std::vector<std::size_t> p;
  std::vector<std::size_t> q;
  std::size_t p_next = 0;
  std::size_t slack = 0;
  std::size_t k_max = 0;

  std::size_t levels() const { return p.size(); }
  /// p_{n+1} for 0-based level n.
  std::size_t following_p(std::size_t n) const { return n + 1 < p.size() ? p[n + 1] : p_next; }
  /// q_n == p_n: the window [p_n + 1, q_n] is empty.
  bool degenerate(std::size_t n) const { return q[n] == p[n]; }

  /// Throws ErrorKind::schedule naming the first violated invariant.
  void validate() const;
};

/// p_1 = 2, q_n = n p_n, p_{n+1} = q_n + n + 2 + 2 k_max; slack = 3 + 2 k_max.
GapSchedule default_schedule(std::size_t levels, std::size_t k_max);

/// Inputs of the gap-series construction. `c[n]` is the level-n target value
/// c_{p_n}; `length` is the number of stored coefficients.
struct GapSeriesSpec {
  GapSchedule schedule;
  std::vector<Complex> c;
  Complex z0;
  Real r;
  std::size_t length = 0;
};

/// max_n |c_{p_n}|^{1/p_n}, the finite proxy for limsup |c_n|^{1/n}.
Real growth_proxy(const GapSeriesSpec& spec);

/// a_{p_n} = c_{p_n}/(-z0)^{p_n}, a_{q_n+1} = -c_{p_n}/(-z0)^{q_n+1}, zero
/// elsewhere; centred at z0 with radius hint r.
PowerSeries build_gap_series(const GapSeriesSpec& spec);

struct CheckRow {
  std::size_t level = 0;  // 1-based
  std::size_t p_n = 0;
  std::size_t q_n = 0;
  std::string metric;
  Real value;
  Real threshold;
  bool pass = false;
  bool vacuous = false;
};

struct CheckReport {
  std::string check;
  std::vector<CheckRow> rows;
  bool pass = true;
  std::vector<std::string> notes;
};

/// Per level: |T_{p_n}(g)(z0) - c_{p_n}| and max_{k in [q_n+1, p_{n+1}-1]} |T_k(g)(z0)|,
/// each against 2^{-(P-20)} max(1, |c_{p_n}|).
CheckReport verify_centre_values(const PowerSeries& g, const GapSeriesSpec& spec);

/// Per level: max_{k in [p_n+1, q_n]} |a_k|^{1/k}. Levels whose window is empty
/// or holds only exact zeros are vacuous; the rest must strictly decrease and
/// end below `threshold`.
CheckReport check_ostrowski_gaps(const PowerSeries& g, const GapSchedule& s,
                                 double threshold = calibration::kGapRootThreshold);

/// Per level: max over (zeta, w) of |S_{p_n}(f, zeta)(w) - S_{p_n}(f, z0)(w)|.
/// Degenerate levels (q_n == p_n) are reported but excluded from the
/// monotonicity requirement.
CheckReport gap_transfer_check(const PowerSeries& f, const GapSchedule& s, std::span<const Complex> zeta_samples,
                               std::span<const Complex> w_samples,
                               double threshold = calibration::kConstantSupThreshold);

}  // namespace ostrowski
