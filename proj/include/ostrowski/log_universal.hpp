#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ostrowski/config.hpp"
#include "ostrowski/gap_series.hpp"
#include "ostrowski/harness.hpp"
#include "ostrowski/power_series.hpp"

namespace ostrowski {

/// Closed index interval; empty when lo > hi.
struct IndexWindow {
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool empty() const { return lo > hi; }
  friend bool operator==(const IndexWindow&, const IndexWindow&) = default;
};

/// What a bundle's windows certify at every stored level.
enum class WindowKind {
  centre_value_zero,  // T_j(series)(z0) = 0 for j in the window
  coefficient_zero,   // a_j(series) = 0 for j in the window
};

/// One stage of the approximation chain: the series, the schedule it was
/// built on, the power k of the target log^k/k! (0 for the constant 1) and
/// the per-level windows maintained for the next stage.
struct ApproximantBundle {
  PowerSeries series;
  GapSchedule schedule;
  std::size_t level = 0;
  std::vector<IndexWindow> windows;
  WindowKind window_kind = WindowKind::centre_value_zero;
  std::string target_tag;
  std::vector<std::string> warnings;
};

/// Level 0: the gap series with c = 1, windows [q_n + 1, p_{n+1} - 1].
ApproximantBundle build_constant_approximant(const GapSchedule& s, const Complex& z0, const Real& r,
                                             std::size_t length);

/// F = antiderivative of series/z vanishing at z0. The centre-value windows
/// of the input become coefficient windows [lo + 1, hi + 1] of F.
ApproximantBundle lift_antiderivative(const ApproximantBundle& b);

struct PhiCorrection {
  PowerSeries series;
  std::vector<Complex> c;  // per-level gap values
  Real growth;             // max |c_n|^{1/p_n}
  bool growth_ok = true;   // growth <= |z0|/r + margin
};

/// Gap series with c_{p_n} = target_at_z0 - T_{p_n}(F)(z0). A growth proxy
/// above |z0|/r + kGrowthMargin is recorded, not fatal.
PhiCorrection build_phi_correction(const ApproximantBundle& f, const Complex& target_at_z0);

/// a_{q_n+2} = r^{-(q_n+2)}, a_{q_n+3} = r^{-(q_n+2)}/z0 at every level.
/// Requires p_{n+1} - q_n > 3.
PowerSeries build_h_correction(const GapSchedule& s, const Complex& z0, const Real& r, std::size_t length);

struct PsiCorrection {
  PowerSeries series;
  std::vector<IndexWindow> windows;  // new centre-value windows
  std::vector<Complex> t;            // per-level T value cancelled
};

/// Given F + phi whose coefficients vanish on [lo + 1, B] at each level
/// (lo + 1 from the lifted window, B = min(its hi, p_{n+1} - 1)), places
/// -t/(-z0)^{lo+2} at lo + 2 and t/(-z0)^B at B with t = T_{lo+2}(F + phi)(z0).
/// The centre values of the sum then vanish on [lo + 2, B - 1]. Throws
/// ErrorKind::schedule when that window would be empty.
PsiCorrection build_psi_correction(const ApproximantBundle& fphi);

/// Per-stage diagnostics from build_log_power_approximant.
struct ChainStage {
  std::size_t k = 0;
  std::vector<Complex> phi_c;
  Real phi_growth;
  Real f_centre_growth;  // max |T_{p_n}(F)(z0)|^{1/p_n}
  std::vector<Complex> psi_t;
  std::vector<IndexWindow> windows;
};

struct LogPowerChain {
  std::vector<ApproximantBundle> q;  // q[k] = Q_k, q[0] = constant approximant
  std::vector<ChainStage> stages;    // stages[k-1] built Q_k
};

/// Q_1, ..., Q_k by induction: Q_i = F + phi + psi with F lifted from Q_{i-1}
/// and phi targeting Log(z0)^i / i!.
LogPowerChain build_log_power_chain(std::size_t k, const GapSchedule& s, const Complex& z0, const Real& r,
                                    std::size_t length);
ApproximantBundle build_log_power_approximant(std::size_t k, const GapSchedule& s, const Complex& z0, const Real& r,
                                              std::size_t length);

/// Q_P = d_0 g + sum_k d_k k! Q_k for P(w) = sum d_k w^k (zero terms skipped).
ApproximantBundle assemble_poly_log_approximant(const std::vector<Complex>& p, const GapSchedule& s,
                                                const Complex& z0, const Real& r, std::size_t length);

/// (1 - z/z0)^M as a series at z0: the single coefficient (-1/z0)^M at index M.
PowerSeries bump_polynomial(std::size_t m, const Complex& z0);
/// sup of |(1 - z/z0)^M| over the closed disc of the given radius about z0.
Real bump_sup(std::size_t m, const Complex& z0, const Real& radius);

struct WitnessCertificate {
  std::size_t level = 0;    // n0, 1-based; 0 if no level qualified
  std::size_t p_n0 = 0;
  std::size_t taylor_degree = 0;  // D
  std::size_t bump_power = 0;     // M
  std::size_t degree = 0;         // deg P
  Real h_target_sup;        // sup_{D_m} |T_{p_n0}(h) - P_j(log)|
  Real fit_sup;             // sampled sup_{D_N} |f - g0|
  Real fit_tail_bound;      // horizon truncation bound added to fit_sup
  Real p_at_zero;           // |P(0)|
  Real target_sup;          // sampled sup_{D_m} |T_{p_n0}(f) - P_j(log)|
  Real target_triangle;     // h_target_sup + |P(0)|
  bool fit_ok = false;
  bool p_zero_ok = false;
  bool target_ok = false;
  bool pass = false;
  std::vector<std::string> notes;
};

struct DensityWitness {
  PowerSeries f;
  WitnessCertificate certificate;
};

/// f = Q_{P_j} + P with P a Taylor truncation of g0 - Q_{P_j} at z0 whose
/// value at 0 is cancelled by a bump polynomial, certified on sampled D_N
/// (|f - g0| < eps) and D_m (|T_{p_n0}(f) - P_j(log)| < 1/s).
DensityWitness density_witness(const PowerSeries& g0, const std::vector<Complex>& pj, const Real& eps, std::size_t s,
                               std::size_t m, std::size_t big_n, const GapSchedule& sched, const Complex& z0,
                               const Real& r, SampleCounts counts = {});

/// Per level: the largest centre value T_j(f)(z0) (or summand a_j (-z0)^j
/// for coefficient windows) over the window, against 2^{-(P-20)} times the
/// largest summand up to the window's end. Empty windows are vacuous.
CheckReport check_windows(const PowerSeries& f, const GapSchedule& s, const std::vector<IndexWindow>& windows,
                          WindowKind kind);

std::string to_string(WindowKind kind);
/// Throws ErrorKind::parse for unknown names.
WindowKind parse_window_kind(std::string_view name);
nlohmann::json construction_json(const ApproximantBundle& b);
nlohmann::json to_json(const WitnessCertificate& cert);

}  // namespace ostrowski
