#include "ostrowski/gap_series.hpp"

#include <string>
#include <vector>

#include "ostrowski/convergence.hpp"
#include "ostrowski/errors.hpp"
#include "ostrowski/recentering.hpp"

namespace ostrowski {

namespace {

[[noreturn]] void schedule_error(const std::string& what) { throw Error(ErrorKind::schedule, what); }

std::string level_name(std::size_t n) { return "level " + std::to_string(n + 1); }

void finish_monotone_report(CheckReport& report, const std::vector<std::size_t>& counted, const Real& final_value,
                            const Real& threshold, const Real& floor) {
  std::vector<Real> values;
  for (std::size_t i : counted) values.push_back(report.rows[i].value);
  const bool monotone = decreasing_to_floor(values, floor);
  const bool final_ok = final_value < threshold;
  if (!monotone) report.notes.push_back("per-level maxima are not strictly decreasing");
  if (!final_ok) report.notes.push_back("final level is not below the threshold");
  report.pass = monotone && final_ok;
  if (!report.rows.empty()) report.rows.back().pass = final_ok;
}

}  // namespace

void GapSchedule::validate() const {
  if (p.empty()) schedule_error("schedule has no levels");
  if (q.size() != p.size()) schedule_error("p and q have different lengths");
  if (p.front() < 1) schedule_error("p_1 must be at least 1");
  for (std::size_t n = 0; n < p.size(); ++n) {
    if (q[n] < p[n]) schedule_error(level_name(n) + ": q_n < p_n");
    const std::size_t next = following_p(n);
    if (next < q[n] + 2) schedule_error(level_name(n) + ": p_{n+1} < q_n + 2");
    if (next - q[n] < slack) schedule_error(level_name(n) + ": p_{n+1} - q_n below slack");
    if (n == 0) continue;
    // q_n/p_n > q_{n-1}/p_{n-1}, cross-multiplied.
    if (q[n] * p[n - 1] <= q[n - 1] * p[n]) schedule_error(level_name(n) + ": q_n/p_n not strictly increasing");
    if (next - q[n] <= p[n] - q[n - 1]) schedule_error(level_name(n) + ": p_{n+1} - q_n not strictly increasing");
  }
}

GapSchedule default_schedule(std::size_t levels, std::size_t k_max) {
  if (levels < 1 || k_max < 1) schedule_error("default schedule needs levels >= 1 and k_max >= 1");
  GapSchedule s;
  s.k_max = k_max;
  s.slack = 3 + 2 * k_max;
  std::size_t p = 2;
  for (std::size_t n = 1; n <= levels; ++n) {
    const std::size_t q = n * p;
    s.p.push_back(p);
    s.q.push_back(q);
    p = q + n + 2 + 2 * k_max;
  }
  s.p_next = p;
  s.validate();
  return s;
}

Real growth_proxy(const GapSeriesSpec& spec) {
  const Precision prec = spec.z0.precision();
  Real worst(prec);
  for (std::size_t n = 0; n < spec.c.size() && n < spec.schedule.levels(); ++n) {
    const auto p = static_cast<long>(spec.schedule.p[n]);
    Real root = pow(abs(spec.c[n]), Real(1L, prec) / Real(p, prec));
    if (worst < root) worst = root;
  }
  return worst;
}

PowerSeries build_gap_series(const GapSeriesSpec& spec) {
  const GapSchedule& s = spec.schedule;
  s.validate();
  if (spec.c.size() != s.levels()) {
    throw Error(ErrorKind::config, "expected " + std::to_string(s.levels()) + " level values, got " +
                                       std::to_string(spec.c.size()));
  }
  if (!(spec.r > Real(0L, spec.r.precision()))) throw Error(ErrorKind::domain, "radius must be positive");
  if (abs(spec.z0) < spec.r) throw Error(ErrorKind::domain, "0 lies in D(z0, r): |z0| < r");
  const std::size_t needed = s.q.back() + 2;
  if (spec.length < needed) {
    throw Error(ErrorKind::horizon, "length " + std::to_string(spec.length) + " cannot hold index q_L + 1 = " +
                                        std::to_string(needed - 1));
  }

  const Precision prec = max(spec.z0.precision(), spec.r.precision());
  std::vector<Complex> a(spec.length, Complex(prec));
  const Complex minus_z0 = -spec.z0.with_precision(prec);
  for (std::size_t n = 0; n < s.levels(); ++n) {
    const Complex& c = spec.c[n];
    a[s.p[n]] += c / pow(minus_z0, static_cast<long>(s.p[n]));
    a[s.q[n] + 1] -= c / pow(minus_z0, static_cast<long>(s.q[n] + 1));
  }
  return {spec.z0.with_precision(prec), std::move(a), spec.r.with_precision(prec)};
}

CheckReport verify_centre_values(const PowerSeries& g, const GapSeriesSpec& spec) {
  const GapSchedule& s = spec.schedule;
  const Precision prec = g.precision();
  const Real floor = exactness_floor(prec, calibration::kExactGuardBits);
  const Real one(1L, prec);
  CheckReport report;
  report.check = "centre-values";
  for (std::size_t n = 0; n < s.levels(); ++n) {
    const Real tolerance = floor * max(one, abs(spec.c[n]));
    const Real residual = abs(t_eval(g, s.p[n], spec.z0) - spec.c[n]);
    report.rows.push_back({n + 1, s.p[n], s.q[n], "T_p_residual", residual, tolerance, residual <= tolerance, false});

    const std::size_t lo = s.q[n] + 1;
    const std::size_t hi = std::min(s.following_p(n) - 1, g.horizon());
    Real window(prec);
    for (std::size_t k = lo; k <= hi; ++k) window = max(window, abs(t_eval(g, k, spec.z0)));
    const bool empty = lo > hi;
    report.rows.push_back({n + 1, s.p[n], s.q[n], "window_max", window, tolerance, window <= tolerance, empty});
    if (hi + 1 < s.following_p(n)) {
      report.notes.push_back(level_name(n) + ": window clamped to horizon " + std::to_string(g.horizon()));
    }
  }
  for (const auto& row : report.rows) report.pass = report.pass && row.pass;
  return report;
}

CheckReport check_ostrowski_gaps(const PowerSeries& g, const GapSchedule& s, double threshold) {
  const Precision prec = g.precision();
  const Real one(1L, prec);
  CheckReport report;
  report.check = "ostrowski";
  std::vector<std::size_t> counted;
  Real final_value(prec);
  for (std::size_t n = 0; n < s.levels(); ++n) {
    Real worst(prec);
    bool any = false;
    for (std::size_t k = s.p[n] + 1; k <= s.q[n] && k < g.size(); ++k) {
      if (g[k].is_zero()) continue;
      worst = max(worst, pow(abs(g[k]), one / Real(static_cast<long>(k), prec)));
      any = true;
    }
    report.rows.push_back({n + 1, s.p[n], s.q[n], "gap_root_max", worst, Real(threshold, prec), true, !any});
    if (any) counted.push_back(report.rows.size() - 1);
    final_value = worst;
  }
  if (counted.size() < s.levels()) {
    report.notes.push_back(std::to_string(s.levels() - counted.size()) +
                           " level(s) with empty or all-zero windows reported as vacuous");
  }
  finish_monotone_report(report, counted, final_value, Real(threshold, prec), Real(prec));
  return report;
}

CheckReport gap_transfer_check(const PowerSeries& f, const GapSchedule& s, std::span<const Complex> zeta_samples,
                               std::span<const Complex> w_samples, double threshold) {
  const Precision prec = f.precision();
  const Real floor = exactness_floor(prec, calibration::kExactGuardBits);
  CheckReport report;
  report.check = "gap-transfer";
  std::vector<std::size_t> counted;
  Real final_value(prec);
  for (std::size_t n = 0; n < s.levels(); ++n) {
    const std::size_t order = s.p[n];
    const PowerSeries at_centre = shift(f, f.centre(), order);
    std::vector<Complex> reference;
    reference.reserve(w_samples.size());
    for (const Complex& w : w_samples) reference.push_back(evaluate(at_centre, w));
    Real worst(prec);
    for (const Complex& zeta : zeta_samples) {
      const PowerSeries local = shift(f, zeta, order);
      for (std::size_t i = 0; i < w_samples.size(); ++i) {
        worst = max(worst, abs(evaluate(local, w_samples[i]) - reference[i]));
      }
    }
    report.rows.push_back({n + 1, s.p[n], s.q[n], "transfer_max", worst, Real(threshold, prec), true,
                           s.degenerate(n)});
    if (!s.degenerate(n)) counted.push_back(report.rows.size() - 1);
    final_value = worst;
  }
  if (counted.size() < s.levels()) report.notes.push_back("degenerate levels (q_n = p_n) excluded from monotonicity");
  finish_monotone_report(report, counted, final_value, Real(threshold, prec), floor);
  return report;
}

}  // namespace ostrowski
