#include "ostrowski/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "ostrowski/convergence.hpp"
#include "ostrowski/errors.hpp"
#include "ostrowski/rational_poly.hpp"
#include "ostrowski/recentering.hpp"

namespace ostrowski {

namespace {

Real angle_step(std::size_t count, Precision p) { return Real::pi(p) * Real(2L, p) / Real(static_cast<long>(count), p); }

std::size_t max_order(const GapSchedule& s) { return *std::max_element(s.p.begin(), s.p.end()); }

void check_levels_fit(const PowerSeries& f, std::size_t order) {
  if (order > f.horizon()) {
    throw Error(ErrorKind::horizon, "schedule needs order " + std::to_string(order) + " but the series stops at " +
                                        std::to_string(f.horizon()));
  }
}

ConvergenceReport empty_report(const std::string& tag, const PowerSeries& f, const GapSchedule& s) {
  ConvergenceReport report;
  report.target = tag;
  report.precision = f.precision();
  report.p = s.p;
  report.q = s.q;
  return report;
}

void fill_rows(ConvergenceReport& report, const GapSchedule& s, const std::string& metric,
               const std::vector<std::vector<Real>>& per_point, double threshold) {
  const Precision prec = report.precision;
  for (std::size_t n = 0; n < s.levels(); ++n) {
    Real worst(prec);
    for (const auto& errors : per_point) worst = max(worst, errors[n]);
    const Real limit(threshold, prec);
    report.rows.push_back({report.target, metric, n + 1, s.p[n], worst, limit, worst < limit});
  }
}

}  // namespace

CompactDiscSample sample_disc(std::size_t m, const Complex& z0, const Real& r, SampleCounts counts) {
  if (m < 1) throw Error(ErrorKind::config, "disc index m must be at least 1");
  const Precision p = max(z0.precision(), r.precision());
  CompactDiscSample out;
  out.m = m;
  out.centre = z0.with_precision(p);
  out.radius = r.with_precision(p) * Real(static_cast<long>(m - 1), p) / Real(static_cast<long>(m), p);
  if (m == 1) {
    out.points.push_back(out.centre);
    return out;
  }
  if (counts.boundary > 0) {
    const Real step = angle_step(counts.boundary, p);
    for (std::size_t i = 0; i < counts.boundary; ++i) {
      out.points.push_back(out.centre + Complex::polar(out.radius, step * Real(static_cast<long>(i), p)));
    }
  }
  out.boundary_count = out.points.size();
  out.points.push_back(out.centre);
  if (counts.interior > 1) {
    const std::size_t ring = counts.interior - 1;
    const Real step = angle_step(ring, p);
    const Real half = out.radius / Real(2L, p);
    for (std::size_t i = 0; i < ring; ++i) {
      out.points.push_back(out.centre + Complex::polar(half, step * Real(static_cast<long>(i), p)));
    }
  }
  return out;
}

SampledValues sample_function(std::span<const Complex> points, const std::function<Complex(const Complex&)>& fn) {
  SampledValues out;
  out.points.assign(points.begin(), points.end());
  out.values.resize(points.size());
  parallel_for(points.size(), [&](std::size_t i) { out.values[i] = fn(points[i]); });
  return out;
}

Real sup_error(const SampledValues& a, const SampledValues& b) {
  const bool same = a.points.size() == b.points.size() && a.values.size() == a.points.size() &&
                    b.values.size() == b.points.size() &&
                    std::equal(a.points.begin(), a.points.end(), b.points.begin(),
                               [](const Complex& x, const Complex& y) { return x.identical(y); });
  if (!same) throw Error(ErrorKind::point_set_mismatch, "sup_error needs values on the same point set");
  Precision p = kDefaultPrecision;
  if (!a.values.empty()) p = a.values.front().precision();
  Real worst(p);
  for (std::size_t i = 0; i < a.values.size(); ++i) worst = max(worst, abs(a.values[i] - b.values[i]));
  return worst;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(std::max(1U, std::thread::hardware_concurrency()), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> threads;
  for (std::size_t t = 0; t < workers; ++t) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  threads.clear();
  if (failure) std::rethrow_exception(failure);
}

Complex log_polynomial_value(const std::vector<Complex>& p, const Complex& z0, const Complex& z) {
  return evaluate_polynomial(p, branch_log(z0, z));
}

std::vector<Complex> log_power_target(std::size_t k, Precision p) {
  std::vector<Complex> out(k + 1, Complex(p));
  Real factorial(1L, p);
  for (std::size_t i = 2; i <= k; ++i) factorial *= Real(static_cast<long>(i), p);
  out[k] = Complex(Real(1L, p) / factorial, Real(p));
  return out;
}

void finalize_convergence(ConvergenceReport& report, const GapSchedule& s) {
  std::vector<Real> usable;
  for (std::size_t n = 0; n < report.rows.size(); ++n) {
    if (!s.degenerate(n)) usable.push_back(report.rows[n].value);
  }
  const Real floor = exactness_floor(report.precision, calibration::kExactGuardBits);
  const bool monotone = decreasing_to_floor(usable, floor);
  const bool final_ok = !report.rows.empty() && report.rows.back().pass;
  report.pass = monotone && final_ok;
  if (usable.size() < report.rows.size()) report.notes.push_back("degenerate levels (q_n = p_n) excluded from monotonicity");
  if (!monotone) report.notes.push_back("sup errors are not strictly decreasing over usable levels");
  if (!final_ok) report.notes.push_back("final level is not below the threshold");
  report.notes.push_back("sup taken over sampled points; boundary sampling bounds holomorphic differences");
}

ConvergenceReport t_convergence_report(const PowerSeries& f, const GapSchedule& s, const std::vector<Complex>& target,
                                       const std::string& target_tag, const CompactDiscSample& disc,
                                       double threshold) {
  const std::size_t order = max_order(s);
  check_levels_fit(f, order);
  ConvergenceReport report = empty_report(target_tag, f, s);
  std::vector<std::vector<Real>> per_point(disc.points.size());
  parallel_for(disc.points.size(), [&](std::size_t i) {
    const Complex& z = disc.points[i];
    const std::vector<Complex> t = t_eval_all(f, order, z);
    const Complex expected = log_polynomial_value(target, f.centre(), z);
    for (std::size_t n = 0; n < s.levels(); ++n) per_point[i].push_back(abs(t[s.p[n]] - expected));
  });
  fill_rows(report, s, "sup_abs_error", per_point, threshold);
  finalize_convergence(report, s);
  return report;
}

ConvergenceReport t_derivative_report(const PowerSeries& f, const GapSchedule& s,
                                      const std::function<Complex(const Complex&)>& target,
                                      const std::string& target_tag, const CompactDiscSample& disc,
                                      double threshold) {
  const std::size_t order = max_order(s) + 1;
  check_levels_fit(f, order);
  ConvergenceReport report = empty_report(target_tag, f, s);
  std::vector<std::vector<Real>> per_point(disc.points.size());
  parallel_for(disc.points.size(), [&](std::size_t i) {
    const Complex& z = disc.points[i];
    const PowerSeries b = shift(f, z, order);
    const Complex expected = target(z);
    const Precision p = b.precision();
    for (std::size_t n = 0; n < s.levels(); ++n) {
      const std::size_t pn = s.p[n];
      const Complex value = b[pn + 1] * Real(static_cast<long>(pn + 1), p) * pow(-z, static_cast<long>(pn));
      per_point[i].push_back(abs(value - expected));
    }
  });
  fill_rows(report, s, "sup_abs_derivative_error", per_point, threshold);
  finalize_convergence(report, s);
  return report;
}

std::vector<Complex> spiral_points(const Complex& centre, const Real& radius, std::size_t count) {
  const Precision p = max(centre.precision(), radius.precision());
  const Real golden = Real::pi(p) * (Real(3L, p) - sqrt(Real(5L, p)));
  std::vector<Complex> out;
  for (std::size_t i = 0; i < count; ++i) {
    const Real rho = radius * Real(static_cast<long>(i + 1), p) / Real(static_cast<long>(count + 1), p);
    out.push_back(centre + Complex::polar(rho, golden * Real(static_cast<long>(i), p)));
  }
  return out;
}

ConvergenceReport derivative_identity_report(const PowerSeries& f, std::span<const std::size_t> orders,
                                             std::span<const Complex> points, const Real& h, double threshold) {
  ConvergenceReport report;
  report.target = "derivative-closed-form";
  report.precision = f.precision();
  const Precision p = f.precision();
  const Complex step(h.with_precision(p), Real(p));
  const Real two_h = h * Real(2L, p);
  const Real limit(threshold, p);
  for (std::size_t n : orders) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Complex& z = points[i];
      const Complex closed = t_derivative_eval(f, n, z);
      const Complex fd = (t_eval(f, n, z + step) - t_eval(f, n, z - step)) / two_h;
      Real rel = abs(fd - closed);
      if (!closed.is_zero()) rel /= abs(closed);
      const bool ok = rel < limit;
      report.rows.push_back({report.target, "fd_rel_error", i + 1, n, std::move(rel), limit, ok});
    }
  }
  report.pass = std::all_of(report.rows.begin(), report.rows.end(), [](const ReportRow& r) { return r.pass; });
  return report;
}

ConvergenceReport zf_identity_report(const PowerSeries& f, std::span<const std::size_t> orders,
                                     std::span<const Complex> points, long guard_bits) {
  ConvergenceReport report;
  report.target = "zf-identity";
  report.precision = f.precision();
  const Precision p = f.precision();
  const Real one(1L, p);
  const Real limit = Real::two_pow(-(p.bits - guard_bits), p);
  for (std::size_t n : orders) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      const IdentityResidual r = zf_identity_check(f, n, points[i]);
      Real ratio = r.residual / max(one, r.scale);
      const bool ok = ratio <= limit;
      report.rows.push_back({report.target, "residual_over_scale", i + 1, n, std::move(ratio), limit, ok});
    }
  }
  report.pass = std::all_of(report.rows.begin(), report.rows.end(), [](const ReportRow& r) { return r.pass; });
  return report;
}

bool boundary_dominates(const SampledValues& difference, std::size_t boundary_count, const Real& slack) {
  const Precision p = slack.precision();
  Real rim(p), inside(p);
  for (std::size_t i = 0; i < difference.values.size(); ++i) {
    Real& target = i < boundary_count ? rim : inside;
    target = max(target, abs(difference.values[i]));
  }
  return inside <= rim + slack;
}

GrowthReport growth_rate_check(const PowerSeries& a, const Real& rho, std::size_t n_max, std::size_t circle_points,
                    double tolerance) {
  const Precision p = a.precision();
  const Real one(1L, p);
  if (rho < one) throw Error(ErrorKind::domain, "growth-rate check requires rho >= 1");
  if (n_max < 4) throw Error(ErrorKind::config, "growth-rate check needs n_max >= 4");
  check_levels_fit(a, n_max);
  const RadiusEstimate est = estimate_radius(a, std::min<std::size_t>(32, a.size()));
  if (est.entire_at_horizon || !est.radius.is_finite()) {
    throw Error(ErrorKind::domain, "growth-rate check needs a finite estimated radius");
  }

  GrowthReport report;
  report.rho = rho;
  report.radius = est.radius;
  const Real circle = rho * est.radius;
  const Real step = angle_step(circle_points, p);
  std::vector<Real> peak(n_max + 1, Real(p));
  std::vector<std::vector<Real>> per_point(circle_points);
  parallel_for(circle_points, [&](std::size_t i) {
    const Complex w = Complex::polar(circle, step * Real(static_cast<long>(i), p));
    Complex power(one, Real(p));
    Complex sum(p);
    MulAddScratch scratch(p);
    auto& row = per_point[i];
    row.reserve(n_max + 1);
    for (std::size_t k = 0; k <= n_max; ++k) {
      mul_add(sum, a[k], power, scratch);
      row.push_back(abs(sum));
      power = power * w;
    }
  });
  for (const auto& row : per_point) {
    for (std::size_t n = 0; n <= n_max; ++n) peak[n] = max(peak[n], row[n]);
  }
  report.tail_start = n_max - n_max / 4 + 1;
  report.tail_max = Real(p);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Real v = peak[n].is_zero() ? Real(p) : pow(peak[n], one / Real(static_cast<long>(n), p));
    if (n >= report.tail_start) report.tail_max = max(report.tail_max, v);
    report.v.push_back(std::move(v));
  }
  report.tolerance = tolerance;
  report.pass = report.within(report.tail_max);
  return report;
}

bool GrowthReport::within(const Real& x) const {
  return abs(x - rho) <= rho * Real(tolerance, rho.precision());
}

MembershipCertificate a_membership(const PowerSeries& f, std::size_t m, std::size_t j,
                                   const std::vector<Complex>& pj, std::size_t s, const GapSchedule& sched,
                                   std::size_t n_levels, const Real& r, SampleCounts counts) {
  if (s == 0) throw Error(ErrorKind::config, "s must be positive");
  if (n_levels < 1 || n_levels > sched.levels()) throw Error(ErrorKind::config, "n_levels outside the schedule");
  std::vector<std::size_t> candidates;
  for (std::size_t n = 0; n <= sched.p.front(); ++n) candidates.push_back(n);
  for (std::size_t level = 1; level < n_levels; ++level) candidates.push_back(sched.p[level]);
  const std::size_t order = candidates.back();
  check_levels_fit(f, order);

  const CompactDiscSample disc = sample_disc(m, f.centre(), r, counts);
  std::vector<std::vector<Complex>> t(disc.points.size());
  std::vector<Complex> expected(disc.points.size());
  parallel_for(disc.points.size(), [&](std::size_t i) {
    t[i] = t_eval_all(f, order, disc.points[i]);
    expected[i] = log_polynomial_value(pj, f.centre(), disc.points[i]);
  });

  const Precision p = f.precision();
  const Real bound = Real(1L, p) / Real(static_cast<long>(s), p);
  MembershipCertificate cert{m, j, s, false, 0, Real::inf(p)};
  for (std::size_t n : candidates) {
    Real worst(p);
    for (std::size_t i = 0; i < disc.points.size(); ++i) worst = max(worst, abs(t[i][n] - expected[i]));
    if (worst < cert.sup) {
      cert.sup = worst;
      cert.witness_n = n;
    }
    if (worst < bound) {
      cert.pass = true;
      cert.sup = worst;
      cert.witness_n = n;
      break;
    }
  }
  return cert;
}

}  // namespace ostrowski
