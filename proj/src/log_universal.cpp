#include "ostrowski/log_universal.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "ostrowski/convergence.hpp"
#include "ostrowski/errors.hpp"
#include "ostrowski/rational_poly.hpp"
#include "ostrowski/recentering.hpp"
#include "ostrowski/report_io.hpp"

namespace ostrowski {

namespace {

Complex real_complex(const Real& x) { return Complex(x, Real(x.precision())); }

Real factorial(std::size_t k, Precision p) {
  Real out(1L, p);
  for (std::size_t i = 2; i <= k; ++i) out *= Real(static_cast<long>(i), p);
  return out;
}

std::string log_power_tag(std::size_t k) {
  if (k == 0) return "1";
  if (k == 1) return "log";
  return "log^" + std::to_string(k) + "/" + std::to_string(k) + "!";
}

Real root_growth(const std::vector<Complex>& values, const GapSchedule& s, Precision p) {
  Real worst(p);
  for (std::size_t n = 0; n < values.size(); ++n) {
    worst = max(worst, pow(abs(values[n]), Real(1L, p) / Real(static_cast<long>(s.p[n]), p)));
  }
  return worst;
}

PowerSeries with_infinite_hint(const PowerSeries& a) {
  return {a.centre(), std::vector<Complex>(a.coeffs().begin(), a.coeffs().end()), Real::inf(a.precision())};
}

std::size_t last_nonzero(const PowerSeries& a) {
  for (std::size_t k = a.size(); k-- > 0;) {
    if (!a[k].is_zero()) return k;
  }
  return 0;
}

}  // namespace

std::string to_string(WindowKind kind) {
  return kind == WindowKind::centre_value_zero ? "centre_value_zero" : "coefficient_zero";
}

WindowKind parse_window_kind(std::string_view name) {
  if (name == "centre_value_zero") return WindowKind::centre_value_zero;
  if (name == "coefficient_zero") return WindowKind::coefficient_zero;
  throw Error(ErrorKind::parse, "unknown window kind '" + std::string(name) + "'");
}

CheckReport check_windows(const PowerSeries& f, const GapSchedule& s, const std::vector<IndexWindow>& windows,
                          WindowKind kind) {
  if (windows.size() != s.levels()) throw Error(ErrorKind::config, "one window per schedule level required");
  CheckReport report;
  report.check = "windows";
  const Precision p = f.precision();
  const Real floor = exactness_floor(p, calibration::kExactGuardBits);
  const Real one(1L, p);
  std::size_t top = 0;
  for (const auto& w : windows) {
    if (!w.empty()) top = std::max(top, w.hi);
  }
  if (!windows.empty() && top > f.horizon()) throw Error(ErrorKind::horizon, "window beyond the stored horizon");

  // summand[k] = a_k (-z0)^k; partial[k] = T_k(f)(z0); scale[k] = max |summand| up to k.
  std::vector<Real> value(top + 1, Real(p));
  std::vector<Real> scale(top + 1, Real(p));
  const Complex minus_z0 = -f.centre();
  Complex power(one, Real(p));
  Complex partial(p);
  Real running(p);
  for (std::size_t k = 0; k <= top && k < f.size(); ++k) {
    const Complex term = f[k] * power;
    partial += term;
    const Real size = abs(term);
    running = max(running, size);
    scale[k] = running;
    value[k] = kind == WindowKind::centre_value_zero ? abs(partial) : size;
    power *= minus_z0;
  }

  for (std::size_t n = 0; n < s.levels(); ++n) {
    const IndexWindow& w = windows[n];
    CheckRow row;
    row.level = n + 1;
    row.p_n = s.p[n];
    row.q_n = s.q[n];
    row.metric = "window_max";
    row.value = Real(p);
    if (w.empty()) {
      row.threshold = floor;
      row.pass = true;
      row.vacuous = true;
    } else {
      for (std::size_t j = w.lo; j <= w.hi; ++j) row.value = max(row.value, value[j]);
      row.threshold = floor * max(one, scale[w.hi]);
      row.pass = row.value <= row.threshold;
    }
    report.pass = report.pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

ApproximantBundle build_constant_approximant(const GapSchedule& s, const Complex& z0, const Real& r,
                                             std::size_t length) {
  const Precision p = max(z0.precision(), r.precision());
  GapSeriesSpec spec{s, std::vector<Complex>(s.levels(), Complex(Real(1L, p), Real(p))), z0, r, length};
  ApproximantBundle out{build_gap_series(spec), s, 0, {}, WindowKind::centre_value_zero, "1", {}};
  for (std::size_t n = 0; n < s.levels(); ++n) out.windows.push_back({s.q[n] + 1, s.following_p(n) - 1});
  return out;
}

ApproximantBundle lift_antiderivative(const ApproximantBundle& b) {
  if (b.window_kind != WindowKind::centre_value_zero) {
    throw Error(ErrorKind::config, "lift needs centre-value windows");
  }
  const PowerSeries& g = b.series;
  if (abs(g.centre()) < g.radius_hint()) throw Error(ErrorKind::domain, "0 lies in the disc of the series");
  PowerSeries f = antiderivative(multiply_by_reciprocal_z(g));
  ApproximantBundle out{f, b.schedule, b.level, {}, WindowKind::coefficient_zero,
                        "integral of (" + b.target_tag + ")/z", b.warnings};
  for (const auto& w : b.windows) {
    if (w.hi + 1 > f.horizon()) {
      throw Error(ErrorKind::horizon, "lifted window reaches index " + std::to_string(w.hi + 1) +
                                          " beyond horizon " + std::to_string(f.horizon()));
    }
    out.windows.push_back({w.lo + 1, w.hi + 1});
  }
  return out;
}

PhiCorrection build_phi_correction(const ApproximantBundle& f, const Complex& target_at_z0) {
  const GapSchedule& s = f.schedule;
  const PowerSeries& series = f.series;
  const Complex& z0 = series.centre();
  std::vector<Complex> c;
  for (std::size_t n = 0; n < s.levels(); ++n) c.push_back(target_at_z0 - t_eval(series, s.p[n], z0));
  GapSeriesSpec spec{s, c, z0, series.radius_hint(), series.size()};
  const Precision p = series.precision();
  Real growth = growth_proxy(spec);
  const Real limit = abs(z0) / series.radius_hint() + Real(calibration::kGrowthMargin, p);
  const bool ok = growth <= limit;
  return {build_gap_series(spec), std::move(c), std::move(growth), ok};
}

PowerSeries build_h_correction(const GapSchedule& s, const Complex& z0, const Real& r, std::size_t length) {
  s.validate();
  for (std::size_t n = 0; n < s.levels(); ++n) {
    if (s.following_p(n) - s.q[n] <= 3) {
      throw Error(ErrorKind::schedule, "h needs p_{n+1} - q_n > 3 at level " + std::to_string(n + 1));
    }
  }
  if (length < s.q.back() + 4) {
    throw Error(ErrorKind::horizon, "h needs index " + std::to_string(s.q.back() + 3));
  }
  const Precision p = max(z0.precision(), r.precision());
  std::vector<Complex> a(length, Complex(p));
  for (std::size_t n = 0; n < s.levels(); ++n) {
    const Real scale = Real(1L, p) / pow(r, static_cast<long>(s.q[n] + 2));
    a[s.q[n] + 2] = real_complex(scale);
    a[s.q[n] + 3] = real_complex(scale) / z0;
  }
  return {z0, std::move(a), r};
}

PsiCorrection build_psi_correction(const ApproximantBundle& fphi) {
  if (fphi.window_kind != WindowKind::coefficient_zero) {
    throw Error(ErrorKind::config, "psi needs the coefficient windows of a lifted series");
  }
  const GapSchedule& s = fphi.schedule;
  const PowerSeries& g = fphi.series;
  const Precision p = g.precision();
  const Complex minus_z0 = -g.centre();
  std::vector<Complex> a(g.size(), Complex(p));
  PsiCorrection out{g, {}, {}};
  for (std::size_t n = 0; n < s.levels(); ++n) {
    const IndexWindow& w = fphi.windows[n];
    const std::size_t first = w.lo + 1;
    const std::size_t last = std::min(w.hi, s.following_p(n) - 1);
    if (first + 1 > last) {
      throw Error(ErrorKind::schedule, "level " + std::to_string(n + 1) + ": gap too narrow for the psi correction");
    }
    if (last > g.horizon()) throw Error(ErrorKind::horizon, "psi needs index " + std::to_string(last));
    Complex t = t_eval(g, first, g.centre());
    a[first] -= t / pow(minus_z0, static_cast<long>(first));
    a[last] += t / pow(minus_z0, static_cast<long>(last));
    out.windows.push_back({first, last - 1});
    out.t.push_back(std::move(t));
  }
  out.series = PowerSeries(g.centre(), std::move(a), g.radius_hint());
  return out;
}

LogPowerChain build_log_power_chain(std::size_t k, const GapSchedule& s, const Complex& z0, const Real& r,
                                    std::size_t length) {
  if (k < 1 || k > s.k_max) {
    throw Error(ErrorKind::schedule, "log power " + std::to_string(k) + " outside 1.." + std::to_string(s.k_max));
  }
  if (length < s.p_next) {
    throw Error(ErrorKind::horizon, "length " + std::to_string(length) + " below p_{L+1} = " + std::to_string(s.p_next));
  }
  const Precision p = max(z0.precision(), r.precision());
  const Complex log_z0 = log(z0.with_precision(p));
  LogPowerChain chain;
  chain.q.push_back(build_constant_approximant(s, z0, r, length));
  Complex log_power(Real(1L, p), Real(p));
  for (std::size_t i = 1; i <= k; ++i) {
    log_power = log_power * log_z0;
    const Complex target = log_power / factorial(i, p);

    ApproximantBundle f = lift_antiderivative(chain.q.back());
    std::vector<Complex> centre_values;
    for (std::size_t n = 0; n < s.levels(); ++n) centre_values.push_back(t_eval(f.series, s.p[n], z0));
    const PhiCorrection phi = build_phi_correction(f, target);

    ApproximantBundle fphi = f;
    fphi.series = add(f.series, phi.series);
    const PsiCorrection psi = build_psi_correction(fphi);

    ApproximantBundle qi{add(fphi.series, psi.series), s, i, psi.windows, WindowKind::centre_value_zero,
                         log_power_tag(i), chain.q.back().warnings};
    if (!phi.growth_ok) {
      qi.warnings.push_back("stage " + std::to_string(i) + ": phi growth proxy " + phi.growth.to_string(6) +
                            " exceeds |z0|/r + margin");
    }
    chain.stages.push_back({i, phi.c, phi.growth, root_growth(centre_values, s, p), psi.t, psi.windows});
    chain.q.push_back(std::move(qi));
  }
  return chain;
}

ApproximantBundle build_log_power_approximant(std::size_t k, const GapSchedule& s, const Complex& z0, const Real& r,
                                              std::size_t length) {
  LogPowerChain chain = build_log_power_chain(k, s, z0, r, length);
  return std::move(chain.q.back());
}

ApproximantBundle assemble_poly_log_approximant(const std::vector<Complex>& p, const GapSchedule& s,
                                                const Complex& z0, const Real& r, std::size_t length) {
  std::size_t degree = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (!p[k].is_zero()) degree = k;
  }
  if (degree > s.k_max) {
    throw Error(ErrorKind::schedule, "polynomial degree " + std::to_string(degree) + " exceeds k_max " +
                                         std::to_string(s.k_max));
  }
  const Precision prec = max(z0.precision(), r.precision());
  std::vector<ApproximantBundle> q;
  if (degree >= 1) {
    q = std::move(build_log_power_chain(degree, s, z0, r, length).q);
  } else {
    q.push_back(build_constant_approximant(s, z0, r, length));
  }

  std::optional<PowerSeries> sum;
  std::string tag;
  for (std::size_t k = 0; k <= degree && k < p.size(); ++k) {
    if (p[k].is_zero()) continue;
    PowerSeries term = scale(p[k] * factorial(k, prec), q[k].series);
    sum = sum ? add(*sum, term) : std::move(term);
    if (!tag.empty()) tag += " + ";
    const std::string coeff = p[k].im().is_zero() ? p[k].re().to_string(8) : to_string(p[k], 8);
    tag += coeff + "*" + (k == 0 ? std::string("1") : k == 1 ? "log" : "log^" + std::to_string(k));
  }
  if (!sum) {
    sum = PowerSeries::zero(z0.with_precision(prec), length, r.with_precision(prec));
    tag = "0";
  }
  ApproximantBundle out = q.back();
  out.series = std::move(*sum);
  out.level = degree;
  out.target_tag = tag;
  return out;
}

PowerSeries bump_polynomial(std::size_t m, const Complex& z0) {
  const Precision p = z0.precision();
  std::vector<Complex> a(m + 1, Complex(p));
  a[m] = pow(-(Complex(Real(1L, p), Real(p)) / z0), static_cast<long>(m));
  return {z0, std::move(a), Real::inf(p)};
}

Real bump_sup(std::size_t m, const Complex& z0, const Real& radius) {
  return pow(radius / abs(z0), static_cast<long>(m));
}

DensityWitness density_witness(const PowerSeries& g0, const std::vector<Complex>& pj, const Real& eps, std::size_t s,
                               std::size_t m, std::size_t big_n, const GapSchedule& sched, const Complex& z0,
                               const Real& r, SampleCounts counts) {
  if (s == 0) throw Error(ErrorKind::config, "s must be positive");
  if (m < 1 || m > big_n) throw Error(ErrorKind::config, "need 1 <= m <= N");
  const ApproximantBundle h_bundle = assemble_poly_log_approximant(pj, sched, z0, r, sched.p_next);
  const PowerSeries& h = h_bundle.series;
  const Precision prec = h.precision();
  const Real one(1L, prec);
  const Real half_s = one / Real(static_cast<long>(2 * s), prec);
  const Real inv_s = one / Real(static_cast<long>(s), prec);
  const Real half_eps = eps / Real(2L, prec);

  const CompactDiscSample dm = sample_disc(m, z0, r, counts);
  const ConvergenceReport h_report = t_convergence_report(h, sched, pj, "P_j(log)", dm, half_s.to_double());

  PowerSeries g0c = g0.centre().identical(z0) ? g0 : shift(g0, z0, g0.horizon());
  if (g0c.radius_hint().is_inf() && g0c.size() < h.size()) g0c = zero_extend(g0c, h.size());
  const PowerSeries delta = add(g0c, scale(Complex(-one, Real(prec)), h));

  const CompactDiscSample dn = sample_disc(big_n, z0, r, counts);
  const Complex rim_point = z0 + Complex(dn.radius, Real(prec));
  const TailBound beyond = tail_bound(delta, rim_point, 0);
  // tail[D] = sum_{k > D} |delta_k| rho^k over stored coefficients.
  std::vector<Real> tail(delta.size(), Real(prec));
  for (std::size_t k = delta.size() - 1; k-- > 0;) {
    tail[k] = tail[k + 1] + abs(delta[k + 1]) * pow(dn.radius, static_cast<long>(k + 1));
  }

  WitnessCertificate cert;
  cert.h_target_sup = Real::inf(prec);
  cert.fit_sup = Real::inf(prec);
  cert.fit_tail_bound = beyond.bound;
  cert.p_at_zero = Real::inf(prec);
  cert.target_sup = Real::inf(prec);
  cert.target_triangle = Real::inf(prec);
  if (beyond.divergent) cert.notes.push_back("difference tail diverges on D_N");

  for (std::size_t n = 0; n < sched.levels(); ++n) {
    if (!(h_report.rows[n].value < half_s)) continue;
    const std::size_t pn = sched.p[n];
    std::optional<std::size_t> degree;
    for (std::size_t d = 0; d < pn && d < delta.size(); ++d) {
      if (tail[d] + beyond.bound < half_eps) {
        degree = d;
        break;
      }
    }
    if (!degree) {
      cert.notes.push_back("level " + std::to_string(n + 1) + ": no Taylor degree below p_n fits eps/2");
      continue;
    }
    const PowerSeries p_tilde = with_infinite_hint(truncate(delta, *degree + 1));
    const Complex p0 = evaluate(p_tilde, Complex(prec));
    const Real p0_abs = abs(p0);
    std::size_t bump = 0;
    const Real ratio = dn.radius / abs(z0);
    if (!p0_abs.is_zero()) {
      Real reach = p0_abs;
      while (!(reach < half_eps) && bump < pn) {
        reach *= ratio;
        ++bump;
      }
    }
    if (bump >= pn) {
      cert.notes.push_back("level " + std::to_string(n + 1) + ": bump power would reach p_n");
      continue;
    }

    const std::size_t width = std::max(*degree, bump) + 1;
    const PowerSeries correction = scale(-p0, zero_extend(bump_polynomial(bump, z0.with_precision(prec)), width));
    const PowerSeries poly = add(zero_extend(p_tilde, width), correction);
    PowerSeries f = add(h, zero_extend(poly, std::max(h.size(), width)));

    cert.level = n + 1;
    cert.p_n0 = pn;
    cert.taylor_degree = *degree;
    cert.bump_power = bump;
    cert.degree = last_nonzero(poly);
    cert.h_target_sup = h_report.rows[n].value;
    cert.p_at_zero = abs(evaluate(poly, Complex(prec)));

    Real fit(prec);
    for (const Complex& z : dn.points) fit = max(fit, abs(evaluate(f, z) - evaluate(g0, z)));
    cert.fit_sup = fit;
    const TailBound f_tail = tail_bound(f, rim_point, 0);
    cert.fit_tail_bound = f_tail.bound;

    std::vector<Real> target_errors(dm.points.size(), Real(prec));
    parallel_for(dm.points.size(), [&](std::size_t i) {
      const Complex& z = dm.points[i];
      target_errors[i] = abs(t_eval(f, pn, z) - log_polynomial_value(pj, z0, z));
    });
    Real target(prec);
    for (const auto& e : target_errors) target = max(target, e);
    cert.target_sup = target;
    cert.target_triangle = cert.h_target_sup + cert.p_at_zero;

    cert.fit_ok = !f_tail.divergent && cert.fit_sup + cert.fit_tail_bound < eps;
    cert.p_zero_ok = cert.p_at_zero < half_s;
    cert.target_ok = cert.target_sup < inv_s && cert.target_triangle < inv_s;
    cert.pass = cert.fit_ok && cert.p_zero_ok && cert.target_ok;
    return {std::move(f), std::move(cert)};
  }
  cert.notes.push_back("no level satisfied the construction bounds");
  return {h, std::move(cert)};
}

nlohmann::json construction_json(const ApproximantBundle& b) {
  nlohmann::json windows = nlohmann::json::array();
  for (const auto& w : b.windows) windows.push_back({w.lo, w.hi});
  const GapSchedule& s = b.schedule;
  return {{"level", b.level},
          {"target", b.target_tag},
          {"schedule",
           {{"p", s.p}, {"q", s.q}, {"p_next", s.p_next}, {"slack", s.slack}, {"k_max", s.k_max}}},
          {"windows", windows},
          {"window_kind", to_string(b.window_kind)},
          {"warnings", b.warnings}};
}

nlohmann::json to_json(const WitnessCertificate& cert) {
  const auto fmt = [](const Real& x) { return x.to_string(kReportDigits); };
  return {{"level", cert.level},
          {"p_n0", cert.p_n0},
          {"taylor_degree", cert.taylor_degree},
          {"bump_power", cert.bump_power},
          {"degree", cert.degree},
          {"h_target_sup", fmt(cert.h_target_sup)},
          {"fit_sup", fmt(cert.fit_sup)},
          {"fit_tail_bound", fmt(cert.fit_tail_bound)},
          {"p_at_zero", fmt(cert.p_at_zero)},
          {"target_sup", fmt(cert.target_sup)},
          {"target_triangle", fmt(cert.target_triangle)},
          {"fit_ok", cert.fit_ok},
          {"p_zero_ok", cert.p_zero_ok},
          {"target_ok", cert.target_ok},
          {"pass", cert.pass},
          {"notes", cert.notes}};
}

}  // namespace ostrowski
