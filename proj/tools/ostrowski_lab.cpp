#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ostrowski/config.hpp"
#include "ostrowski/errors.hpp"
#include "ostrowski/gap_series.hpp"
#include "ostrowski/harness.hpp"
#include "ostrowski/log_universal.hpp"
#include "ostrowski/rational_poly.hpp"
#include "ostrowski/recentering.hpp"
#include "ostrowski/report_io.hpp"
#include "ostrowski/series_io.hpp"

using namespace ostrowski;
using nlohmann::json;

namespace {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2, kConstructionError = 3 };

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) { throw Failure{code, message}; }

struct RunConfig {
  Precision precision{kDefaultPrecision};
  std::string z0_re = "2";
  std::string z0_im = "0";
  std::string r = "1";
  std::size_t levels = 4;
  std::size_t k_max = 1;
  std::size_t m = 4;
  SampleCounts counts;
  std::string format = "csv";
  std::string out;
  std::string c = "const:1";

  Complex z0() const { return Complex::parse(z0_re, z0_im, precision); }
  Real radius() const { return Real::parse(r, precision); }
};

/// Raw flag values; an option counts only when given on the command line.
struct Flags {
  std::string config;
  std::string z0, r, format, out, c;
  long precision = 0;
  std::size_t levels = 0, k_max = 0, m = 0, boundary = 0, interior = 0;
  CLI::Option* opt_z0 = nullptr;
  CLI::Option* opt_r = nullptr;
  CLI::Option* opt_precision = nullptr;
  CLI::Option* opt_levels = nullptr;
  CLI::Option* opt_k_max = nullptr;
  CLI::Option* opt_m = nullptr;
  CLI::Option* opt_boundary = nullptr;
  CLI::Option* opt_interior = nullptr;
  CLI::Option* opt_format = nullptr;
  CLI::Option* opt_out = nullptr;
  CLI::Option* opt_c = nullptr;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "JSON config file (flags take precedence)");
  f.opt_z0 = cmd->add_option("--z0", f.z0, "centre, as re or re,im");
  f.opt_r = cmd->add_option("--r", f.r, "radius of the disc about z0 not containing 0");
  f.opt_precision = cmd->add_option("--precision-bits", f.precision, "working precision in bits");
  f.opt_levels = cmd->add_option("--levels", f.levels, "schedule levels");
  f.opt_k_max = cmd->add_option("--k-max", f.k_max, "highest log power the schedule supports");
  f.opt_m = cmd->add_option("--m", f.m, "compact disc index: D_m has radius r(1 - 1/m)");
  f.opt_boundary = cmd->add_option("--samples-boundary", f.boundary, "boundary sample count");
  f.opt_interior = cmd->add_option("--samples-interior", f.interior, "interior sample count");
  f.opt_format = cmd->add_option("--format", f.format, "report format")->check(CLI::IsMember({"csv", "json"}));
  f.opt_out = cmd->add_option("--out", f.out, "output path (stdout when omitted)");
}

std::string json_scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) {
    std::ostringstream s;
    s.precision(17);
    s << v.get<double>();
    return s.str();
  }
  fail(kInputError, "config: expected a number or string");
}

std::pair<std::string, std::string> split_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {text, "0"};
  return {text.substr(0, comma), text.substr(comma + 1)};
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(kInputError, "cannot open config " + path);
  const json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) fail(kInputError, "config " + path + " is not a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "z0") {
      if (v.is_array() && v.size() == 2) {
        cfg.z0_re = json_scalar(v[0]);
        cfg.z0_im = json_scalar(v[1]);
      } else {
        std::tie(cfg.z0_re, cfg.z0_im) = split_complex(json_scalar(v));
      }
    } else if (key == "r") {
      cfg.r = json_scalar(v);
    } else if (key == "precision_bits") {
      cfg.precision = Precision(v.get<long>());
    } else if (key == "levels") {
      cfg.levels = v.get<std::size_t>();
    } else if (key == "k_max") {
      cfg.k_max = v.get<std::size_t>();
    } else if (key == "m") {
      cfg.m = v.get<std::size_t>();
    } else if (key == "samples_boundary") {
      cfg.counts.boundary = v.get<std::size_t>();
    } else if (key == "samples_interior") {
      cfg.counts.interior = v.get<std::size_t>();
    } else if (key == "format") {
      cfg.format = v.get<std::string>();
    } else if (key == "out") {
      cfg.out = v.get<std::string>();
    } else if (key == "c") {
      cfg.c = json_scalar(v);
    } else {
      fail(kInputError, "config: unknown key '" + key + "'");
    }
  }
}

/// defaults < OSTROWSKI_LAB_PRECISION < config file < flags, validated before use.
RunConfig resolve(const Flags& f) {
  RunConfig cfg;
  if (const char* env = std::getenv("OSTROWSKI_LAB_PRECISION")) {
    try {
      cfg.precision = Precision(std::stol(env));
    } catch (const std::exception&) {
      fail(kInputError, "OSTROWSKI_LAB_PRECISION is not an integer");
    }
  }
  if (!f.config.empty()) {
    try {
      apply_config_file(cfg, f.config);
    } catch (const json::exception& e) {
      fail(kInputError, std::string("config: ") + e.what());
    }
  }
  if (f.opt_z0->count()) std::tie(cfg.z0_re, cfg.z0_im) = split_complex(f.z0);
  if (f.opt_r->count()) cfg.r = f.r;
  if (f.opt_precision->count()) cfg.precision = Precision(f.precision);
  if (f.opt_levels->count()) cfg.levels = f.levels;
  if (f.opt_k_max->count()) cfg.k_max = f.k_max;
  if (f.opt_m->count()) cfg.m = f.m;
  if (f.opt_boundary->count()) cfg.counts.boundary = f.boundary;
  if (f.opt_interior->count()) cfg.counts.interior = f.interior;
  if (f.opt_format->count()) cfg.format = f.format;
  if (f.opt_out->count()) cfg.out = f.out;
  if (f.opt_c && f.opt_c->count()) cfg.c = f.c;

  if (cfg.precision.bits < 64) fail(kInputError, "precision must be at least 64 bits");
  if (cfg.levels < 1) fail(kInputError, "levels must be at least 1");
  if (cfg.m < 1) fail(kInputError, "m must be at least 1");
  if (cfg.counts.boundary < 1) fail(kInputError, "samples-boundary must be at least 1");
  if (cfg.format != "csv" && cfg.format != "json") fail(kInputError, "format must be csv or json");
  const Complex z0 = cfg.z0();
  const Real r = cfg.radius();
  if (!(r > Real(0L, cfg.precision)) || !r.is_finite()) fail(kInputError, "r must be positive and finite");
  if (abs(z0) < r) fail(kInputError, "|z0| must be at least r");
  return cfg;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_text_atomic(path, text);
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(item);
  if (out.empty()) fail(kInputError, "empty coefficient list");
  return out;
}

/// "re" or "re:im" items separated by commas.
std::vector<Complex> parse_coeffs(const std::string& text, Precision p) {
  std::vector<Complex> out;
  for (const auto& item : split_list(text)) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      out.push_back(Complex::parse(item, "0", p));
    } else {
      out.push_back(Complex::parse(item.substr(0, colon), item.substr(colon + 1), p));
    }
  }
  return out;
}

std::size_t parse_index(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    fail(kInputError, what + ": expected a non-negative integer, got '" + text + "'");
  }
}

json schedule_json(const GapSchedule& s) {
  return {{"p", s.p}, {"q", s.q}, {"p_next", s.p_next}, {"slack", s.slack}, {"k_max", s.k_max}};
}

GapSchedule schedule_from_json(const json& j) {
  GapSchedule s;
  s.p = j.at("p").get<std::vector<std::size_t>>();
  s.q = j.at("q").get<std::vector<std::size_t>>();
  s.p_next = j.at("p_next").get<std::size_t>();
  s.slack = j.at("slack").get<std::size_t>();
  s.k_max = j.at("k_max").get<std::size_t>();
  s.validate();
  return s;
}

// ---------------------------------------------------------------- construct

std::vector<Complex> gap_values(const std::string& spec, std::size_t levels, Precision p) {
  if (spec.rfind("const:", 0) == 0) {
    return std::vector<Complex>(levels, parse_coeffs(spec.substr(6), p).at(0));
  }
  return parse_coeffs(spec, p);
}

int cmd_construct(const std::string& kind, const RunConfig& cfg, std::size_t length) {
  const Precision p = cfg.precision;
  const Complex z0 = cfg.z0();
  const Real r = cfg.radius();
  const GapSchedule s = default_schedule(cfg.levels, cfg.k_max);
  const std::size_t n = length ? length : s.p_next;
  std::optional<PowerSeries> series;
  json meta;
  if (kind == "gap") {
    const std::vector<Complex> c = gap_values(cfg.c, s.levels(), p);
    series = build_gap_series({s, c, z0, r, n});
    json cj = json::array();
    for (const auto& v : c) cj.push_back(to_json(v));
    meta = {{"kind", "gap"}, {"schedule", schedule_json(s)}, {"c", cj}};
  } else if (kind.rfind("log-power:", 0) == 0) {
    const std::size_t k = parse_index(kind.substr(10), "log power");
    const ApproximantBundle b = build_log_power_approximant(k, s, z0, r, n);
    series = b.series;
    meta = construction_json(b);
    meta["kind"] = "log-power";
  } else if (kind.rfind("poly-log:", 0) == 0) {
    const std::vector<Complex> poly = parse_coeffs(kind.substr(9), p);
    const ApproximantBundle b = assemble_poly_log_approximant(poly, s, z0, r, n);
    json pj = json::array();
    for (const auto& v : poly) pj.push_back(to_json(v));
    series = b.series;
    meta = construction_json(b);
    meta["kind"] = "poly-log";
    meta["polynomial"] = pj;
  } else {
    fail(kInputError, "unknown kind '" + kind + "' (gap, log-power:k, poly-log:c0,c1,...)");
  }
  emit(cfg.out, to_json(SeriesDocument{*series, meta}).dump(1) + "\n");
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string rho = "2";
  std::size_t n_max = 0;
  std::string orders = "5,19";
  std::size_t points = 10;
};

GapSchedule schedule_for(const SeriesDocument& doc, const RunConfig& cfg) {
  if (doc.construction.is_object() && doc.construction.contains("schedule")) {
    return schedule_from_json(doc.construction.at("schedule"));
  }
  return default_schedule(cfg.levels, cfg.k_max);
}

Real disc_radius(const SeriesDocument& doc, const RunConfig& cfg) {
  const Real& hint = doc.series.radius_hint();
  return hint.is_finite() ? hint : cfg.radius().with_precision(doc.series.precision());
}

template <typename Report>
std::string render(const Report& report, const std::string& format) {
  return format == "json" ? to_json(report).dump(1) + "\n" : to_csv(report);
}

/// Check names accepted for compatibility with earlier scripts.
std::string canonical_check(const std::string& name) {
  if (name == "lemma-2-1") return "derivative-identity";
  if (name == "lemma-2-2") return "zf-identity";
  if (name == "eq4") return "growth-rate";
  return name;
}

int cmd_verify(const std::string& requested, const std::string& file, const RunConfig& cfg, const VerifyOptions& opt) {
  const std::string check = canonical_check(requested);
  const SeriesDocument doc = read_series_file(file);
  const PowerSeries& f = doc.series;
  const Precision p = f.precision();
  const json& meta = doc.construction;
  bool pass = false;
  std::string text;

  if (check == "centre-values") {
    if (!meta.is_object() || !meta.contains("c")) fail(kInputError, "centre-values needs gap construction metadata");
    GapSeriesSpec spec{schedule_for(doc, cfg), {}, f.centre(), f.radius_hint(), f.size()};
    for (const auto& v : meta.at("c")) spec.c.push_back(complex_from_json(v, p));
    if (spec.c.size() != spec.schedule.levels()) fail(kInputError, "one c value per level required");
    const CheckReport report = verify_centre_values(f, spec);
    pass = report.pass;
    text = render(report, cfg.format);
  } else if (check == "ostrowski") {
    const CheckReport report = check_ostrowski_gaps(f, schedule_for(doc, cfg));
    pass = report.pass;
    text = render(report, cfg.format);
  } else if (check == "gap-transfer") {
    const CompactDiscSample disc = sample_disc(cfg.m, f.centre(), disc_radius(doc, cfg), cfg.counts);
    const std::vector<Complex> w{Complex(p)};
    const CheckReport report = gap_transfer_check(f, schedule_for(doc, cfg), disc.points, w);
    pass = report.pass;
    text = render(report, cfg.format);
  } else if (check == "derivative-identity" || check == "zf-identity") {
    std::vector<std::size_t> orders;
    for (const auto& item : split_list(opt.orders)) orders.push_back(parse_index(item, "orders"));
    const CompactDiscSample disc = sample_disc(cfg.m, f.centre(), disc_radius(doc, cfg), {1, 1});
    const std::vector<Complex> points = spiral_points(f.centre(), disc.radius, opt.points);
    const ConvergenceReport report =
        check == "derivative-identity"
            ? derivative_identity_report(f, orders, points, Real::two_pow(-30, p),
                                         calibration::kDerivativeRelTolerance)
            : zf_identity_report(f, orders, points, calibration::kIdentityGuardBits);
    pass = report.pass;
    text = render(report, cfg.format);
  } else if (check == "growth-rate") {
    const std::size_t n_max = opt.n_max ? opt.n_max : f.horizon();
    const GrowthReport report = growth_rate_check(f, Real::parse(opt.rho, p), n_max, cfg.counts.boundary);
    pass = report.pass;
    text = cfg.format == "json" ? to_json(report).dump(1) + "\n" : to_csv(report, "growth-rate");
  } else if (check == "windows") {
    if (!meta.is_object() || !meta.contains("windows")) fail(kInputError, "windows needs bundle construction metadata");
    std::vector<IndexWindow> windows;
    for (const auto& w : meta.at("windows")) windows.push_back({w.at(0).get<std::size_t>(), w.at(1).get<std::size_t>()});
    const CheckReport report = check_windows(f, schedule_for(doc, cfg), windows,
                                             parse_window_kind(meta.at("window_kind").get<std::string>()));
    pass = report.pass;
    text = render(report, cfg.format);
  } else {
    fail(kInputError, "unknown check '" + requested + "'");
  }
  emit(cfg.out, text);
  return pass ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- report

struct Target {
  std::vector<Complex> poly;
  std::string tag;
  double threshold;
};

Target parse_target(const std::string& spec, Precision p) {
  const auto threshold_for = [](std::size_t degree) {
    if (degree == 0) return calibration::kConstantSupThreshold;
    return degree == 1 ? calibration::kLogSupThreshold : calibration::kLogPowerSupThreshold;
  };
  std::vector<Complex> poly;
  if (spec.rfind("const:", 0) == 0) {
    poly = parse_coeffs(spec.substr(6), p);
    if (poly.size() != 1) fail(kInputError, "const target takes one value");
  } else if (spec == "log") {
    poly = log_power_target(1, p);
  } else if (spec.rfind("logpow:", 0) == 0) {
    poly = log_power_target(parse_index(spec.substr(7), "log power"), p);
  } else if (spec.rfind("poly-log:", 0) == 0) {
    poly = parse_coeffs(spec.substr(9), p);
  } else {
    fail(kInputError, "unknown target '" + spec + "' (const:c, log, logpow:k, poly-log:c0,c1,...)");
  }
  std::size_t degree = poly.size() - 1;
  while (degree > 0 && poly[degree].is_zero()) --degree;
  return {poly, spec, threshold_for(degree)};
}

std::string plot_csv(const ConvergenceReport& report) {
  std::string out = "p_n,sup_error\n";
  for (const auto& row : report.rows) out += std::to_string(row.n) + "," + row.value.to_string(kReportDigits) + "\n";
  return out;
}

int cmd_report(const std::string& file, const std::string& target_spec, const RunConfig& cfg,
               const std::string& plot_out) {
  const SeriesDocument doc = read_series_file(file);
  const PowerSeries& f = doc.series;
  const GapSchedule s = schedule_for(doc, cfg);
  if (s.p.back() > f.horizon()) {
    fail(kInputError, "horizon " + std::to_string(f.horizon()) + " is below p_L = " + std::to_string(s.p.back()));
  }
  const Target t = parse_target(target_spec, f.precision());
  const CompactDiscSample disc = sample_disc(cfg.m, f.centre(), disc_radius(doc, cfg), cfg.counts);
  const ConvergenceReport report = t_convergence_report(f, s, t.poly, t.tag, disc, t.threshold);
  emit(cfg.out, render(report, cfg.format));
  std::string plot_path = plot_out;
  if (plot_path.empty() && !cfg.out.empty()) plot_path = cfg.out + ".plot.csv";
  if (!plot_path.empty()) write_text_atomic(plot_path, plot_csv(report));
  return kOk;
}

// ---------------------------------------------------------------- witness

struct WitnessOptions {
  std::string g0 = "poly:0,0,1";
  std::string pj;
  std::size_t pj_index = 0;
  long pj_height = 2;
  std::string eps = "1e-2";
  std::size_t s = 10;
  std::size_t big_n = 8;
  std::string certificate;
  CLI::Option* opt_pj_index = nullptr;
};

PowerSeries parse_g0(const std::string& spec, Precision p) {
  if (spec.rfind("poly:", 0) == 0) {
    return {Complex(p), parse_coeffs(spec.substr(5), p), Real::inf(p)};
  }
  if (spec.rfind("file:", 0) == 0) return read_series_file(spec.substr(5)).series;
  fail(kInputError, "g0 must be poly:c0,c1,... or file:<series.json>");
}

int cmd_witness(const RunConfig& cfg, const WitnessOptions& opt) {
  const Precision p = cfg.precision;
  const GapSchedule sched = default_schedule(cfg.levels, cfg.k_max);
  std::vector<Complex> pj;
  std::size_t j = opt.pj_index;
  if (!opt.pj.empty()) {
    pj = parse_coeffs(opt.pj, p);
  } else {
    const auto polys = enumerate_rational_polys(cfg.k_max, opt.pj_height);
    if (j >= polys.size()) {
      fail(kInputError, "pj-index " + std::to_string(j) + " exceeds the " + std::to_string(polys.size()) +
                            " polynomials of degree <= k_max and height <= pj-height");
    }
    pj = polys[j].to_complex(p);
  }
  const PowerSeries g0 = parse_g0(opt.g0, p);
  const DensityWitness w =
      density_witness(g0, pj, Real::parse(opt.eps, p), opt.s, cfg.m, opt.big_n, sched, cfg.z0(), cfg.radius(), cfg.counts);
  const MembershipCertificate member =
      a_membership(w.f, cfg.m, j, pj, opt.s, sched, sched.levels(), cfg.radius(), cfg.counts);

  json pj_json = json::array();
  for (const auto& v : pj) pj_json.push_back(to_json(v));
  const json cert = {{"witness", to_json(w.certificate)}, {"membership", to_json(member)}, {"pj", pj_json}};
  SeriesDocument doc{w.f, {{"kind", "witness"}, {"schedule", schedule_json(sched)}, {"certificate", cert}}};
  if (!cfg.out.empty()) write_series_file(cfg.out, doc);
  emit(opt.certificate, cert.dump(1) + "\n");
  if (!w.certificate.pass || !member.pass) {
    std::cerr << "witness infeasible: fit_sup=" << w.certificate.fit_sup.to_string(kReportDigits)
              << " p_at_zero=" << w.certificate.p_at_zero.to_string(kReportDigits)
              << " target_sup=" << w.certificate.target_sup.to_string(kReportDigits)
              << " membership_sup=" << member.sup.to_string(kReportDigits) << "\n";
    return kCheckFailed;
  }
  return kOk;
}

// ---------------------------------------------------------------- benchmark

int cmd_benchmark(const RunConfig& cfg, const std::string& sizes, std::size_t repeats) {
  const Precision p = cfg.precision;
  std::string out = "algorithm,N,precision_bits,nanoseconds\n";
  for (ShiftAlgorithm alg :
       {ShiftAlgorithm::naive_binomial, ShiftAlgorithm::horner_shift, ShiftAlgorithm::divide_and_conquer}) {
    for (const auto& item : split_list(sizes)) {
      const std::size_t n = parse_index(item, "sizes");
      std::vector<Complex> coeffs;
      for (std::size_t k = 0; k <= n; ++k) {
        coeffs.push_back(Complex(Real(1L, p) / Real(static_cast<long>(k + 1), p), Real(p)));
      }
      const PowerSeries a(cfg.z0(), coeffs, Real::inf(p));
      const Complex zeta = cfg.z0() + Complex(cfg.radius() / Real(4L, p), Real(p));
      long long best = -1;
      for (std::size_t rep = 0; rep < std::max<std::size_t>(repeats, 1); ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        const PowerSeries b = shift(a, zeta, n, alg);
        const auto t1 = std::chrono::steady_clock::now();
        const long long ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
        if (best < 0 || ns < best) best = ns;
      }
      out += std::string(to_string(alg)) + "," + std::to_string(n) + "," + std::to_string(p.bits) + "," +
             std::to_string(best) + "\n";
    }
  }
  emit(cfg.out, out);
  return kOk;
}

int exit_code_for(ErrorKind kind, bool constructing) {
  if (kind == ErrorKind::parse || kind == ErrorKind::config || kind == ErrorKind::point_set_mismatch) {
    return kInputError;
  }
  return constructing ? kConstructionError : kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Overconvergence and universal Taylor series laboratory"};
  app.require_subcommand(1);

  Flags construct_flags, verify_flags, report_flags, witness_flags, bench_flags;

  auto* construct = app.add_subcommand("construct", "build a gap series or log approximant");
  std::string kind;
  std::size_t length = 0;
  construct->add_option("kind", kind, "gap | log-power:k | poly-log:c0,c1,...")->required();
  construct->add_option("--length", length, "stored coefficients (default p_{L+1})");
  add_common(construct, construct_flags);
  construct_flags.opt_c = construct->add_option("--c", construct_flags.c, "gap values: const:x or x1,x2,...");

  auto* verify = app.add_subcommand("verify", "run a check on a series file");
  std::string check, verify_file;
  VerifyOptions vopt;
  verify->add_option("check", check, "centre-values | ostrowski | gap-transfer | derivative-identity | zf-identity | growth-rate | windows")
      ->required();
  verify->add_option("series", verify_file, "series file")->required();
  verify->add_option("--rho", vopt.rho, "growth-rate circle factor (>= 1)");
  verify->add_option("--n-max", vopt.n_max, "growth-rate largest n (default horizon)");
  verify->add_option("--orders", vopt.orders, "identity orders N, comma separated");
  verify->add_option("--points", vopt.points, "identity evaluation points");
  add_common(verify, verify_flags);

  auto* report = app.add_subcommand("report", "per-level sup errors against a log-polynomial target");
  std::string report_file, target, plot_out;
  report->add_option("series", report_file, "series file")->required();
  report->add_option("--target", target, "const:c | log | logpow:k | poly-log:c0,c1,...")->required();
  report->add_option("--plot-out", plot_out, "plot data path (default <out>.plot.csv)");
  add_common(report, report_flags);

  auto* witness = app.add_subcommand("witness", "density witness with its membership certificate");
  WitnessOptions wopt;
  witness->add_option("--g0", wopt.g0, "poly:c0,c1,... (about 0) or file:<series.json>");
  witness->add_option("--pj", wopt.pj, "target polynomial coefficients in log");
  wopt.opt_pj_index = witness->add_option("--pj-index", wopt.pj_index, "index into the enumerated polynomials");
  witness->add_option("--pj-height", wopt.pj_height, "height bound of the enumeration");
  witness->add_option("--eps", wopt.eps, "approximation bound on D_N");
  witness->add_option("--s", wopt.s, "membership bound 1/s");
  witness->add_option("--N", wopt.big_n, "disc index of the approximation");
  witness->add_option("--certificate", wopt.certificate, "certificate path (stdout when omitted)");
  add_common(witness, witness_flags);

  auto* bench = app.add_subcommand("benchmark", "time the shift kernels");
  std::string sizes = "64,128,256,512";
  std::size_t repeats = 3;
  bench->add_option("--sizes", sizes, "orders N, comma separated");
  bench->add_option("--repeats", repeats, "timing repetitions (minimum reported)");
  add_common(bench, bench_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  bool constructing = false;
  try {
    if (construct->parsed()) {
      const RunConfig cfg = resolve(construct_flags);
      constructing = true;
      return cmd_construct(kind, cfg, length);
    }
    if (verify->parsed()) return cmd_verify(check, verify_file, resolve(verify_flags), vopt);
    if (report->parsed()) return cmd_report(report_file, target, resolve(report_flags), plot_out);
    if (witness->parsed()) {
      const RunConfig cfg = resolve(witness_flags);
      constructing = true;
      return cmd_witness(cfg, wopt);
    }
    if (bench->parsed()) return cmd_benchmark(resolve(bench_flags), sizes, repeats);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind(), constructing);
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
