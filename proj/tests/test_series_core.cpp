#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "ostrowski/errors.hpp"
#include "ostrowski/power_series.hpp"
#include "ostrowski/series_io.hpp"
#include "test_support.hpp"

using namespace ostrowski;
using namespace ostrowski::testing;

namespace {

bool throws_kind(auto&& fn, ErrorKind kind) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("real: precision propagates as the max of operands") {
  Real a(1.0, Precision{64});
  Real b(3.0, Precision{300});
  CHECK((a + b).precision().bits == 300);
  CHECK((a / b).precision().bits == 300);
  Real c = a;
  c *= b;
  CHECK(c.precision().bits == 300);
}

TEST_CASE("real: decimal strings round-trip bit-identically") {
  Lcg rng(7);
  for (long bits : {53L, 113L, 256L, 1000L}) {
    const Precision p{bits};
    for (int i = 0; i < 20; ++i) {
      Real x = Real(rng.uniform(), p) / Real(3L, p) * pow(Real(10L, p), static_cast<long>(i * 7 - 60));
      CHECK(Real::parse(x.to_string(), p).identical(x));
    }
  }
  CHECK(Real::parse("inf", kP).is_inf());
  CHECK(throws_kind([] { Real::parse("1.2.3", kP); }, ErrorKind::parse));
}

TEST_CASE("complex: arithmetic is deterministic") {
  Lcg rng(11);
  for (int i = 0; i < 10; ++i) {
    Complex a = rng.complex(), b = rng.complex();
    Complex e1 = (a * b + a / b) * pow(a, 7);
    Complex e2 = (a * b + a / b) * pow(a, 7);
    CHECK(e1.identical(e2));
  }
}

TEST_CASE("complex: principal log and exp") {
  Complex z = cx(-1.0, 0.0);
  Complex l = log(z);
  CHECK(l.re().is_zero());
  CHECK(abs(l.im() - Real::pi(kP)) < Real::two_pow(-250, kP));
  Complex w = cx(0.3, -1.7);
  CHECK(close_rel(exp(log(w)), w, 250));
}

TEST_CASE("add: coefficientwise with min length and min hint") {
  const Complex c = cx(2.0);
  PowerSeries a = series(c, {cx(1), cx(1)}, 3.0);
  PowerSeries b = series(c, {cx(2), cx(-1), cx(5)}, 1.5);
  PowerSeries s = add(a, b);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == cx(3));
  CHECK(s[1].is_zero());
  CHECK(s.radius_hint() == rl(1.5));

  PowerSeries z = PowerSeries::zero(c, 2, Real::inf(kP));
  CHECK(add(a, z).coeffs()[1] == a[1]);

  PowerSeries other = series(cx(1.0), {cx(1)});
  CHECK(throws_kind([&] { add(a, other); }, ErrorKind::centre_mismatch));
}

TEST_CASE("scale") {
  const Complex c = cx(2.0);
  PowerSeries a = series(c, {cx(1), cx(1)});
  PowerSeries zero = scale(cx(0), a);
  CHECK(zero.size() == 2);
  CHECK(zero[0].is_zero());
  CHECK(zero[1].is_zero());
  PowerSeries two = scale(cx(2), a);
  CHECK(two[0] == cx(2));
  CHECK(two[1] == cx(2));
  CHECK(two.centre() == c);
}

TEST_CASE("derivative and antiderivative") {
  const Complex c = cx(2.0);
  PowerSeries five = series(c, {cx(5)});
  PowerSeries d5 = derivative(five);
  CHECK(d5.size() == 1);
  CHECK(d5[0].is_zero());

  PowerSeries sq = series(c, {cx(0), cx(0), cx(1)});
  PowerSeries dsq = derivative(sq);
  REQUIRE(dsq.size() == 2);
  CHECK(dsq[0].is_zero());
  CHECK(dsq[1] == cx(2));

  PowerSeries one = series(c, {cx(1)});
  PowerSeries w = antiderivative(one);
  REQUIRE(w.size() == 2);
  CHECK(w[0].is_zero());
  CHECK(w[1] == cx(1));

  // gap indices move up by exactly one
  PowerSeries gappy = series(c, {cx(1), cx(0), cx(0), cx(4)});
  PowerSeries ag = antiderivative(gappy, cx(7));
  CHECK(ag[0] == cx(7));
  CHECK(ag[2].is_zero());
  CHECK(ag[3].is_zero());
  CHECK(ag[4] == cx(1));
}

TEST_CASE("property: derivative undoes antiderivative up to rounding") {
  Lcg rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Complex> cs;
    for (int k = 0; k < 40; ++k) cs.push_back(rng.complex());
    PowerSeries a = series(cx(2.0), cs, 1.0);
    PowerSeries back = derivative(antiderivative(a, rng.complex()));
    REQUIRE(back.size() == a.size());
    for (int i = 0; i < 5; ++i) {
      Complex z = cx(2.0 + 0.5 * rng.uniform(), 0.5 * rng.uniform());
      CHECK(close_rel(evaluate(back, z), evaluate(a, z), 246));
    }
  }
}

TEST_CASE("multiply_by_reciprocal_z") {
  const Complex c = cx(2.0);
  PowerSeries one = series(c, {cx(1), cx(0), cx(0), cx(0)}, 1.0);
  PowerSeries b = multiply_by_reciprocal_z(one);
  CHECK(b[0] == cx(0.5));
  CHECK(b[1] == cx(-0.25));
  CHECK(b[2] == cx(0.125));
  CHECK(b[3] == cx(-0.0625));

  PowerSeries zser = series(c, {cx(2), cx(1), cx(0)}, 1.0);
  PowerSeries unit = multiply_by_reciprocal_z(zser);
  CHECK(unit[0] == cx(1));
  CHECK(unit[1].is_zero());
  CHECK(unit[2].is_zero());

  CHECK(throws_kind([] { multiply_by_reciprocal_z(series(cx(0.0), {cx(1)})); }, ErrorKind::singularity));
}

TEST_CASE("property: multiplying back by z recovers the input") {
  Lcg rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Complex> cs;
    for (int k = 0; k < 30; ++k) cs.push_back(rng.complex());
    const Complex centre = cx(2.0 + rng.uniform(), rng.uniform());
    PowerSeries a = series(centre, cs, 0.5);
    PowerSeries back = multiply_by_z(multiply_by_reciprocal_z(a));
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(close_rel(back[k], a[k], 246));
  }
}

TEST_CASE("evaluate") {
  PowerSeries a = series(cx(2.0), {cx(1), cx(2)});
  CHECK(evaluate(a, cx(3.0)) == cx(3));
  Lcg rng(1);
  std::vector<Complex> cs;
  for (int k = 0; k < 9; ++k) cs.push_back(rng.complex());
  PowerSeries r = series(cx(1.0, 1.0), cs);
  CHECK(evaluate(r, r.centre()) == cs[0]);
}

TEST_CASE("log_series") {
  const Complex z0 = cx(2.0);
  PowerSeries l = log_series(z0, rl(1.0), 60);
  REQUIRE(l.size() == 61);
  CHECK(close_rel(l[1], cx(0.5), 250));
  CHECK(close_rel(l[2], cx(-0.125), 250));
  CHECK(close_rel(l[3], Complex(Real(1L, kP) / Real(24L, kP)), 250));
  Complex log2 = evaluate(l, z0);
  CHECK(abs(log2.re().to_double() - 0.69314718055994530942) < 1e-15);

  // derivative of log equals the series of 1/z
  PowerSeries dl = derivative(l);
  std::vector<Complex> one(60, cx(0));
  one[0] = cx(1);
  PowerSeries recip = multiply_by_reciprocal_z(series(z0, one, 1.0));
  for (std::size_t k = 0; k < dl.size(); ++k) CHECK(close_rel(dl[k], recip[k], 245));

  // antiderivative of 1/z with constant Log 2 reproduces log_series
  PowerSeries anti = antiderivative(recip, log(z0));
  for (std::size_t k = 0; k < l.size(); ++k) CHECK(close_rel(anti[k], l[k], 245));

  CHECK(throws_kind([] { log_series(cx(0.5), rl(1.0), 10); }, ErrorKind::branch_domain));
}

TEST_CASE("branch_log agrees with log_series inside the disc") {
  const Complex z0 = cx(-2.0, 0.5);
  PowerSeries l = log_series(z0, rl(1.0), 400);
  for (double t : {0.0, 1.0, 2.5, 4.0}) {
    Complex z = z0 + Complex::polar(rl(0.7), rl(t));
    CHECK(close_rel(evaluate(l, z), branch_log(z0, z), 200));
  }
}

TEST_CASE("estimate_radius") {
  std::vector<Complex> cs;
  Real half(0.5, kP);
  for (int k = 0; k < 64; ++k) cs.push_back(Complex(pow(half, static_cast<long>(k))));
  RadiusEstimate e = estimate_radius(series(cx(0.0), cs), 32);
  CHECK_FALSE(e.entire_at_horizon);
  CHECK(abs(e.radius.to_double() - 2.0) < 0.1);

  std::vector<Complex> poly(40, cx(0));
  poly[0] = cx(1);
  poly[3] = cx(2);
  RadiusEstimate inf = estimate_radius(series(cx(0.0), poly), 32);
  CHECK(inf.entire_at_horizon);
  CHECK(inf.radius.is_inf());

  CHECK(throws_kind([&] { estimate_radius(series(cx(0.0), poly), 4); }, ErrorKind::config));
  CHECK(throws_kind([&] { estimate_radius(series(cx(0.0), poly), 64); }, ErrorKind::horizon));
}

TEST_CASE("property: radius estimate converges as horizon and window grow") {
  // a_k = rho^{-k} / (k+1): the proxy is rho (L+1)^{1/L}, decreasing to rho.
  for (double rho : {0.5, 3.0}) {
    const Real inv(1.0 / rho, kP);
    double prev_err = 1e9;
    for (std::size_t window : {16, 64, 256, 512}) {
      std::vector<Complex> cs;
      for (std::size_t k = 0; k < window; ++k) {
        cs.push_back(Complex(pow(inv, static_cast<long>(k)) / Real(static_cast<long>(k) + 1, kP)));
      }
      double est = estimate_radius(series(cx(0.0), cs), window).radius.to_double();
      double err = std::abs(est - rho);
      CHECK(err < prev_err);
      prev_err = err;
    }
    CHECK(prev_err < 0.02 * rho);
  }
}

TEST_CASE("series file round trip is lossless") {
  Lcg rng(19);
  std::vector<Complex> cs;
  for (int k = 0; k < 17; ++k) cs.push_back(rng.complex(Precision{300}) / cx(3.0, 0.0, Precision{300}));
  PowerSeries a(cx(2.0, 0.25, Precision{300}), cs, Real(0.75, Precision{300}));
  const auto path = std::filesystem::temp_directory_path() / "ostrowski_series_roundtrip.json";
  write_series_file(path, {a, nlohmann::json{{"note", "x"}}});
  SeriesDocument doc = read_series_file(path);
  CHECK(doc.series.identical(a));
  CHECK(doc.construction.at("note") == "x");
  std::filesystem::remove(path);

  PowerSeries entire = series(cx(0.0), {cx(1)});
  CHECK(series_from_json(to_json(entire)).radius_hint().is_inf());
  CHECK(throws_kind([] { series_from_json(nlohmann::json{{"centre", 1}}); }, ErrorKind::parse));
}

TEST_CASE("invariants rejected at construction") {
  CHECK(throws_kind([] { PowerSeries(cx(0.0), {}, Real::inf(kP)); }, ErrorKind::horizon));
  CHECK(throws_kind([] { PowerSeries(cx(0.0), {cx(1)}, rl(-1.0)); }, ErrorKind::domain));
  CHECK(throws_kind([] { zero_extend(series(cx(0.0), {cx(1)}, 1.0), 4); }, ErrorKind::horizon));
  CHECK(zero_extend(series(cx(0.0), {cx(1)}), 4).size() == 4);
}
