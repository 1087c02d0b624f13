#include <doctest.h>

#include <cmath>

#include "jsc/arraybeam.hpp"
#include "jsc/error.hpp"
#include "jsc/rng.hpp"

using namespace jsc::beam;
using jsc::num::Complex;
using jsc::num::ComplexVector;

TEST_CASE("steering vectors") {
  CHECK((steering(0.0, 4) - ComplexVector::Ones(4)).norm() == 0.0);
  const auto s = steering(deg2rad(30.0), 2);
  CHECK(std::abs(s(1) - Complex(0.0, 1.0)) <= 1e-15);
  jsc::Rng rng(1);
  for (int i = 0; i < 500; ++i) {
    const double th = rng.uniform(-jsc::num::kPi / 2, jsc::num::kPi / 2);
    const std::size_t n = 1 + i % 120;
    const auto a = steering(th, n);
    CHECK((a - steering(-th, n).conjugate()).norm() <= 1e-12);
    for (Eigen::Index m = 0; m < a.size(); ++m) CHECK(std::abs(std::abs(a(m)) - 1.0) <= 1e-14);
  }
}

TEST_CASE("transmit beamformer") {
  BeamSplit split{1.0, deg2rad(20.0), deg2rad(-35.0), 19.95};
  const std::size_t n = 50;
  const ComplexVector ws = std::sqrt(split.eirp_w) / double(n) * steering(split.theta_sensing, n).conjugate();
  const ComplexVector wc = std::sqrt(split.eirp_w) / double(n) * steering(split.theta_comm, n).conjugate();
  CHECK(tx_beamformer(split, n) == ws);
  split.rho = 0.0;
  CHECK(tx_beamformer(split, n) == wc);

  split = {0.3, deg2rad(10.0), deg2rad(10.0), 19.95};
  const double expected = (std::sqrt(0.3) + std::sqrt(0.7)) * std::sqrt(19.95) / std::sqrt(double(n));
  CHECK(tx_beamformer(split, n).norm() == doctest::Approx(expected).epsilon(1e-12));

  split.rho = 1.5;
  CHECK_THROWS_AS(tx_beamformer(split, n), jsc::ConfigError);
  split = {0.5, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(tx_beamformer(split, n), jsc::ConfigError);
}

TEST_CASE("receive combiner") {
  CHECK((rx_combiner(0.0, 8) - ComplexVector::Ones(8)).norm() == 0.0);
  const double th = deg2rad(-41.0);
  const Complex gain = (rx_combiner(th, 50).transpose() * steering(th, 50))(0);
  CHECK(gain.real() == doctest::Approx(50.0));
  CHECK(std::abs(gain.imag()) <= 1e-12);
  for (int i = -900; i <= 900; ++i) {
    const double other = deg2rad(i * 0.1);
    const double g = std::abs((rx_combiner(th, 50).transpose() * steering(other, 50))(0)) / 50.0;
    CHECK(g <= 1.0 + 1e-12);
  }
}

TEST_CASE("array factor power") {
  CHECK(array_factor_power(0.3, 0.3, 10) == doctest::Approx(1.0));
  CHECK(array_factor_power_sin(2.0 / 10.0, 10) <= 1e-12);
  CHECK(array_factor_power_sin(0.37, 17) == doctest::Approx(array_factor_power_sin(-0.37, 17)).epsilon(1e-12));
  jsc::Rng rng(4);
  for (int i = 0; i < 10000; ++i) {
    const double b = rng.uniform(-1.0, 1.0), t = rng.uniform(-1.0, 1.0);
    const double g = array_factor_power(b, t, 2 + i % 99);
    CHECK(g >= 0.0);
    CHECK(g <= 1.0);
    if (g == 1.0) CHECK(std::sin(b) == doctest::Approx(std::sin(t)));
  }
}

TEST_CASE("-10 dB beamwidth") {
  const double w10 = beamwidth_minus10db(10), w20 = beamwidth_minus10db(20), w50 = beamwidth_minus10db(50),
               w100 = beamwidth_minus10db(100);
  CHECK(w10 > w20);
  CHECK(w20 > w50);
  CHECK(w50 > w100);
  // Edge of the interval is exactly the -10 dB point.
  for (std::size_t n : {10u, 50u, 100u}) {
    const double u = std::sin(beamwidth_minus10db(n) / 2);
    CHECK(array_factor_power_sin(u, n) == doctest::Approx(0.1).epsilon(1e-9));
    CHECK(array_factor_power_sin(0.999 * u, n) > 0.1);
  }
  CHECK_THROWS_AS(beamwidth_minus10db(1), jsc::ConfigError);
}

TEST_CASE("scan directions") {
  ScanGrid g{deg2rad(-60.0), deg2rad(60.0), 2};
  auto d = scan_directions(g);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == deg2rad(-60.0));
  CHECK(d[1] == deg2rad(60.0));
  g.ndir = 61;
  CHECK(rad2deg(g.step()) == doctest::Approx(2.0));
  d = scan_directions(g);
  CHECK(d.size() == 61);
  for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i] > d[i - 1]);
  CHECK(d.back() == deg2rad(60.0));
  for (double x : d) CHECK(std::abs(x) <= deg2rad(60.0) + 1e-15);
  g.ndir = 1;
  CHECK_THROWS_AS(scan_directions(g), jsc::ConfigError);
}
