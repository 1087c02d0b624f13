#include <doctest.h>

#include <array>
#include <cmath>

#include "jsc/error.hpp"
#include "jsc/waveform.hpp"

using namespace jsc::wave;

TEST_CASE("numerology presets") {
  const auto nr100 = numerology_preset("NR100");
  CHECK(nr100.fc == 3.5e9);
  CHECK(nr100.delta_f == 30e3);
  CHECK(nr100.k == 3276);
  CHECK(nr100.m == 280);
  CHECK(nr100.ms == 112);
  CHECK(nr100.fp == 10);
  CHECK(nr100.ts == doctest::Approx(35.714e-6).epsilon(1e-4));
  CHECK(std::abs(nr100.ts * double(nr100.m) - nr100.tf) <= 1e-12);

  const auto nr400 = numerology_preset("nr400");
  CHECK(nr400.fc == 28e9);
  CHECK(nr400.delta_f == 120e3);
  CHECK(nr400.k == 3168);
  CHECK(nr400.m == 1120);
  CHECK(nr400.ts == doctest::Approx(8.9286e-6).epsilon(1e-4));
  CHECK(nr400.wavelength() == doctest::Approx(kSpeedOfLight / 28e9));

  CHECK_THROWS_AS(numerology_preset("NR200"), jsc::ConfigError);
}

TEST_CASE("custom numerology validation") {
  CHECK_NOTHROW(make_numerology("x", 1e9, 15e3, 64, 14, 14, 2));
  CHECK_THROWS_AS(make_numerology("x", 1e9, 15e3, 64, 14, 15, 2), jsc::ConfigError);
  CHECK_THROWS_AS(make_numerology("x", 1e9, 0.0, 64, 14, 14, 2), jsc::ConfigError);
  CHECK_THROWS_AS(make_numerology("x", -1.0, 15e3, 64, 14, 14, 2), jsc::ConfigError);
  CHECK_THROWS_AS(make_numerology("x", 1e9, 15e3, 0, 14, 14, 2), jsc::ConfigError);
  CHECK_THROWS_AS(make_numerology("x", 1e9, 15e3, 64, 14, 14, 0), jsc::ConfigError);
}

TEST_CASE("QPSK grid: unit modulus, determinism, balance") {
  const auto nm = numerology_preset("NR400");
  const auto a = generate_grid(nm, 42);
  const auto b = generate_grid(nm, 42);
  const auto c = generate_grid(nm, 43);
  CHECK(a.symbols.rows() == Eigen::Index(nm.k));
  CHECK(a.symbols.cols() == Eigen::Index(nm.ms));
  CHECK(a.symbols == b.symbols);
  CHECK(a.symbols != c.symbols);

  const double h = 1.0 / std::sqrt(2.0);
  std::array<std::size_t, 4> counts{};
  for (Eigen::Index i = 0; i < a.symbols.size(); ++i) {
    const auto x = a.symbols(i);
    REQUIRE(std::abs(std::abs(x.real()) - h) == 0.0);
    REQUIRE(std::abs(std::abs(x.imag()) - h) == 0.0);
    CHECK(std::abs(std::abs(x) - 1.0) <= 1e-15);
    ++counts[(x.real() > 0 ? 1 : 0) + (x.imag() > 0 ? 2 : 0)];
  }
  const double n = double(a.symbols.size());
  double chi2 = 0.0;
  for (auto cnt : counts) {
    CHECK(double(cnt) / n == doctest::Approx(0.25).epsilon(0.04));
    chi2 += std::pow(double(cnt) - n / 4, 2) / (n / 4);
  }
  CHECK(chi2 < 16.27);  // chi-square, 3 dof, p = 0.001
}

TEST_CASE("scan schedule") {
  const auto nr400 = numerology_preset("NR400");
  const auto nr100 = numerology_preset("NR100");
  auto s = scan_schedule(60, nr400);
  CHECK(s.frames == 6);
  CHECK(s.duration_s == doctest::Approx(0.060));
  s = scan_schedule(1, nr400);
  CHECK(s.frames == 1);
  CHECK(s.duration_s == doctest::Approx(0.010));
  s = scan_schedule(30, nr100);
  CHECK(s.frames == 12);
  CHECK(s.duration_s == doctest::Approx(0.120));
  CHECK_THROWS_AS(scan_schedule(0, nr400), jsc::ConfigError);

  std::size_t prev = 0;
  for (std::size_t ndir = 1; ndir <= 200; ++ndir) {
    const auto f = scan_schedule(ndir, nr100).frames;
    CHECK(f >= prev);
    CHECK(f * nr100.m >= nr100.ms * ndir);
    prev = f;
  }
}

TEST_CASE("padded sizes") {
  const auto nr100 = padded_sizes(numerology_preset("NR100"));
  const auto nr400 = padded_sizes(numerology_preset("NR400"));
  CHECK(nr100.kp == 4096);
  CHECK(nr100.mp == 2048);
  CHECK(nr400.kp == 4096);
  CHECK(nr400.mp == 2048);
  const auto exact = padded_sizes(make_numerology("x", 1e9, 15e3, 4096, 14, 8, 2));
  CHECK(exact.kp == 4096);
  CHECK(exact.mp == 16);
}
