#include <doctest.h>

#include <cmath>
#include <vector>

#include "jsc/arraybeam.hpp"
#include "jsc/channel.hpp"
#include "jsc/error.hpp"
#include "jsc/waveform.hpp"

using namespace jsc::chan;
using jsc::beam::deg2rad;

namespace {

LinkBudget reference_budget(double rho) {
  LinkBudget b;
  b.eirp_w = LinkBudget::dbm_to_w(43.0);
  b.rho = rho;
  return b;
}

// Radar equation evaluated term by term, independently of path_gain/noise_power.
double snr_oracle_db(double d, double rho, double rcs, double gamma) {
  const double c = 299792458.0, fc = 28e9, pi = 3.14159265358979323846;
  const double eirp = std::pow(10.0, (43.0 - 30.0) / 10.0);
  const double pr = rho * eirp * c * c * rcs * gamma / (std::pow(4 * pi, 3) * fc * fc * std::pow(d, 4));
  const double n0 = 1.38e-23 * 290.0 * 10.0;
  return 10.0 * std::log10(pr / (n0 * 3168.0 * 120e3));
}

}  // namespace

TEST_CASE("per-element SNR from the link budget") {
  const auto nm = jsc::wave::numerology_preset("NR400");
  TargetTruth t{50.0, 0.0, 0.0, 1.0};
  const double snr = 10.0 * std::log10(snr_per_element(t, reference_budget(0.3), nm, 1.0));
  CHECK(snr == doctest::Approx(-24.4).epsilon(0.003));
  CHECK(snr == doctest::Approx(snr_oracle_db(50.0, 0.3, 1.0, 1.0)).epsilon(1e-12));

  TargetTruth far = t;
  far.range_m = 100.0;
  CHECK(10.0 * std::log10(snr_per_element(far, reference_budget(0.3), nm, 1.0)) - snr ==
        doctest::Approx(-40.0 * std::log10(2.0)).epsilon(1e-12));
  CHECK(snr_per_element(t, reference_budget(0.6), nm, 1.0) ==
        doctest::Approx(2.0 * snr_per_element(t, reference_budget(0.3), nm, 1.0)).epsilon(1e-14));

  jsc::Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const double d = rng.uniform(5.0, 200.0), rho = rng.uniform(0.01, 1.0), g = rng.uniform(0.0, 1.0);
    const double rcs = rng.uniform(0.1, 10.0);
    TargetTruth x{d, 0.0, 0.0, rcs};
    const double lin = snr_per_element(x, reference_budget(rho), nm, g);
    if (g > 0) CHECK(10.0 * std::log10(lin) == doctest::Approx(snr_oracle_db(d, rho, rcs, g)).epsilon(1e-10));
  }

  t.range_m = 0.0;
  CHECK_THROWS_AS(snr_per_element(t, reference_budget(0.3), nm, 1.0), jsc::DomainError);
  t.range_m = 50.0;
  CHECK_THROWS_AS(snr_per_element(t, reference_budget(0.3), nm, 1.5), jsc::DomainError);
}

TEST_CASE("channel realization") {
  const auto nm = jsc::wave::numerology_preset("NR400");
  std::vector<TargetTruth> ts{{42.0, 0.1, 20.0, 1.0}, {30.0, -0.2, 0.0, 2.0}};
  const auto r = realize_channel(ts, nm, AmplitudeMode::LinkBudget, reference_budget(0.3), 9);
  REQUIRE(r.paths.size() == 2);
  CHECK(r.paths[0].tau_s == doctest::Approx(280.2e-9).epsilon(1e-4));
  CHECK(r.paths[0].doppler_hz == doctest::Approx(3734.0).epsilon(1e-3));
  CHECK(r.paths[1].doppler_hz == 0.0);
  CHECK(std::norm(r.paths[1].alpha) == doctest::Approx(path_gain(ts[1], reference_budget(0.3), nm)));

  const auto d = realize_channel(ts, nm, AmplitudeMode::SnrDirect, reference_budget(0.3), 9);
  CHECK(std::norm(d.paths[0].alpha) == doctest::Approx(1.0 / (0.3 * reference_budget(0.3).eirp_w)));
  // Same seed, same phases.
  CHECK(std::arg(d.paths[0].alpha) == doctest::Approx(std::arg(r.paths[0].alpha)));

  // Phases are uniform: circular mean of many draws is near zero.
  std::vector<TargetTruth> one{{40.0, 0.0, 0.0, 1.0}};
  Complex acc{};
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const auto p = realize_channel(one, nm, AmplitudeMode::SnrDirect, reference_budget(1.0), jsc::derive_seed(5, {std::uint64_t(i)}));
    acc += p.paths[0].alpha / std::abs(p.paths[0].alpha);
  }
  CHECK(std::abs(acc) / n < 5.0 / std::sqrt(double(n)));
}

namespace {

struct SmallSetup {
  jsc::wave::Numerology nm = jsc::wave::make_numerology("small", 28e9, 120e3, 32, 16, 8, 2);
  jsc::wave::SymbolGrid symbols = jsc::wave::generate_grid(nm, 77);
};

}  // namespace

TEST_CASE("received grid structure") {
  SmallSetup s;
  const std::size_t n_r = 8;
  const auto w_t = jsc::beam::tx_beamformer({1.0, 0.2, 0.0, 1.0}, 8);
  jsc::Rng rng(1);

  const auto empty = received_grid(s.symbols, s.nm, w_t, {}, {}, {}, 0.0, n_r, rng);
  CHECK(empty.samples.isZero(0.0));
  CHECK(combine(empty, jsc::beam::rx_combiner(0.2, n_r)).isZero(0.0));

  std::vector<TargetTruth> one{{25.0, 0.2, 7.0, 1.0}};
  const auto real = realize_channel(one, s.nm, AmplitudeMode::SnrDirect, {1.0, 1.0, 10.0, 290.0, 1.0}, 2);
  const auto stack = received_grid(s.symbols, s.nm, w_t, one, real, {}, 0.0, n_r, rng);
  Eigen::JacobiSVD<jsc::num::ComplexMatrix> svd(stack.samples);
  const auto sv = svd.singularValues();
  CHECK(sv(0) > 0.0);
  CHECK(sv(1) <= 1e-12 * sv(0));

  // Matched combiner: coherent gain n_r relative to element 0.
  const auto y = combine(stack, jsc::beam::rx_combiner(0.2, n_r));
  for (Eigen::Index c = 0; c < y.size(); ++c)
    CHECK(std::abs(y(c)) == doctest::Approx(double(n_r) * std::abs(stack.samples(0, c))).epsilon(1e-12));

  // Two targets: rank two.
  std::vector<TargetTruth> two{{25.0, 0.2, 7.0, 1.0}, {40.0, -0.5, -3.0, 1.0}};
  const auto real2 = realize_channel(two, s.nm, AmplitudeMode::SnrDirect, {1.0, 1.0, 10.0, 290.0, 1.0}, 3);
  const auto stack2 = received_grid(s.symbols, s.nm, w_t, two, real2, {}, 0.0, n_r, rng);
  Eigen::JacobiSVD<jsc::num::ComplexMatrix> svd2(stack2.samples);
  CHECK(svd2.singularValues()(2) <= 1e-12 * svd2.singularValues()(0));

  std::vector<TargetTruth> many(n_r, TargetTruth{25.0, 0.0, 0.0, 1.0});
  const auto real_many = realize_channel(many, s.nm, AmplitudeMode::SnrDirect, {1.0, 1.0, 10.0, 290.0, 1.0}, 4);
  CHECK_THROWS_AS(received_grid(s.symbols, s.nm, w_t, many, real_many, {}, 0.0, n_r, rng), jsc::ConfigError);
  CHECK_THROWS_AS(combine(stack, jsc::beam::rx_combiner(0.0, n_r + 1)), jsc::DimensionError);
}

TEST_CASE("self-interference at 0 dB SSIR") {
  SmallSetup s;
  const std::size_t n_r = 6;
  const auto w_t = jsc::beam::tx_beamformer({1.0, -0.3, 0.0, 2.0}, 6);
  std::vector<TargetTruth> one{{30.0, -0.3, 4.0, 1.0}};
  const auto real = realize_channel(one, s.nm, AmplitudeMode::SnrDirect, {2.0, 1.0, 10.0, 290.0, 1.0}, 6);
  jsc::Rng rng(2);
  const auto target = received_grid(s.symbols, s.nm, w_t, one, real, {}, 0.0, n_r, rng);
  const auto both = received_grid(s.symbols, s.nm, w_t, one, real, {0.0}, 0.0, n_r, rng);
  const jsc::num::ComplexMatrix si = both.samples - target.samples;
  for (Eigen::Index e = 0; e < si.rows(); ++e) {
    CHECK(si.row(e).squaredNorm() == doctest::Approx(target.samples.row(e).squaredNorm()).epsilon(1e-10));
    // Constant across the grid once the data symbol is removed.
    for (Eigen::Index c = 0; c < si.cols(); ++c) {
      const auto k = c % Eigen::Index(s.nm.k), m = c / Eigen::Index(s.nm.k);
      CHECK(std::abs(si(e, c) / s.symbols.symbols(k, m) - si(0, 0) / s.symbols.symbols(0, 0)) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(received_grid(s.symbols, s.nm, w_t, {}, {}, {0.0}, 0.0, n_r, rng), jsc::ConfigError);
}

TEST_CASE("combined noise variance and element SNR") {
  auto nm = jsc::wave::make_numerology("noise", 28e9, 120e3, 1024, 112, 100, 2);
  const auto symbols = jsc::wave::generate_grid(nm, 1);
  const std::size_t n_r = 10;
  const double var = 0.37;
  const auto w_t = jsc::beam::tx_beamformer({1.0, 0.0, 0.0, 1.0}, 10);
  jsc::Rng rng(11);
  const auto noise = received_grid(symbols, nm, w_t, {}, {}, {}, var, n_r, rng);
  const auto y = combine(noise, jsc::beam::rx_combiner(0.4, n_r));
  CHECK(y.squaredNorm() / double(y.size()) == doctest::Approx(double(n_r) * var).epsilon(0.01));

  // Snr-direct: aligned echo has unit element power, so SNR = 1 / noise variance.
  std::vector<TargetTruth> one{{35.0, 0.4, 1.0, 1.0}};
  const double eirp = 3.0;
  const auto w = jsc::beam::tx_beamformer({1.0, 0.4, 0.0, eirp}, 10);
  const auto real = realize_channel(one, nm, AmplitudeMode::SnrDirect, {eirp, 1.0, 10.0, 290.0, 1.0}, 8);
  const auto echo = received_grid(symbols, nm, w, one, real, {}, 0.0, n_r, rng);
  const double p_echo = echo.samples.squaredNorm() / double(echo.samples.size());
  const double p_noise = noise.samples.squaredNorm() / double(noise.samples.size());
  CHECK(p_echo == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p_echo / p_noise == doctest::Approx(1.0 / var).epsilon(0.02));
}
