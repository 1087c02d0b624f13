// Copyright 2026 The jsc-sim Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jsc/pipeline.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "jsc/arraybeam.hpp"
#include "jsc/error.hpp"
#include "jsc/rng.hpp"

namespace jsc::est {

namespace {

enum Stream : std::uint64_t { kGridNoise = 0, kCovarianceNoise = 1, kSymbols = 2, kElementNoise = 3 };

ComplexVector tx_weights(const SceneSetup& scene, double theta_sensing) {
  beam::BeamSplit split;
  split.rho = scene.rho;
  split.theta_sensing = theta_sensing;
  split.theta_comm = scene.theta_comm;
  split.eirp_w = scene.eirp_w;
  return beam::tx_beamformer(split, scene.n_t);
}

// Unitary U with first row w^T / ||w||.
ComplexMatrix combiner_basis(const ComplexVector& w_r) {
  const ComplexVector cu = w_r.conjugate() / w_r.norm();
  Eigen::HouseholderQR<ComplexMatrix> qr{ComplexMatrix(cu)};
  ComplexMatrix p = qr.householderQ();
  const Complex c = cu.dot(p.col(0));
  p.col(0) *= std::conj(c) / std::abs(c);
  return p.adjoint();
}

// Complex Wishart W_p(dof, variance I) by the Bartlett decomposition.
ComplexMatrix wishart(std::size_t p, double dof, double variance, Rng& rng) {
  const auto n = static_cast<Eigen::Index>(p);
  ComplexMatrix t = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    t(i, i) = std::sqrt(variance * rng.gamma(dof - static_cast<double>(i), 1.0));
    for (Eigen::Index j = 0; j < i; ++j) t(i, j) = rng.complex_normal(variance);
  }
  ComplexMatrix w = ComplexMatrix::Zero(n, n);
  w.selfadjointView<Eigen::Lower>().rankUpdate(t);
  w.triangularView<Eigen::StrictlyUpper>() = w.adjoint();
  return w;
}

}  // namespace

void validate(const SceneSetup& scene) {
  if (scene.n_t < 1) throw ConfigError("transmit array needs at least one element");
  if (scene.n_r < 2) throw ConfigError("sensing array needs at least two elements");
  if (scene.targets.size() >= scene.n_r)
    throw ConfigError("number of targets (" + std::to_string(scene.targets.size()) +
                      ") must be less than the number of sensing array elements (" + std::to_string(scene.n_r) +
                      ")");
  if (scene.realization.paths.size() != scene.targets.size())
    throw DimensionError("channel realization does not match the target list");
  if (!(scene.noise_var >= 0.0) || !std::isfinite(scene.noise_var))
    throw DomainError("noise variance must be finite and nonnegative");
}

DirectionData synthesize_explicit(const SceneSetup& scene, double theta_sensing, std::uint64_t seed) {
  validate(scene);
  const auto symbols = wave::generate_grid(scene.numerology, derive_seed(seed, {kSymbols}));
  Rng rng(derive_seed(seed, {kElementNoise}));
  const auto stack = chan::received_grid(symbols, scene.numerology, tx_weights(scene, theta_sensing), scene.targets,
                                         scene.realization, scene.si, scene.noise_var, scene.n_r, rng);
  DirectionData out;
  out.covariance = sample_covariance(stack.samples);
  out.grid = remove_data(chan::combine(stack, beam::rx_combiner(theta_sensing, scene.n_r)), symbols.symbols);
  return out;
}

CompressedSynthesis::CompressedSynthesis(const SceneSetup& scene, double theta_sensing, std::uint64_t seed)
    : scene_(scene), theta_(theta_sensing), seed_(seed) {
  validate(scene);
  const auto& nm = scene.numerology;
  const auto k_count = static_cast<Eigen::Index>(nm.k);
  const auto m_count = static_cast<Eigen::Index>(nm.ms);

  tx_gain_ = chan::tx_gains(scene.targets, tx_weights(scene, theta_sensing));
  alpha_si_ = chan::si_amplitude(scene.si, scene.realization, tx_gain_);
  for (const auto& path : scene.realization.paths) phasors_.push_back(chan::path_phasors(path, nm));

  const ComplexVector w_r = beam::rx_combiner(theta_sensing, scene.n_r);
  const std::size_t n_paths = scene.targets.size();
  std::vector<Complex> weight(n_paths);
  for (std::size_t l = 0; l < n_paths; ++l) {
    const Complex h = (w_r.transpose() * beam::steering(scene.targets[l].theta, scene.n_r))(0);
    weight[l] = h * tx_gain_[l];
  }
  const Complex leakage = w_r.sum() * alpha_si_;

  noise_row_ = ComplexMatrix::Zero(k_count, m_count);
  if (scene.noise_var > 0.0) {
    Rng rng(derive_seed(seed, {kGridNoise}));
    for (Eigen::Index m = 0; m < m_count; ++m)
      for (Eigen::Index k = 0; k < k_count; ++k) noise_row_(k, m) = rng.complex_normal(scene.noise_var);
  }

  grid_ = noise_row_ * w_r.norm();
  std::vector<Complex> coef(n_paths);
  for (Eigen::Index m = 0; m < m_count; ++m) {
    for (std::size_t l = 0; l < n_paths; ++l) coef[l] = weight[l] * phasors_[l].over_m[static_cast<std::size_t>(m)];
    for (Eigen::Index k = 0; k < k_count; ++k) {
      Complex acc = leakage;
      for (std::size_t l = 0; l < n_paths; ++l) acc += coef[l] * phasors_[l].over_k[static_cast<std::size_t>(k)];
      grid_(k, m) += acc;
    }
  }
}

ComplexMatrix CompressedSynthesis::covariance() const {
  const auto& nm = scene_.numerology;
  const std::size_t n_paths = scene_.targets.size();
  const bool has_si = alpha_si_ != Complex{};
  const bool noisy = scene_.noise_var > 0.0;
  const auto n_sig = static_cast<Eigen::Index>(n_paths + (has_si ? 1 : 0));
  const Eigen::Index dim = n_sig + (noisy ? 1 : 0);
  const double n_samples = static_cast<double>(nm.k) * static_cast<double>(nm.ms);
  const auto n_r = static_cast<Eigen::Index>(scene_.n_r);

  // Gram matrix of the explicit rows: target echoes, leakage, combined noise.
  ComplexMatrix gram = ComplexMatrix::Zero(dim, dim);
  std::vector<Complex> sum_k(n_paths), sum_m(n_paths);
  for (std::size_t l = 0; l < n_paths; ++l) {
    for (const auto& v : phasors_[l].over_k) sum_k[l] += v;
    for (const auto& v : phasors_[l].over_m) sum_m[l] += v;
  }
  for (std::size_t a = 0; a < n_paths; ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      Complex sk{}, sm{};
      for (std::size_t k = 0; k < nm.k; ++k) sk += phasors_[a].over_k[k] * std::conj(phasors_[b].over_k[k]);
      for (std::size_t m = 0; m < nm.ms; ++m) sm += phasors_[a].over_m[m] * std::conj(phasors_[b].over_m[m]);
      gram(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          tx_gain_[a] * std::conj(tx_gain_[b]) * sk * sm;
    }
  }
  if (has_si) {
    const Eigen::Index s = static_cast<Eigen::Index>(n_paths);
    for (std::size_t l = 0; l < n_paths; ++l)
      gram(s, static_cast<Eigen::Index>(l)) = alpha_si_ * std::conj(tx_gain_[l] * sum_k[l] * sum_m[l]);
    gram(s, s) = n_samples * std::norm(alpha_si_);
  }
  if (noisy) {
    const Eigen::Index v = n_sig;
    for (std::size_t l = 0; l < n_paths; ++l) {
      Complex acc{};
      for (std::size_t m = 0; m < nm.ms; ++m) {
        Complex inner{};
        for (std::size_t k = 0; k < nm.k; ++k)
          inner += phasors_[l].over_k[k] *
                   std::conj(noise_row_(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(m)));
        acc += phasors_[l].over_m[m] * inner;
      }
      gram(v, static_cast<Eigen::Index>(l)) = std::conj(tx_gain_[l] * acc);
    }
    if (has_si) gram(v, v - 1) = std::conj(alpha_si_ * std::conj(noise_row_.sum()));
    gram(v, v) = noise_row_.squaredNorm();
  }
  gram.triangularView<Eigen::StrictlyUpper>() = gram.adjoint();

  // Rank-revealing square root: gram = c c^H with c of full column rank.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram);
  const Eigen::VectorXd& lambda = es.eigenvalues();
  const double top = dim > 0 ? lambda(dim - 1) : 0.0;
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < dim; ++i)
    if (lambda(i) > 1e-12 * top && lambda(i) > 0.0) keep.push_back(i);
  const auto rank = static_cast<Eigen::Index>(keep.size());
  ComplexMatrix c(dim, rank);
  for (Eigen::Index j = 0; j < rank; ++j) c.col(j) = es.eigenvectors().col(keep[static_cast<std::size_t>(j)]) *
                                                    std::sqrt(lambda(keep[static_cast<std::size_t>(j)]));

  const ComplexVector w_r = beam::rx_combiner(theta_, scene_.n_r);
  const ComplexMatrix u = combiner_basis(w_r);
  ComplexMatrix response(n_r, n_sig);
  for (std::size_t l = 0; l < n_paths; ++l)
    response.col(static_cast<Eigen::Index>(l)) = beam::steering(scene_.targets[l].theta, scene_.n_r);
  if (has_si) response.col(n_sig - 1).setOnes();

  ComplexMatrix rotated = u * response * c.topRows(n_sig);  // n_r x rank
  Rng rng(derive_seed(seed_, {kCovarianceNoise}));
  if (noisy) {
    rotated.row(0) += c.row(n_sig);
    for (Eigen::Index j = 0; j < rank; ++j)
      for (Eigen::Index i = 1; i < n_r; ++i) rotated(i, j) += rng.complex_normal(scene_.noise_var);
  }
  ComplexMatrix scatter = rotated * rotated.adjoint();
  if (noisy) {
    scatter.bottomRightCorner(n_r - 1, n_r - 1) +=
        wishart(static_cast<std::size_t>(n_r - 1), n_samples - static_cast<double>(rank), scene_.noise_var, rng);
  }
  ComplexMatrix r = u.adjoint() * scatter * u / n_samples;
  r = 0.5 * (r + r.adjoint()).eval();
  return r;
}

ComplexMatrix noise_subspace(const num::EigenDecomposition& eig, std::size_t model_order) {
  const auto n = eig.vectors.cols();
  const auto order = model_order == 0 ? Eigen::Index{1} : static_cast<Eigen::Index>(model_order);
  if (order >= n) throw DimensionError("model order leaves no noise subspace");
  return eig.vectors.rightCols(n - order);
}

DirectionOutcome per_direction_pipeline(std::size_t direction_index, double theta_sensing, const SceneSetup& scene,
                                        const PipelineOptions& options, std::uint64_t seed,
                                        PeriodogramEngine& engine) {
  if (!(options.music_window > 0.0) || !(options.music_step > 0.0))
    throw ConfigError("MUSIC window and grid step must be positive");

  std::optional<CompressedSynthesis> compressed;
  DirectionData data;
  if (options.synthesis == Synthesis::Compressed) {
    compressed.emplace(scene, theta_sensing, seed);
  } else {
    data = synthesize_explicit(scene, theta_sensing, seed);
  }
  const ComplexMatrix& grid = compressed ? compressed->grid() : data.grid;

  DirectionOutcome out;
  out.map = engine.summarize(grid, options.range_profile);
  const auto detection = detect_and_estimate(out.map, options.eta, scene.numerology);
  if (!detection && !options.force_angle) return out;

  const ComplexMatrix cov = compressed ? compressed->covariance() : data.covariance;
  const auto eig = num::hermitian_eig(cov);
  const std::vector<double> lambda(eig.values.data(), eig.values.data() + eig.values.size());
  out.model_order = mdl_order(lambda, static_cast<double>(scene.numerology.samples_per_direction()));

  const double half_steps = std::floor(0.5 * options.music_window / options.music_step + 1e-9);
  const double span = half_steps * options.music_step;
  const auto spectrum =
      music_spectrum(noise_subspace(eig, out.model_order), theta_sensing - span, theta_sensing + span,
                     options.music_step);
  out.doa = doa_estimate(spectrum);

  if (detection) {
    DetectionRecord rec;
    rec.r_hat = detection->r_hat;
    rec.v_hat = detection->v_hat;
    rec.peak_power = detection->peak;
    rec.theta_hat = out.doa->theta;
    rec.music_peak = out.doa->value;
    rec.direction_index = direction_index;
    rec.model_order = out.model_order;
    out.record = rec;
  }
  return out;
}

}  // namespace jsc::est
