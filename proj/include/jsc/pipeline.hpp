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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "jsc/channel.hpp"
#include "jsc/estimator.hpp"
#include "jsc/waveform.hpp"

namespace jsc::est {

// How the per-direction receive statistics are produced.
enum class Synthesis {
  Explicit,    // full N_R x (K Ms) stack with data symbols, then covariance / combine / divide
  Compressed,  // same joint distribution drawn from a rank-limited sufficient statistic
};

/// Everything fixed for one scan: radio, arrays, targets and their random draws.
struct SceneSetup {
  wave::Numerology numerology;
  std::size_t n_t = 0;
  std::size_t n_r = 0;
  double rho = 1.0;
  double eirp_w = 1.0;
  double theta_comm = 0.0;  // rad
  std::vector<chan::TargetTruth> targets;
  chan::ChannelRealization realization;
  chan::SelfInterference si;
  double noise_var = 0.0;  // per receive element and grid cell
};

void validate(const SceneSetup& scene);

struct PipelineOptions {
  Synthesis synthesis = Synthesis::Compressed;
  double music_window = 0.0;  // full width, rad (the -10 dB beamwidth)
  double music_step = 0.0;    // rad
  double eta = 0.0;           // absolute periodogram threshold
  bool force_angle = false;   // run MUSIC even without a detection
  bool range_profile = false; // keep max-over-Doppler per range bin
};

/// Receive statistics of one sensing direction after data removal.
struct DirectionData {
  ComplexMatrix grid;        // K x Ms combined, symbol-free grid g
  ComplexMatrix covariance;  // N_R x N_R sample covariance (empty when not requested)
};

/// Reference path: draws QPSK symbols and element noise, builds the full receive stack.
DirectionData synthesize_explicit(const SceneSetup& scene, double theta_sensing, std::uint64_t seed);

/// Draws the combined grid immediately and the sample covariance on demand.
///
/// Per cell the receive vector is A c(n) + noise, with c(n) the target and leakage
/// amplitudes. Rotating the noise by a unitary whose first row is the normalized
/// combiner splits it into the combined-noise row (drawn explicitly, since it enters
/// the grid) and N_R - 1 rows that only reach the covariance. Those rows are drawn as
/// their projection onto the row space of the explicit rows plus a Wishart remainder.
/// The data symbols have unit modulus and drop out of both outputs, so they are not drawn.
class CompressedSynthesis {
 public:
  CompressedSynthesis(const SceneSetup& scene, double theta_sensing, std::uint64_t seed);

  const ComplexMatrix& grid() const { return grid_; }
  ComplexMatrix covariance() const;

 private:
  const SceneSetup& scene_;
  double theta_;
  std::uint64_t seed_;
  std::vector<Complex> tx_gain_;
  Complex alpha_si_;
  std::vector<chan::PathPhasors> phasors_;
  ComplexMatrix noise_row_;  // K x Ms combined-noise row before the sqrt(N_R) gain
  ComplexMatrix grid_;
};

struct DirectionOutcome {
  std::optional<DetectionRecord> record;
  MapSummary map;
  std::size_t model_order = 0;
  std::optional<DoaEstimate> doa;  // present whenever MUSIC ran
};

/// Noise subspace for MUSIC: eigenvectors past the model order, or all but the
/// dominant one when the order is 0.
ComplexMatrix noise_subspace(const num::EigenDecomposition& eig, std::size_t model_order);

/// One sensing step: synthesis, periodogram detection and, when needed, MDL + MUSIC
/// inside [theta - window/2, theta + window/2].
DirectionOutcome per_direction_pipeline(std::size_t direction_index, double theta_sensing, const SceneSetup& scene,
                                        const PipelineOptions& options, std::uint64_t seed,
                                        PeriodogramEngine& engine);

}  // namespace jsc::est
