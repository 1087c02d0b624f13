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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace jsc::num {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

bool is_power_of_two(std::size_t n);

// Smallest power of two >= n (n itself when already a power of two). n = 0 gives 1.
std::size_t next_power_of_two(std::size_t n);

// ---------------------------------------------------------------------------
// Hermitian eigendecomposition
// ---------------------------------------------------------------------------

struct EigenDecomposition {
  RealVector values;     // descending
  ComplexMatrix vectors; // column i pairs with values[i]
  int sweeps = 0;
};

/// Cyclic complex Jacobi on a Hermitian matrix.
///
/// Stops when the off-diagonal Frobenius norm falls to 1e-12 of ||A||_F or after
/// 100 sweeps. Throws DimensionError for non-square input and ConfigError when A
/// departs from Hermitian symmetry by more than 1e-9 relative (Frobenius).
EigenDecomposition hermitian_eig(const ComplexMatrix& a);

// ---------------------------------------------------------------------------
// FFT
// ---------------------------------------------------------------------------

/// Iterative radix-2 plan of a fixed power-of-two length.
///
/// forward:  X[k] = sum_n x[n] e^{-j 2 pi k n / N}
/// backward: x[n] = sum_k X[k] e^{+j 2 pi k n / N}   (unscaled)
/// inverse:  backward / N
class Fft {
 public:
  explicit Fft(std::size_t n);

  std::size_t size() const { return n_; }

  void forward(std::span<Complex> data) const { transform(data, false); }
  void backward(std::span<Complex> data) const { transform(data, true); }
  void inverse(std::span<Complex> data) const;

 private:
  void transform(std::span<Complex> data, bool conjugate_twiddles) const;

  std::size_t n_;
  std::vector<std::size_t> swap_pairs_;  // flattened (i, j) bit-reversal swaps
  std::vector<Complex> twiddles_;        // stage h occupies [h - 1, 2h - 1)
};

// Direction of each axis of the 2-D transform: -1 is e^{-j...} (FFT), +1 is e^{+j...} (unscaled IFFT).
struct TransformSigns {
  int subcarrier = +1;
  int symbol = -1;
};

/// Zero-padded 2-D transform of a K x Ms grid to Kp x Mp bins, evaluated row by row.
///
/// out(q, p) = sum_k sum_m grid(k, m) e^{s_k j 2 pi k q / Kp} e^{s_m j 2 pi m p / Mp}
///
/// The subcarrier axis is transformed first (Ms transforms of length Kp), then each
/// of the Kp rows is produced by Mp / Mb interleaved transforms of length
/// Mb = nextpow2(Ms), which skips the butterflies that only ever see padding zeros.
/// Instances hold scratch buffers and are not shareable between threads.
class PaddedTransform2d {
 public:
  PaddedTransform2d(std::size_t k, std::size_t ms, std::size_t kp, std::size_t mp,
                    TransformSigns signs = {});

  std::size_t kp() const { return kp_; }
  std::size_t mp() const { return mp_; }

  // Calls visit(q, row) for q = 0..Kp-1 where row spans the Mp output bins of range bin q.
  template <class Visitor>
  void run(const ComplexMatrix& grid, Visitor&& visit) {
    load(grid);
    for (std::size_t q = 0; q < kp_; ++q) {
      row_transform(q);
      visit(q, std::span<const Complex>(row_));
    }
  }

 private:
  void load(const ComplexMatrix& grid);
  void row_transform(std::size_t q);

  std::size_t k_, ms_, kp_, mp_, mb_, decim_;
  TransformSigns signs_;
  Fft fft_k_;
  std::vector<Complex> stage1_;  // kp x ms, range bin major
  // Symbol-axis stage, split real/imaginary with the decim interleaved transforms innermost.
  std::vector<std::size_t> bitrev_;   // mb
  std::vector<double> pre_re_, pre_im_;  // ms x decim pre-twiddles
  std::vector<double> tw_re_, tw_im_;    // butterfly twiddles, stage h at [h - 1, 2h - 1)
  std::vector<double> re_, im_;          // mb x decim work buffer
  std::vector<Complex> row_;             // mp
};

/// Full Kp x Mp output of PaddedTransform2d. Sizes must be powers of two with
/// kp >= K and mp >= Ms; otherwise ConfigError.
ComplexMatrix fft_2d_padded(const ComplexMatrix& grid, std::size_t kp, std::size_t mp,
                            TransformSigns signs = {});

// ---------------------------------------------------------------------------
// Assignment
// ---------------------------------------------------------------------------

struct Assignment {
  std::vector<std::size_t> permutation;  // row i -> column permutation[i]
  double total_cost = 0.0;
};

// O(n^3) Hungarian solver on a square matrix of finite nonnegative costs.
Assignment min_cost_assignment(const RealMatrix& cost);

}  // namespace jsc::num
