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

#include <algorithm>
#include <cmath>
#include <string>

#include "jsc/error.hpp"
#include "jsc/numkernel.hpp"

namespace jsc::num {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

Fft::Fft(std::size_t n) : n_(n) {
  if (!is_power_of_two(n)) throw ConfigError("FFT length " + std::to_string(n) + " is not a power of two");
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < bits; ++b)
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
    if (i < r) {
      swap_pairs_.push_back(i);
      swap_pairs_.push_back(r);
    }
  }
  twiddles_.resize(n > 1 ? n - 1 : 0);
  for (std::size_t h = 1; h < n; h <<= 1)
    for (std::size_t j = 0; j < h; ++j) {
      const double ang = -kPi * static_cast<double>(j) / static_cast<double>(h);
      twiddles_[h - 1 + j] = {std::cos(ang), std::sin(ang)};
    }
}

void Fft::transform(std::span<Complex> data, bool conjugate_twiddles) const {
  if (data.size() != n_) throw DimensionError("FFT buffer length does not match plan");
  Complex* d = data.data();
  for (std::size_t i = 0; i + 1 < swap_pairs_.size(); i += 2) std::swap(d[swap_pairs_[i]], d[swap_pairs_[i + 1]]);

  auto* x = reinterpret_cast<double*>(d);
  const auto* tw = reinterpret_cast<const double*>(twiddles_.data());
  const double sgn = conjugate_twiddles ? -1.0 : 1.0;

  // h = 1: twiddle is 1.
  for (std::size_t i = 0; i + 1 < n_; i += 2) {
    const double ar = x[2 * i], ai = x[2 * i + 1];
    const double br = x[2 * i + 2], bi = x[2 * i + 3];
    x[2 * i] = ar + br;
    x[2 * i + 1] = ai + bi;
    x[2 * i + 2] = ar - br;
    x[2 * i + 3] = ai - bi;
  }
  for (std::size_t h = 2; h < n_; h <<= 1) {
    const double* w = tw + 2 * (h - 1);
    for (std::size_t i = 0; i < n_; i += 2 * h) {
      double* lo = x + 2 * i;
      double* hi = x + 2 * (i + h);
      for (std::size_t j = 0; j < h; ++j) {
        const double wr = w[2 * j], wi = sgn * w[2 * j + 1];
        const double br = hi[2 * j] * wr - hi[2 * j + 1] * wi;
        const double bi = hi[2 * j] * wi + hi[2 * j + 1] * wr;
        const double ar = lo[2 * j], ai = lo[2 * j + 1];
        lo[2 * j] = ar + br;
        lo[2 * j + 1] = ai + bi;
        hi[2 * j] = ar - br;
        hi[2 * j + 1] = ai - bi;
      }
    }
  }
}

void Fft::inverse(std::span<Complex> data) const {
  backward(data);
  const double s = 1.0 / static_cast<double>(n_);
  for (auto& v : data) v *= s;
}

PaddedTransform2d::PaddedTransform2d(std::size_t k, std::size_t ms, std::size_t kp, std::size_t mp,
                                     TransformSigns signs)
    : k_(k),
      ms_(ms),
      kp_(kp),
      mp_(mp),
      mb_(next_power_of_two(ms)),
      decim_(0),
      signs_(signs),
      fft_k_(kp) {
  if (k == 0 || ms == 0) throw DimensionError("empty grid");
  if (!is_power_of_two(kp) || !is_power_of_two(mp))
    throw ConfigError("padded sizes must be powers of two (got " + std::to_string(kp) + " x " +
                      std::to_string(mp) + ")");
  if (kp < k || mp < ms) throw ConfigError("padded sizes must not be smaller than the grid");
  if (std::abs(signs.subcarrier) != 1 || std::abs(signs.symbol) != 1)
    throw ConfigError("transform signs must be +1 or -1");
  decim_ = mp_ / mb_;
  stage1_.assign(kp_ * ms_, Complex{});

  // Bin s + decim * p' of the length-mp transform is bin p' of a length-mb transform
  // of the input pre-multiplied by e^{sign j 2 pi m s / mp}.
  pre_re_.resize(ms_ * decim_);
  pre_im_.resize(ms_ * decim_);
  for (std::size_t m = 0; m < ms_; ++m)
    for (std::size_t s = 0; s < decim_; ++s) {
      const double ang = signs_.symbol * 2.0 * kPi * static_cast<double>(m * s) / static_cast<double>(mp_);
      pre_re_[m * decim_ + s] = std::cos(ang);
      pre_im_[m * decim_ + s] = std::sin(ang);
    }

  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < mb_) ++bits;
  bitrev_.resize(mb_);
  for (std::size_t i = 0; i < mb_; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < bits; ++b)
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
    bitrev_[i] = r;
  }
  tw_re_.resize(mb_ > 1 ? mb_ - 1 : 0);
  tw_im_.resize(tw_re_.size());
  for (std::size_t h = 1; h < mb_; h <<= 1)
    for (std::size_t j = 0; j < h; ++j) {
      const double ang = signs_.symbol * kPi * static_cast<double>(j) / static_cast<double>(h);
      tw_re_[h - 1 + j] = std::cos(ang);
      tw_im_[h - 1 + j] = std::sin(ang);
    }
  re_.assign(mb_ * decim_, 0.0);
  im_.assign(mb_ * decim_, 0.0);
  row_.resize(mp_);
}

void PaddedTransform2d::load(const ComplexMatrix& grid) {
  if (static_cast<std::size_t>(grid.rows()) != k_ || static_cast<std::size_t>(grid.cols()) != ms_)
    throw DimensionError("grid is " + std::to_string(grid.rows()) + " x " + std::to_string(grid.cols()) +
                         ", transform expects " + std::to_string(k_) + " x " + std::to_string(ms_));
  std::vector<Complex> col(kp_);
  for (std::size_t m = 0; m < ms_; ++m) {
    const Complex* src = grid.data() + m * k_;
    std::copy(src, src + k_, col.begin());
    std::fill(col.begin() + static_cast<std::ptrdiff_t>(k_), col.end(), Complex{});
    if (signs_.subcarrier > 0)
      fft_k_.backward(col);
    else
      fft_k_.forward(col);
    for (std::size_t q = 0; q < kp_; ++q) stage1_[q * ms_ + m] = col[q];
  }
}

void PaddedTransform2d::row_transform(std::size_t q) {
  const std::size_t d = decim_;
  double* __restrict re = re_.data();
  double* __restrict im = im_.data();
  const Complex* src = stage1_.data() + q * ms_;

  // Pre-twiddle straight into bit-reversed slots; padded slots stay zero.
  for (std::size_t m = 0; m < mb_; ++m) {
    double* dr = re + bitrev_[m] * d;
    double* di = im + bitrev_[m] * d;
    if (m >= ms_) {
      std::fill(dr, dr + d, 0.0);
      std::fill(di, di + d, 0.0);
      continue;
    }
    const double xr = src[m].real(), xi = src[m].imag();
    const double* pr = pre_re_.data() + m * d;
    const double* pi = pre_im_.data() + m * d;
    for (std::size_t s = 0; s < d; ++s) {
      dr[s] = xr * pr[s] - xi * pi[s];
      di[s] = xr * pi[s] + xi * pr[s];
    }
  }

  for (std::size_t h = 1; h < mb_; h <<= 1) {
    for (std::size_t i = 0; i < mb_; i += 2 * h) {
      for (std::size_t j = 0; j < h; ++j) {
        const double wr = tw_re_[h - 1 + j], wi = tw_im_[h - 1 + j];
        double* __restrict lr = re + (i + j) * d;
        double* __restrict li = im + (i + j) * d;
        double* __restrict hr = re + (i + j + h) * d;
        double* __restrict hi = im + (i + j + h) * d;
        for (std::size_t s = 0; s < d; ++s) {
          const double br = hr[s] * wr - hi[s] * wi;
          const double bi = hr[s] * wi + hi[s] * wr;
          hr[s] = lr[s] - br;
          hi[s] = li[s] - bi;
          lr[s] += br;
          li[s] += bi;
        }
      }
    }
  }

  // re/im are p'-major with s innermost, which is exactly output order s + decim * p'.
  for (std::size_t p = 0; p < mp_; ++p) row_[p] = {re[p], im[p]};
}

ComplexMatrix fft_2d_padded(const ComplexMatrix& grid, std::size_t kp, std::size_t mp, TransformSigns signs) {
  PaddedTransform2d t(static_cast<std::size_t>(grid.rows()), static_cast<std::size_t>(grid.cols()), kp, mp, signs);
  ComplexMatrix out(static_cast<Eigen::Index>(kp), static_cast<Eigen::Index>(mp));
  t.run(grid, [&](std::size_t q, std::span<const Complex> row) {
    for (std::size_t p = 0; p < row.size(); ++p) out(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(p)) = row[p];
  });
  return out;
}

}  // namespace jsc::num
