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
#include <limits>
#include <numeric>
#include <string>

#include "jsc/error.hpp"
#include "jsc/numkernel.hpp"

namespace jsc::num {

EigenDecomposition hermitian_eig(const ComplexMatrix& input) {
  if (input.rows() != input.cols())
    throw DimensionError("hermitian_eig needs a square matrix, got " + std::to_string(input.rows()) + " x " +
                         std::to_string(input.cols()));
  const Eigen::Index n = input.rows();
  if (n == 0) throw DimensionError("hermitian_eig on an empty matrix");
  if (!input.allFinite()) throw DomainError("hermitian_eig: non-finite entries");

  const double norm = input.norm();
  if ((input - input.adjoint()).norm() > 1e-9 * norm)
    throw ConfigError("hermitian_eig: matrix is not Hermitian within 1e-9 relative tolerance");

  ComplexMatrix a = 0.5 * (input + input.adjoint());
  for (Eigen::Index i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  ComplexMatrix v = ComplexMatrix::Identity(n, n);

  auto off_norm = [&] {
    double s = 0.0;
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  const double tol = 1e-12 * norm;
  int sweep = 0;
  for (; sweep < 100 && off_norm() > tol; ++sweep) {
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= std::numeric_limits<double>::min()) continue;
        const Complex phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex sp = s * phase;             // J(p, q)
        const Complex sq = -s * std::conj(phase); // J(q, p)

        // A <- A J
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp + sq * akq;
          a(k, q) = sp * akp + c * akq;
        }
        // A <- J^H A
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk + std::conj(sq) * aqk;
          a(q, k) = std::conj(sp) * apk + c * aqk;
        }
        a(p, q) = a(q, p) = Complex{};
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        // V <- V J
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp + sq * vkq;
          v(k, q) = sp * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() > a(j, j).real(); });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = a(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]).real();
    out.vectors.col(i) = v.col(order[static_cast<std::size_t>(i)]);
  }
  out.sweeps = sweep;
  return out;
}

Assignment min_cost_assignment(const RealMatrix& cost) {
  if (cost.rows() != cost.cols())
    throw DimensionError("assignment cost matrix must be square, got " + std::to_string(cost.rows()) + " x " +
                         std::to_string(cost.cols()));
  const std::size_t n = static_cast<std::size_t>(cost.rows());
  for (Eigen::Index j = 0; j < cost.cols(); ++j)
    for (Eigen::Index i = 0; i < cost.rows(); ++i)
      if (!std::isfinite(cost(i, j)) || cost(i, j) < 0.0)
        throw DomainError("assignment costs must be finite and nonnegative");

  Assignment out;
  if (n == 0) return out;

  // Shortest augmenting path with potentials; 1-based with column 0 as the virtual source.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = match[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(static_cast<Eigen::Index>(i0 - 1), static_cast<Eigen::Index>(j - 1)) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  out.permutation.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) out.permutation[match[j] - 1] = j - 1;
  for (std::size_t i = 0; i < n; ++i)
    out.total_cost += cost(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(out.permutation[i]));
  return out;
}

}  // namespace jsc::num
