/*
 * Copyright 2026 The mofsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <cassert>

#include "mofsim/kernels/kernels.hpp"
#include "scratch.hpp"

// Reference implementations. The operation order here is the contract the
// SIMD variants reproduce lane by lane.

namespace mofsim::kernels::scalar {

void reflectance_qphi(std::span<const double> omega, double Omega, double Omega_P,
                      std::span<double> out) {
  assert(out.size() >= omega.size());
  if (Omega_P == 0.0) {
    for (std::size_t i = 0; i < omega.size(); ++i) out[i] = 0.0;
    return;
  }
  const double Omega2 = Omega * Omega;
  const double a = Omega_P * Omega2;
  const double num = a * a;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    const double w = omega[i];
    const double d = w * w - Omega2;
    const double b = w * d;
    out[i] = num / (num + b * b);
  }
}

void reflectance_qdotphi(std::span<const double> omega, double Omega, double Omega_P,
                         std::span<double> out) {
  assert(out.size() >= omega.size());
  if (Omega_P == 0.0) {
    for (std::size_t i = 0; i < omega.size(); ++i) out[i] = 0.0;
    return;
  }
  const double Omega2 = Omega * Omega;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    const double w = omega[i];
    const double a = Omega_P * w;
    const double num = a * a;
    const double d = w * w - Omega2;
    out[i] = num / (num + d * d);
  }
}

void reflectance_composed(std::span<const double> omega, std::span<const double> Omegas,
                          std::span<const double> Omega_Ps, std::span<double> out) {
  assert(out.size() >= omega.size());
  assert(Omegas.size() == Omega_Ps.size());
  for (std::size_t i = 0; i < omega.size(); ++i) {
    const double w = omega[i];
    const double w2 = w * w;
    double sigma = 0.0;
    bool pole = false;
    for (std::size_t r = 0; r < Omegas.size(); ++r) {
      const double d = w2 - Omegas[r] * Omegas[r];
      if (d == 0.0) pole = true;
      sigma = sigma + (Omega_Ps[r] * w) / d;
    }
    const double s2 = sigma * sigma;
    out[i] = pole ? 1.0 : 1.0 / (1.0 + 1.0 / s2);
  }
}

void lyapunov_rhs(std::size_t n, const double* A, const double* V, const double* D, double* out) {
  Scratch AV(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc = acc + A[i * n + k] * V[k * n + j];
      AV[i * n + j] = acc;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[i * n + j] = (AV[i * n + j] + AV[j * n + i]) + D[i * n + j];
}

void congruence(std::size_t n, const double* F, const double* V, const double* Q, double* out) {
  Scratch FV(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc = acc + F[i * n + k] * V[k * n + j];
      FV[i * n + j] = acc;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc = acc + FV[i * n + k] * F[j * n + k];
      out[i * n + j] = acc + Q[i * n + j];
    }
  }
}

}  // namespace mofsim::kernels::scalar
