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

#include <immintrin.h>

#include "mofsim/kernels/kernels.hpp"
#include "scratch.hpp"

// Four doubles per lane group, scalar tails. Mirrors kernels/scalar.cpp
// operation for operation; no fused multiply-add anywhere.

namespace mofsim::kernels::avx2 {

void reflectance_qphi(std::span<const double> omega, double Omega, double Omega_P,
                      std::span<double> out) {
  assert(out.size() >= omega.size());
  const std::size_t n = omega.size();
  if (Omega_P == 0.0) {
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
    return;
  }
  const double Omega2 = Omega * Omega;
  const double a = Omega_P * Omega2;
  const double num = a * a;
  const __m256d vO2 = _mm256_set1_pd(Omega2);
  const __m256d vnum = _mm256_set1_pd(num);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d w = _mm256_loadu_pd(omega.data() + i);
    const __m256d d = _mm256_sub_pd(_mm256_mul_pd(w, w), vO2);
    const __m256d b = _mm256_mul_pd(w, d);
    const __m256d den = _mm256_add_pd(vnum, _mm256_mul_pd(b, b));
    _mm256_storeu_pd(out.data() + i, _mm256_div_pd(vnum, den));
  }
  for (; i < n; ++i) {
    const double w = omega[i];
    const double d = w * w - Omega2;
    const double b = w * d;
    out[i] = num / (num + b * b);
  }
}

void reflectance_qdotphi(std::span<const double> omega, double Omega, double Omega_P,
                         std::span<double> out) {
  assert(out.size() >= omega.size());
  const std::size_t n = omega.size();
  if (Omega_P == 0.0) {
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
    return;
  }
  const double Omega2 = Omega * Omega;
  const __m256d vO2 = _mm256_set1_pd(Omega2);
  const __m256d vOP = _mm256_set1_pd(Omega_P);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d w = _mm256_loadu_pd(omega.data() + i);
    const __m256d a = _mm256_mul_pd(vOP, w);
    const __m256d num = _mm256_mul_pd(a, a);
    const __m256d d = _mm256_sub_pd(_mm256_mul_pd(w, w), vO2);
    const __m256d den = _mm256_add_pd(num, _mm256_mul_pd(d, d));
    _mm256_storeu_pd(out.data() + i, _mm256_div_pd(num, den));
  }
  for (; i < n; ++i) {
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
  const std::size_t n = omega.size();
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d w = _mm256_loadu_pd(omega.data() + i);
    const __m256d w2 = _mm256_mul_pd(w, w);
    __m256d sigma = zero;
    __m256d pole = zero;
    for (std::size_t r = 0; r < Omegas.size(); ++r) {
      const __m256d O2 = _mm256_set1_pd(Omegas[r] * Omegas[r]);
      const __m256d d = _mm256_sub_pd(w2, O2);
      pole = _mm256_or_pd(pole, _mm256_cmp_pd(d, zero, _CMP_EQ_OQ));
      const __m256d t = _mm256_mul_pd(_mm256_set1_pd(Omega_Ps[r]), w);
      sigma = _mm256_add_pd(sigma, _mm256_div_pd(t, d));
    }
    const __m256d s2 = _mm256_mul_pd(sigma, sigma);
    const __m256d refl = _mm256_div_pd(one, _mm256_add_pd(one, _mm256_div_pd(one, s2)));
    _mm256_storeu_pd(out.data() + i, _mm256_blendv_pd(refl, one, pole));
  }
  for (; i < n; ++i) {
    const double w = omega[i];
    const double w2 = w * w;
    double sigma = 0.0;
    bool is_pole = false;
    for (std::size_t r = 0; r < Omegas.size(); ++r) {
      const double d = w2 - Omegas[r] * Omegas[r];
      if (d == 0.0) is_pole = true;
      sigma = sigma + (Omega_Ps[r] * w) / d;
    }
    const double s2 = sigma * sigma;
    out[i] = is_pole ? 1.0 : 1.0 / (1.0 + 1.0 / s2);
  }
}

namespace {

// P = X Y for row-major n x n, accumulating over k in ascending order.
void matmul(std::size_t n, const double* X, const double* Y, double* P) {
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      __m256d acc = _mm256_setzero_pd();
      for (std::size_t k = 0; k < n; ++k) {
        const __m256d x = _mm256_set1_pd(X[i * n + k]);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(x, _mm256_loadu_pd(Y + k * n + j)));
      }
      _mm256_storeu_pd(P + i * n + j, acc);
    }
    for (; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc = acc + X[i * n + k] * Y[k * n + j];
      P[i * n + j] = acc;
    }
  }
}

}  // namespace

void lyapunov_rhs(std::size_t n, const double* A, const double* V, const double* D, double* out) {
  Scratch AV(n * n);
  matmul(n, A, V, AV.data());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[i * n + j] = (AV[i * n + j] + AV[j * n + i]) + D[i * n + j];
}

void congruence(std::size_t n, const double* F, const double* V, const double* Q, double* out) {
  Scratch FV(n * n);
  Scratch Ft(n * n);
  matmul(n, F, V, FV.data());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) Ft[j * n + i] = F[i * n + j];
  matmul(n, FV.data(), Ft.data(), out);
  const std::size_t nn = n * n;
  std::size_t i = 0;
  for (; i + 4 <= nn; i += 4) {
    const __m256d s = _mm256_add_pd(_mm256_loadu_pd(out + i), _mm256_loadu_pd(Q + i));
    _mm256_storeu_pd(out + i, s);
  }
  for (; i < nn; ++i) out[i] = out[i] + Q[i];
}

}  // namespace mofsim::kernels::avx2
