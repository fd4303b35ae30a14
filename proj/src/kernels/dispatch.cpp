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
#include <atomic>
#include <cstdlib>
#include <string_view>

#include "mofsim/kernels/kernels.hpp"

namespace mofsim::kernels {

#if !defined(MOFSIM_HAVE_AVX2)
// Builds without the AVX2 translation unit route the avx2 names to the
// reference code so tests and callers still link.
namespace avx2 {
void reflectance_qphi(std::span<const double> omega, double Omega, double Omega_P,
                      std::span<double> out) {
  scalar::reflectance_qphi(omega, Omega, Omega_P, out);
}
void reflectance_qdotphi(std::span<const double> omega, double Omega, double Omega_P,
                         std::span<double> out) {
  scalar::reflectance_qdotphi(omega, Omega, Omega_P, out);
}
void reflectance_composed(std::span<const double> omega, std::span<const double> Omegas,
                          std::span<const double> Omega_Ps, std::span<double> out) {
  scalar::reflectance_composed(omega, Omegas, Omega_Ps, out);
}
void lyapunov_rhs(std::size_t n, const double* A, const double* V, const double* D, double* out) {
  scalar::lyapunov_rhs(n, A, V, D, out);
}
void congruence(std::size_t n, const double* F, const double* V, const double* Q, double* out) {
  scalar::congruence(n, F, V, Q, out);
}
}  // namespace avx2
#endif

namespace {

bool detect_avx2() {
#if defined(MOFSIM_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initial_isa() {
  if (const char* env = std::getenv("MOFSIM_SIMD")) {
    if (std::string_view(env) == "scalar") return Isa::kScalar;
  }
  return detect_avx2() ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

bool avx2_available() {
  static const bool available = detect_avx2();
  return available;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (isa == Isa::kAvx2 && !avx2_available()) return;
  current().store(isa, std::memory_order_relaxed);
}

std::string_view to_string(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

void reflectance_qphi(std::span<const double> omega, double Omega, double Omega_P,
                      std::span<double> out) {
  if (active_isa() == Isa::kAvx2) return avx2::reflectance_qphi(omega, Omega, Omega_P, out);
  scalar::reflectance_qphi(omega, Omega, Omega_P, out);
}

void reflectance_qdotphi(std::span<const double> omega, double Omega, double Omega_P,
                         std::span<double> out) {
  if (active_isa() == Isa::kAvx2) return avx2::reflectance_qdotphi(omega, Omega, Omega_P, out);
  scalar::reflectance_qdotphi(omega, Omega, Omega_P, out);
}

void reflectance_composed(std::span<const double> omega, std::span<const double> Omegas,
                          std::span<const double> Omega_Ps, std::span<double> out) {
  if (active_isa() == Isa::kAvx2) return avx2::reflectance_composed(omega, Omegas, Omega_Ps, out);
  scalar::reflectance_composed(omega, Omegas, Omega_Ps, out);
}

void lyapunov_rhs(std::size_t n, const double* A, const double* V, const double* D, double* out) {
  if (active_isa() == Isa::kAvx2) return avx2::lyapunov_rhs(n, A, V, D, out);
  scalar::lyapunov_rhs(n, A, V, D, out);
}

void congruence(std::size_t n, const double* F, const double* V, const double* Q, double* out) {
  if (active_isa() == Isa::kAvx2) return avx2::congruence(n, F, V, Q, out);
  scalar::congruence(n, F, V, Q, out);
}

}  // namespace mofsim::kernels
