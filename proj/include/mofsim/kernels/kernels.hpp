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
#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference in
// kernels::scalar and, on x86-64, an AVX2 variant in kernels::avx2 that
// performs the same IEEE operations in the same order (no FMA), so the two
// agree bit for bit. The unqualified entry points dispatch at runtime.

#include <cstddef>
#include <span>
#include <string_view>

namespace mofsim::kernels {

enum class Isa { kScalar, kAvx2 };

/// ISA the dispatching entry points use. Chosen once from CPUID; the
/// MOFSIM_SIMD=scalar environment variable forces the scalar path.
Isa active_isa();
/// Override for tests and benchmarking. Requesting kAvx2 on a CPU without
/// it is ignored.
void force_isa(Isa isa);
bool avx2_available();
std::string_view to_string(Isa isa);

// Reflectance |R|^2 of one Lorentz resonance (Omega, Omega_P) at each omega.
//   q Phi:     Omega_P^2 Omega^4 / (Omega_P^2 Omega^4 + omega^2 (omega^2 - Omega^2)^2)
//   q-dot Phi: (Omega_P omega)^2 / ((Omega_P omega)^2 + (omega^2 - Omega^2)^2)
// Omega_P = 0 yields 0 (transparent) for q-dot Phi and for q Phi away from
// omega = 0.
void reflectance_qphi(std::span<const double> omega, double Omega, double Omega_P,
                      std::span<double> out);
void reflectance_qdotphi(std::span<const double> omega, double Omega, double Omega_P,
                         std::span<double> out);

// Co-located q-dot Phi resonances with additive surface response
// sigma(omega) = sum_i Omega_P_i omega / (omega^2 - Omega_i^2); the
// reflectance is sigma^2 / (sigma^2 + 1), and exactly 1 on any pole.
void reflectance_composed(std::span<const double> omega, std::span<const double> Omegas,
                          std::span<const double> Omega_Ps, std::span<double> out);

// Small dense kernels on row-major n x n buffers (n <= 8 in practice).
// out = A V + (A V)^T + D, the Lyapunov right-hand side for symmetric V.
void lyapunov_rhs(std::size_t n, const double* A, const double* V, const double* D, double* out);
// out = F V F^T + Q.
void congruence(std::size_t n, const double* F, const double* V, const double* Q, double* out);

namespace scalar {
void reflectance_qphi(std::span<const double> omega, double Omega, double Omega_P,
                      std::span<double> out);
void reflectance_qdotphi(std::span<const double> omega, double Omega, double Omega_P,
                         std::span<double> out);
void reflectance_composed(std::span<const double> omega, std::span<const double> Omegas,
                          std::span<const double> Omega_Ps, std::span<double> out);
void lyapunov_rhs(std::size_t n, const double* A, const double* V, const double* D, double* out);
void congruence(std::size_t n, const double* F, const double* V, const double* Q, double* out);
}  // namespace scalar

namespace avx2 {
void reflectance_qphi(std::span<const double> omega, double Omega, double Omega_P,
                      std::span<double> out);
void reflectance_qdotphi(std::span<const double> omega, double Omega, double Omega_P,
                         std::span<double> out);
void reflectance_composed(std::span<const double> omega, std::span<const double> Omegas,
                          std::span<const double> Omega_Ps, std::span<double> out);
void lyapunov_rhs(std::size_t n, const double* A, const double* V, const double* D, double* out);
void congruence(std::size_t n, const double* F, const double* V, const double* Q, double* out);
}  // namespace avx2

}  // namespace mofsim::kernels
