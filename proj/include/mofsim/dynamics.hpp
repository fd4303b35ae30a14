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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mofsim/couplings.hpp"
#include "mofsim/gaussian.hpp"
#include "mofsim/matrix.hpp"
#include "mofsim/params.hpp"

// Linear quadrature dynamics dV/dt = A V + V A^T + D. Quadratures are the
// dimensionless ones of the Hamiltonian, so the vacuum variance is 1/2
// whatever unit system the parameters use.

namespace mofsim {

struct DriftDiffusion {
  Matrix A;
  Matrix D;
  std::vector<std::string> labels;
  Eigen::Index dim() const { return A.rows(); }
};

/// Six-dimensional MOF system in the order (Z, P, Phi, Pi, q, p):
///   Z'   = mho' P
///   P'   = -mho' Z - 2(Re a_OM q - Im a_OM p) - 2(Re a_MF Phi - Im a_MF Pi) - gamma P
///   Phi' = |a_OF| q - 2 Im a_MF Z
///   Pi'  = |a_OF| p - 2 Re a_MF Z
///   q'   =  s Delta p - |a_OF| Phi - 2 Im a_OM Z - gamma_f q
///   p'   = -s Delta q - |a_OF| Pi  - 2 Re a_OM Z - gamma_i p
/// with s = -1 for DetuningConvention::kInteractionPicture, +1 for kAsPrinted.
/// D carries D_PP and, when the idf is damped, D_qq = gamma_f, D_pp = gamma_i.
DriftDiffusion build_drift_mof(const CouplingSet& couplings, const ModelParams& params);

/// Momentum diffusion of the mirror: 2 gamma kB T / (hbar mho') in the
/// high-temperature model, gamma (2 nbar + 1) with the Bose factor.
double mechanical_diffusion(const ModelParams& params);

/// 6x6 diffusion matrix of the MOF system.
Matrix build_diffusion(const ModelParams& params);

/// Boundary-condition baseline in the order (Z, P, Phi, Pi):
///   Z' = mho P,  P' = -mho Z + sqrt2 Re b Phi - sqrt2 Im b Pi - gamma P,
///   Phi' = sqrt2 Im b Z,  Pi' = sqrt2 Re b Z,
/// with the same D_PP as the MOF system.
DriftDiffusion build_drift_bc(const ModelParams& params);

/// Damped idf replaced by its instantaneous steady state
///   [q, p]_st = K [C1, C2],  C1 = |a_OF| Phi + 2 Im a_OM Z + xi_f,
///                            C2 = |a_OF| Pi  + 2 Re a_OM Z + xi_i,
/// K the inverse of the idf block (denominator Delta^2 + gamma_i gamma_f),
/// the idf noise being carried into the effective diffusion. Result is
/// 4x4 in (Z, P, Phi, Pi). Throws ParameterError for a degenerate
/// denominator.
DriftDiffusion adiabatic_idf_elimination(const CouplingSet& couplings, const ModelParams& params);

enum class InitialState { kThermal, kGround };

InitialState parse_initial_state(std::string_view name);
std::string_view to_string(InitialState s);

/// Mirror (nbar + 1/2) I2 with nbar = Bose(mho', T) for kThermal, 1/2 I2
/// for kGround; idf and field in vacuum. 6x6 in the global order.
CovarianceMatrix initial_covariance(const ModelParams& params,
                                    InitialState state = InitialState::kThermal);
/// The (Z, P, Phi, Pi) block of the above, for the 4x4 systems.
CovarianceMatrix initial_covariance_4(const ModelParams& params,
                                      InitialState state = InitialState::kThermal);

enum class Method { kExact, kRk4 };

Method parse_method(std::string_view name);
std::string_view to_string(Method m);

struct EvolveOptions {
  Method method = Method::kExact;
  /// Largest rk4 step; 0 picks (1/800) 2 pi / rho(A), rho the spectral radius
  /// of A, which is at least |alpha_OF| for the MOF system.
  double rk4_step = 0.0;
  bool keep_snapshots = false;
  /// Pair entering E_N for 6x6 systems; 4x4 systems use the whole matrix.
  ModePair pair = ModePair::kMF;
  bool check_physicality = true;
};

struct EntanglementTrace {
  std::vector<double> times;
  std::vector<double> E_N;
  std::vector<double> c_minus;
  std::vector<Matrix> snapshots;  ///< full V(t), when requested
};

struct EvolutionResult {
  EntanglementTrace trace;
  Matrix final_V;
  double rk4_step = 0.0;  ///< step actually bounding rk4 (0 for exact)
};

/// Propagates V0, given at times.front(), through the ascending grid.
/// Throws PhysicalityError when V(t) fails uncertainty_check at an output.
EvolutionResult evolve_covariance(const DriftDiffusion& sys, const CovarianceMatrix& V0,
                                  std::span<const double> times, const EvolveOptions& options = {});

inline constexpr double kRk4StepsPerPeriod = 800.0;

/// Default rk4 step bound for the system.
double default_rk4_step(const Matrix& A);

/// One-interval propagator: F = e^{A h}, Q = int_0^h e^{As} D e^{A^T s} ds,
/// so V(t+h) = F V(t) F^T + Q.
struct Propagator {
  Matrix F;
  Matrix Q;
};
Propagator propagator(const Matrix& A, const Matrix& D, double h);

/// V_ss with A V + V A^T + D = 0. Throws NotHurwitzError when an eigenvalue
/// of A has non-negative real part.
CovarianceMatrix steady_state_covariance(const DriftDiffusion& sys);

/// Uniform grid of `count` points over [start, stop].
std::vector<double> linspace(double start, double stop, std::size_t count);

}  // namespace mofsim
