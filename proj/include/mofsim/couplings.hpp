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

#include "mofsim/matrix.hpp"
#include "mofsim/params.hpp"

namespace mofsim {

/// Effective bilinear couplings of the interaction Hamiltonian (rad/time).
///
///   alpha_OF = -i (lambda/2) sqrt(Omega / (m omega eps0 L))
///   alpha_OM = (Omega Phi0 lambda / 2c) sqrt(Omega / (m M mho')) e^{i phi0}
///   alpha_MF = prefactor (fluct_part + classical_part)
///     prefactor      = (Omega A0 / L) sqrt(hbar / (2 M mho')) e^{i phi0}
///     fluct_part     = -i lambda^2 / (2 m c omega eps0)
///     classical_part = R*(omega), q-dot Phi reflection
///   beta_MF  = (omega / L) Z_zpm A0 e^{i phi0}
struct CouplingSet {
  Complex alpha_OF;
  Complex alpha_OM;
  Complex alpha_MF;
  Complex alpha_MF_prefactor;
  Complex fluct_part;
  Complex classical_part;
  Complex beta_MF;
  double mho_prime = 0.0;
};

CouplingSet compute_couplings(const ModelParams& params);

struct WeakCouplingReduction {
  Complex alpha_MF;
  Complex minus_beta_over_sqrt2;
  double rel_err = 0.0;  ///< |alpha_MF + beta/sqrt2| / |beta/sqrt2|; 0 when both vanish
};

/// Compares alpha_MF with the boundary-condition value -beta_MF/sqrt(2)
/// it must approach for weak coupling at resonance.
WeakCouplingReduction weak_coupling_reduction_check(const ModelParams& params);

/// Induced surface current lambda q'(t) of the classically driven q-dot Phi
/// mirror: 2 Re[-2i eps0 Omega c Phi0 e^{i phi0} R(omega) e^{-i omega t}].
double classical_surface_current(double t, const ModelParams& params);

/// Steady-state idf displacement q(t) = 2 Re[a e^{-i omega t}] with
///   a = -2i lambda Omega eps0 c Phi0 e^{i phi0} / (i lambda^2 omega + 2 m eps0 c (omega^2 - Omega^2)),
/// the product (omega^2 - Omega^2)^{-1} T(omega) with the pole cancelled,
/// finite at omega = Omega.
double classical_idf_amplitude(double t, const ModelParams& params);
/// The complex amplitude a above.
Complex classical_idf_phasor(const ModelParams& params);

/// Field-region length that yields the requested |alpha_OF| with every
/// other parameter fixed. Requires lambda > 0 and target > 0.
double length_for_alpha_of(double target_abs_alpha_OF, const ModelParams& params);

}  // namespace mofsim
