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

#include <string>
#include <string_view>
#include <vector>

namespace mofsim {

/// How the internal oscillator couples to the field: through its
/// displacement (q Phi) or its velocity (q-dot Phi).
enum class CouplingKind { kQPhi, kQdotPhi };

/// Sign of the detuning term in the rotating-frame idf equations.
/// kInteractionPicture follows from the slow operator b e^{i Delta t} with
/// Delta = omega - Omega; kAsPrinted is the literal q' = +Delta p form.
enum class DetuningConvention { kInteractionPicture, kAsPrinted };

/// Mechanical momentum-diffusion model.
enum class NoiseModel { kHighTemperature, kExactBose };

/// Unit system. Natural units (all ones) by default; set explicitly for SI.
struct PhysicalConstants {
  double hbar = 1.0;
  double c = 1.0;
  double eps0 = 1.0;
  double kB = 1.0;
};

/// Every physical parameter of the mirror-oscillator-field action plus the
/// baths and the classical drive. Frequencies are angular (rad / time).
struct ModelParams {
  double m = 1.0;       ///< idf mass
  double Omega = 1.0;   ///< idf frequency
  double M = 1.0;       ///< mirror centre-of-mass mass
  double mho = 1.0;     ///< mechanical trap frequency
  double lambda = 0.0;  ///< idf-field coupling (charge-like)
  double omega = 1.0;   ///< driven field mode frequency
  double L = 1.0;       ///< quantization length of the field region
  double A0 = 0.0;      ///< dimensionless drive amplitude
  double phi0 = 0.0;    ///< drive phase (rad)
  double gamma = 0.0;   ///< mechanical damping rate
  double T = 0.0;       ///< bath temperature (energy units with kB)
  double gamma_i = 0.0; ///< idf damping from the internal bath
  double gamma_f = 0.0; ///< idf damping from the field continuum
  CouplingKind coupling_kind = CouplingKind::kQdotPhi;
  NoiseModel noise_model = NoiseModel::kHighTemperature;
  DetuningConvention detuning_convention = DetuningConvention::kInteractionPicture;
  /// Multiplies the incident-wave estimate k^2 Phi0^2 (Omega/omega)^2 of the
  /// time-averaged squared field gradient entering the renormalized
  /// mechanical frequency.
  double field_gradient_scale = 1.0;
  PhysicalConstants constants{};
};

/// Throws ParameterError unless masses, frequencies and L are strictly
/// positive and the damping rates and temperature are non-negative.
void validate(const ModelParams& params);

struct DerivedParams {
  double Omega_P = 0.0;   ///< plasma frequency for the active coupling kind
  double r_p = 0.0;       ///< Omega / Omega_P (infinite when lambda = 0)
  double eta = 0.0;       ///< omega / Omega
  double Delta = 0.0;     ///< omega - Omega
  double mho_prime = 0.0; ///< renormalized mechanical frequency
  double Z_zpm = 0.0;     ///< sqrt(hbar / (M mho))
  double Phi0 = 0.0;      ///< dimensional drive amplitude
  double nbar = 0.0;      ///< thermal phonon number at (mho_prime, T)
};

DerivedParams derive(const ModelParams& params);

double plasma_frequency(const ModelParams& params);
double plasma_frequency(double lambda, double m, double Omega, CouplingKind kind,
                        const PhysicalConstants& k);

/// Coupling that produces the requested plasma frequency at fixed m.
double lambda_for_plasma_frequency(double Omega_P, double m, double Omega, CouplingKind kind,
                                   const PhysicalConstants& k);
/// idf mass that produces the requested plasma frequency at fixed lambda.
double mass_for_plasma_frequency(double Omega_P, double lambda, double Omega, CouplingKind kind,
                                 const PhysicalConstants& k);

/// Phi0 = A0 sqrt(hbar / (2 omega eps0 L)) and its inverse.
double drive_amplitude(double A0, double omega, double L, const PhysicalConstants& k);
double dimensionless_amplitude(double Phi0, double omega, double L, const PhysicalConstants& k);

double renormalized_mechanical_frequency(const ModelParams& params);

/// Bose occupation 1 / (exp(freq / kT) - 1); zero at T = 0.
double bose_occupation(double frequency, double T, const PhysicalConstants& k);
/// High-temperature limit kT / (hbar freq).
double high_temperature_occupation(double frequency, double T, const PhysicalConstants& k);

// ---------------------------------------------------------------------------
// Regime validation. Reports only; callers decide what to do with a failure.

struct RegimeCheck {
  bool pass = true;
  double margin = 0.0;  ///< ratio that must be >> 1 (infinite when trivially met)
};

enum class CouplingRegime { kWeak, kStrong };

struct RegimeReport {
  RegimeCheck sub_wavelength;   ///< |Phi0|^2 << M mho^2 c / (Omega^3 eps0)
  RegimeCheck time_scale;       ///< Omega / mho
  RegimeCheck rotating_wave;    ///< (omega + Omega) / |Delta|
  CouplingRegime coupling = CouplingRegime::kWeak;
  double plasma_ratio = 0.0;    ///< Omega_P / Omega
  double sub_wavelength_bound = 0.0;

  bool all_pass() const {
    return sub_wavelength.pass && time_scale.pass && rotating_wave.pass;
  }
  std::vector<std::string> warnings() const;
};

/// A "<<" check passes when its margin is at least this large.
inline constexpr double kRegimeMarginThreshold = 10.0;
/// Omega_P / Omega at or below this is classified as weak coupling.
inline constexpr double kWeakCouplingThreshold = 0.1;

RegimeReport validate_regime(const ModelParams& params);

/// Order-of-magnitude centre-of-mass displacements from the constant and
/// the 2-omega parts of the radiation pressure. Estimates only.
struct ClassicalEstimates {
  double Z0_est = 0.0;   ///< eps0 Phi0^2 Omega^2 / (M mho^2)
  double Z2w_est = 0.0;  ///< eps0 Phi0^2 Omega^2 / (M omega^2)
  double ratio = 0.0;    ///< Z0 / Z2w = omega^2 / mho^2
};

ClassicalEstimates classical_estimates(const ModelParams& params);

std::string_view to_string(CouplingKind kind);
std::string_view to_string(CouplingRegime regime);

}  // namespace mofsim
