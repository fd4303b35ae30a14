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
#include "mofsim/params.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "mofsim/errors.hpp"

namespace mofsim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream os;
    os << name << " must be strictly positive and finite (got " << value << ")";
    throw ParameterError(os.str());
  }
}

void require_non_negative(double value, const char* name) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    std::ostringstream os;
    os << name << " must be non-negative and finite (got " << value << ")";
    throw ParameterError(os.str());
  }
}

}  // namespace

void validate(const ModelParams& p) {
  require_positive(p.m, "m");
  require_positive(p.Omega, "Omega");
  require_positive(p.M, "M");
  require_positive(p.mho, "mho");
  require_positive(p.omega, "omega");
  require_positive(p.L, "L");
  require_non_negative(p.lambda, "lambda");
  require_non_negative(p.A0, "A0");
  require_non_negative(p.gamma, "gamma");
  require_non_negative(p.gamma_i, "gamma_i");
  require_non_negative(p.gamma_f, "gamma_f");
  require_non_negative(p.T, "T");
  require_non_negative(p.field_gradient_scale, "field_gradient_scale");
  if (!std::isfinite(p.phi0)) throw ParameterError("phi0 must be finite");
  const auto& k = p.constants;
  require_positive(k.hbar, "hbar");
  require_positive(k.c, "c");
  require_positive(k.eps0, "eps0");
  require_positive(k.kB, "kB");
}

double plasma_frequency(double lambda, double m, double Omega, CouplingKind kind,
                        const PhysicalConstants& k) {
  const double l2 = lambda * lambda;
  if (kind == CouplingKind::kQPhi) return l2 * k.c / (2.0 * m * Omega * Omega * k.eps0);
  return l2 / (2.0 * m * k.eps0 * k.c);
}

double plasma_frequency(const ModelParams& p) {
  return plasma_frequency(p.lambda, p.m, p.Omega, p.coupling_kind, p.constants);
}

double lambda_for_plasma_frequency(double Omega_P, double m, double Omega, CouplingKind kind,
                                   const PhysicalConstants& k) {
  if (kind == CouplingKind::kQPhi) return std::sqrt(2.0 * m * Omega * Omega * k.eps0 * Omega_P / k.c);
  return std::sqrt(2.0 * m * k.eps0 * k.c * Omega_P);
}

double mass_for_plasma_frequency(double Omega_P, double lambda, double Omega, CouplingKind kind,
                                 const PhysicalConstants& k) {
  const double l2 = lambda * lambda;
  if (kind == CouplingKind::kQPhi) return l2 * k.c / (2.0 * Omega * Omega * k.eps0 * Omega_P);
  return l2 / (2.0 * k.eps0 * k.c * Omega_P);
}

double drive_amplitude(double A0, double omega, double L, const PhysicalConstants& k) {
  return A0 * std::sqrt(k.hbar / (2.0 * omega * k.eps0 * L));
}

double dimensionless_amplitude(double Phi0, double omega, double L, const PhysicalConstants& k) {
  return Phi0 / std::sqrt(k.hbar / (2.0 * omega * k.eps0 * L));
}

double renormalized_mechanical_frequency(const ModelParams& p) {
  const auto& k = p.constants;
  const double Phi0 = drive_amplitude(p.A0, p.omega, p.L, k);
  const double wavenumber = p.omega / k.c;
  const double ratio = p.Omega / p.omega;
  // Time-averaged squared gradient of the incident wave; the 2-omega part is
  // dropped under the rotating-wave approximation.
  const double grad2 = p.field_gradient_scale * wavenumber * wavenumber * Phi0 * Phi0 * ratio * ratio;
  return std::sqrt(p.mho * p.mho + p.lambda * p.lambda / (p.m * p.M) * grad2);
}

double bose_occupation(double frequency, double T, const PhysicalConstants& k) {
  if (T == 0.0) return 0.0;
  return 1.0 / std::expm1(k.hbar * frequency / (k.kB * T));
}

double high_temperature_occupation(double frequency, double T, const PhysicalConstants& k) {
  return k.kB * T / (k.hbar * frequency);
}

DerivedParams derive(const ModelParams& p) {
  validate(p);
  const auto& k = p.constants;
  DerivedParams d;
  d.Omega_P = plasma_frequency(p);
  d.r_p = d.Omega_P > 0.0 ? p.Omega / d.Omega_P : kInf;
  d.eta = p.omega / p.Omega;
  d.Delta = p.omega - p.Omega;
  d.mho_prime = renormalized_mechanical_frequency(p);
  d.Z_zpm = std::sqrt(k.hbar / (p.M * p.mho));
  d.Phi0 = drive_amplitude(p.A0, p.omega, p.L, k);
  d.nbar = bose_occupation(d.mho_prime, p.T, k);
  return d;
}

std::vector<std::string> RegimeReport::warnings() const {
  std::vector<std::string> out;
  std::ostringstream os;
  if (!sub_wavelength.pass) {
    os << "sub-wavelength drive bound violated: |Phi0|^2 is only " << sub_wavelength.margin
       << "x below M mho^2 c / (Omega^3 eps0)";
    out.push_back(os.str());
    os.str({});
  }
  if (!time_scale.pass) {
    os << "time-scale separation Omega/mho = " << time_scale.margin << " is not >> 1";
    out.push_back(os.str());
    os.str({});
  }
  if (!rotating_wave.pass) {
    os << "rotating-wave approximation questionable: (omega+Omega)/|Delta| = "
       << rotating_wave.margin;
    out.push_back(os.str());
  }
  return out;
}

RegimeReport validate_regime(const ModelParams& p) {
  const auto& k = p.constants;
  RegimeReport r;
  const double Phi0 = drive_amplitude(p.A0, p.omega, p.L, k);
  r.sub_wavelength_bound = p.M * p.mho * p.mho * k.c / (p.Omega * p.Omega * p.Omega * k.eps0);
  const double phi2 = Phi0 * Phi0;
  r.sub_wavelength.margin = phi2 > 0.0 ? r.sub_wavelength_bound / phi2 : kInf;
  r.sub_wavelength.pass = r.sub_wavelength.margin >= kRegimeMarginThreshold;

  r.time_scale.margin = p.Omega / p.mho;
  r.time_scale.pass = r.time_scale.margin >= kRegimeMarginThreshold;

  const double detuning = std::abs(p.omega - p.Omega);
  r.rotating_wave.margin = detuning > 0.0 ? (p.omega + p.Omega) / detuning : kInf;
  r.rotating_wave.pass = r.rotating_wave.margin >= kRegimeMarginThreshold;

  r.plasma_ratio = plasma_frequency(p) / p.Omega;
  r.coupling = r.plasma_ratio <= kWeakCouplingThreshold ? CouplingRegime::kWeak
                                                         : CouplingRegime::kStrong;
  return r;
}

ClassicalEstimates classical_estimates(const ModelParams& p) {
  const auto& k = p.constants;
  const double Phi0 = drive_amplitude(p.A0, p.omega, p.L, k);
  const double drive = k.eps0 * Phi0 * Phi0 * p.Omega * p.Omega / p.M;
  ClassicalEstimates e;
  e.Z0_est = drive / (p.mho * p.mho);
  e.Z2w_est = drive / (p.omega * p.omega);
  e.ratio = (p.omega * p.omega) / (p.mho * p.mho);
  return e;
}

std::string_view to_string(CouplingKind kind) {
  return kind == CouplingKind::kQPhi ? "qphi" : "qdotphi";
}

std::string_view to_string(CouplingRegime regime) {
  return regime == CouplingRegime::kWeak ? "weak" : "strong";
}

}  // namespace mofsim
