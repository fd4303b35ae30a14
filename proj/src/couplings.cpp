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
#include "mofsim/couplings.hpp"

#include <cmath>

#include "mofsim/errors.hpp"
#include "mofsim/optics.hpp"

namespace mofsim {

namespace {

Complex drive_phase(const ModelParams& p) { return std::polar(1.0, p.phi0); }

}  // namespace

CouplingSet compute_couplings(const ModelParams& p) {
  const DerivedParams d = derive(p);
  const auto& k = p.constants;
  CouplingSet c;
  c.mho_prime = d.mho_prime;
  const Complex phase = drive_phase(p);

  c.alpha_OF = Complex(0.0, -0.5 * p.lambda * std::sqrt(p.Omega / (p.m * p.omega * k.eps0 * p.L)));

  c.alpha_OM = (p.Omega * d.Phi0 * p.lambda / (2.0 * k.c)) *
               std::sqrt(p.Omega / (p.m * p.M * d.mho_prime)) * phase;

  c.alpha_MF_prefactor =
      (p.Omega * p.A0 / p.L) * std::sqrt(k.hbar / (2.0 * p.M * d.mho_prime)) * phase;
  c.fluct_part = Complex(0.0, -p.lambda * p.lambda / (2.0 * p.m * k.c * p.omega * k.eps0));
  c.classical_part = std::conj(reflection_qdotphi(p.omega, p).R);
  c.alpha_MF = c.alpha_MF_prefactor * (c.fluct_part + c.classical_part);

  c.beta_MF = (p.omega / p.L) * d.Z_zpm * p.A0 * phase;
  return c;
}

WeakCouplingReduction weak_coupling_reduction_check(const ModelParams& p) {
  const CouplingSet c = compute_couplings(p);
  WeakCouplingReduction w;
  w.alpha_MF = c.alpha_MF;
  w.minus_beta_over_sqrt2 = -c.beta_MF / std::sqrt(2.0);
  const double scale = std::abs(w.minus_beta_over_sqrt2);
  w.rel_err = scale > 0.0 ? std::abs(w.alpha_MF - w.minus_beta_over_sqrt2) / scale
                          : (std::abs(w.alpha_MF) > 0.0 ? HUGE_VAL : 0.0);
  return w;
}

double classical_surface_current(double t, const ModelParams& p) {
  const DerivedParams d = derive(p);
  const auto& k = p.constants;
  const Complex R = reflection_qdotphi(p.omega, p).R;
  const Complex amp = Complex(0.0, -2.0 * k.eps0 * p.Omega * k.c * d.Phi0) * drive_phase(p) * R;
  return 2.0 * std::real(amp * std::polar(1.0, -p.omega * t));
}

Complex classical_idf_phasor(const ModelParams& p) {
  const DerivedParams d = derive(p);
  const auto& k = p.constants;
  if (p.lambda == 0.0 || d.Phi0 == 0.0) return {};
  const Complex num = Complex(0.0, -2.0 * p.lambda * p.Omega * k.eps0 * k.c * d.Phi0) * drive_phase(p);
  const Complex den(2.0 * p.m * k.eps0 * k.c * (p.omega * p.omega - p.Omega * p.Omega),
                    p.lambda * p.lambda * p.omega);
  return num / den;
}

double classical_idf_amplitude(double t, const ModelParams& p) {
  return 2.0 * std::real(classical_idf_phasor(p) * std::polar(1.0, -p.omega * t));
}

double length_for_alpha_of(double target, const ModelParams& p) {
  if (!(p.lambda > 0.0)) throw ParameterError("length_for_alpha_of needs lambda > 0");
  if (!(target > 0.0) || !std::isfinite(target))
    throw ParameterError("target |alpha_OF| must be strictly positive and finite");
  return p.lambda * p.lambda * p.Omega / (4.0 * p.m * p.omega * p.constants.eps0 * target * target);
}

}  // namespace mofsim
