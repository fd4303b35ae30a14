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
#include <vector>

#include "mofsim/matrix.hpp"
#include "mofsim/params.hpp"

namespace mofsim {

/// Plane-wave scattering off the mirror. T = 1 + R; the closed forms are
/// lossless so |R|^2 + |T|^2 = 1.
struct ReflectionResult {
  Complex R;
  Complex T;
  double reflectance = 0.0;    ///< |R|^2
  double transmittance = 0.0;  ///< |T|^2
};

// Single-resonance responses written in terms of (Omega, Omega_P):
//   q Phi:     R = -i Omega_P Omega^2 / (i Omega_P Omega^2 + omega (omega^2 - Omega^2))
//   q-dot Phi: R = -i Omega_P omega   / (i Omega_P omega   + (omega^2 - Omega^2))
// which are the (lambda, m, eps0, c) forms divided through by the plasma
// frequency definition of each variant. Omega_P = 0 gives R = 0.
ReflectionResult reflection_qphi(double omega, double Omega, double Omega_P);
ReflectionResult reflection_qdotphi(double omega, double Omega, double Omega_P);

/// Evaluated at the parameters' idf and plasma frequency. Throws
/// ParameterError for omega < 0 or invalid params.
ReflectionResult reflection_qphi(double omega, const ModelParams& params);
ReflectionResult reflection_qdotphi(double omega, const ModelParams& params);
ReflectionResult reflection(double omega, const ModelParams& params);

struct Resonance {
  double Omega = 0.0;
  double Omega_P = 0.0;
};

/// One idf per resonance. Entries must be strictly positive with distinct
/// frequencies; stored sorted by Omega so every derived quantity is
/// independent of the order given.
class ResonanceSet {
 public:
  ResonanceSet() = default;
  explicit ResonanceSet(std::vector<Resonance> resonances);

  std::span<const Resonance> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Resonance> entries_;
};

/// Co-located q-dot Phi idfs driven by the same field. Their surface
/// currents add, so
///   R = -i sigma / (i sigma + 1),  sigma = sum_i Omega_P_i omega / (omega^2 - Omega_i^2),
/// and R = -1 exactly when omega hits any Omega_i.
ReflectionResult compose_resonances(double omega, const ResonanceSet& resonances);

struct SpectrumTable {
  std::vector<double> omega;
  std::vector<double> wavelength;  ///< 2 pi c / omega (infinite at omega = 0)
  std::vector<double> reflectance;
  std::vector<double> transmittance;
};

/// Reflectance over a non-empty ascending grid of omega >= 0. One
/// resonance uses the closed form of `kind`; several require q-dot Phi and
/// go through compose_resonances. Throws ParameterError otherwise.
SpectrumTable spectrum(std::span<const double> grid, const ResonanceSet& resonances,
                       CouplingKind kind, const PhysicalConstants& k = {});

/// Single idf taken from params; lambda = 0 is allowed and gives |R|^2 = 0.
SpectrumTable spectrum(std::span<const double> grid, const ModelParams& params);

}  // namespace mofsim
