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
#include "mofsim/optics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "mofsim/errors.hpp"
#include "mofsim/kernels/kernels.hpp"

namespace mofsim {

namespace {

// R = -i N / (i N + d) for real N, d, expanded so that Re R = -|R|^2 holds
// to rounding and the pole d = 0 gives R = -1 exactly.
ReflectionResult lorentz(double N, double d) {
  ReflectionResult r;
  if (N == 0.0) {
    r.T = Complex(1.0, 0.0);
    r.transmittance = 1.0;
    return r;
  }
  const double N2 = N * N;
  const double den = N2 + d * d;
  r.reflectance = N2 / den;
  r.R = Complex(-r.reflectance, -N * d / den);
  r.T = 1.0 + r.R;
  r.transmittance = std::norm(r.T);
  return r;
}

void require_frequency(double omega) {
  if (!(omega >= 0.0) || !std::isfinite(omega)) {
    std::ostringstream os;
    os << "omega must be finite and >= 0 (got " << omega << ")";
    throw ParameterError(os.str());
  }
}

}  // namespace

ReflectionResult reflection_qphi(double omega, double Omega, double Omega_P) {
  require_frequency(omega);
  const double Omega2 = Omega * Omega;
  return lorentz(Omega_P * Omega2, omega * (omega * omega - Omega2));
}

ReflectionResult reflection_qdotphi(double omega, double Omega, double Omega_P) {
  require_frequency(omega);
  return lorentz(Omega_P * omega, omega * omega - Omega * Omega);
}

ReflectionResult reflection_qphi(double omega, const ModelParams& p) {
  validate(p);
  const double Omega_P = plasma_frequency(p.lambda, p.m, p.Omega, CouplingKind::kQPhi, p.constants);
  return reflection_qphi(omega, p.Omega, Omega_P);
}

ReflectionResult reflection_qdotphi(double omega, const ModelParams& p) {
  validate(p);
  const double Omega_P =
      plasma_frequency(p.lambda, p.m, p.Omega, CouplingKind::kQdotPhi, p.constants);
  return reflection_qdotphi(omega, p.Omega, Omega_P);
}

ReflectionResult reflection(double omega, const ModelParams& p) {
  return p.coupling_kind == CouplingKind::kQPhi ? reflection_qphi(omega, p)
                                                : reflection_qdotphi(omega, p);
}

ResonanceSet::ResonanceSet(std::vector<Resonance> resonances) : entries_(std::move(resonances)) {
  for (const auto& r : entries_) {
    if (!(r.Omega > 0.0) || !(r.Omega_P > 0.0) || !std::isfinite(r.Omega) ||
        !std::isfinite(r.Omega_P)) {
      std::ostringstream os;
      os << "resonance (Omega=" << r.Omega << ", Omega_P=" << r.Omega_P
         << ") must have strictly positive, finite entries";
      throw ParameterError(os.str());
    }
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const Resonance& a, const Resonance& b) { return a.Omega < b.Omega; });
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].Omega == entries_[i - 1].Omega) {
      std::ostringstream os;
      os << "resonance frequencies must be distinct (Omega=" << entries_[i].Omega
         << " appears twice)";
      throw ParameterError(os.str());
    }
  }
}

ReflectionResult compose_resonances(double omega, const ResonanceSet& set) {
  require_frequency(omega);
  const double w2 = omega * omega;
  double sigma = 0.0;
  for (const auto& r : set.entries()) {
    const double d = w2 - r.Omega * r.Omega;
    if (d == 0.0) return lorentz(1.0, 0.0);
    sigma = sigma + (r.Omega_P * omega) / d;
  }
  return lorentz(sigma, 1.0);
}

namespace {

void check_grid(std::span<const double> grid) {
  if (grid.empty()) throw ParameterError("frequency grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    require_frequency(grid[i]);
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw ParameterError("frequency grid must be strictly ascending");
  }
}

SpectrumTable make_table(std::span<const double> grid, const PhysicalConstants& k) {
  SpectrumTable t;
  t.omega.assign(grid.begin(), grid.end());
  t.wavelength.resize(grid.size());
  t.reflectance.resize(grid.size());
  t.transmittance.resize(grid.size());
  const double two_pi_c = 2.0 * std::numbers::pi * k.c;
  for (std::size_t i = 0; i < grid.size(); ++i)
    t.wavelength[i] = grid[i] > 0.0 ? two_pi_c / grid[i] : std::numeric_limits<double>::infinity();
  return t;
}

void finish_transmittance(SpectrumTable& t) {
  for (std::size_t i = 0; i < t.reflectance.size(); ++i) t.transmittance[i] = 1.0 - t.reflectance[i];
}

}  // namespace

SpectrumTable spectrum(std::span<const double> grid, const ResonanceSet& resonances,
                       CouplingKind kind, const PhysicalConstants& k) {
  check_grid(grid);
  if (resonances.empty()) throw ParameterError("spectrum needs at least one resonance");
  SpectrumTable t = make_table(grid, k);
  if (resonances.size() == 1) {
    const Resonance r = resonances.entries()[0];
    if (kind == CouplingKind::kQPhi)
      kernels::reflectance_qphi(grid, r.Omega, r.Omega_P, t.reflectance);
    else
      kernels::reflectance_qdotphi(grid, r.Omega, r.Omega_P, t.reflectance);
  } else {
    if (kind != CouplingKind::kQdotPhi)
      throw ParameterError("multi-resonance composition is defined for the qdotphi coupling only");
    std::vector<double> Om, OmP;
    for (const auto& r : resonances.entries()) {
      Om.push_back(r.Omega);
      OmP.push_back(r.Omega_P);
    }
    kernels::reflectance_composed(grid, Om, OmP, t.reflectance);
  }
  finish_transmittance(t);
  return t;
}

SpectrumTable spectrum(std::span<const double> grid, const ModelParams& p) {
  validate(p);
  check_grid(grid);
  SpectrumTable t = make_table(grid, p.constants);
  const double Omega_P = plasma_frequency(p);
  if (p.coupling_kind == CouplingKind::kQPhi)
    kernels::reflectance_qphi(grid, p.Omega, Omega_P, t.reflectance);
  else
    kernels::reflectance_qdotphi(grid, p.Omega, Omega_P, t.reflectance);
  finish_transmittance(t);
  return t;
}

}  // namespace mofsim
