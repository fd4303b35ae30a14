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
#include <cmath>
#include <limits>

#include "doctest.h"
#include "support.hpp"

#include "mofsim/errors.hpp"
#include "mofsim/params.hpp"

using namespace mofsim;
using doctest::Approx;

TEST_SUITE("params") {

TEST_CASE("plasma frequency and resonance of the fig3 preset") {
  const ModelParams p = testing::fig3_params();
  const DerivedParams d = derive(p);
  CHECK(d.Omega_P == Approx(0.1 * 0.1 / (2.0 * 0.001)).epsilon(1e-14));
  CHECK(d.Omega_P == Approx(5.0).epsilon(1e-14));
  CHECK(d.r_p * d.Omega_P == Approx(p.Omega).epsilon(1e-15));
  CHECK(d.Delta == 0.0);
  CHECK(d.eta == 1.0);
}

TEST_CASE("q phi plasma frequency") {
  ModelParams p = testing::fig3_params();
  p.coupling_kind = CouplingKind::kQPhi;
  // lambda^2 c / (2 m eps0 Omega^2)
  CHECK(plasma_frequency(p) == Approx(0.01 / (2.0 * 0.001 * 1e4)).epsilon(1e-14));
  const DerivedParams d = derive(p);
  CHECK(d.r_p * d.Omega_P == Approx(p.Omega).epsilon(1e-15));
}

TEST_CASE("plasma frequency inversions") {
  const PhysicalConstants k{1.0, 3.0, 2.0, 1.0};
  for (CouplingKind kind : {CouplingKind::kQPhi, CouplingKind::kQdotPhi}) {
    const double lam = lambda_for_plasma_frequency(7.0, 0.02, 3.0, kind, k);
    CHECK(plasma_frequency(lam, 0.02, 3.0, kind, k) == Approx(7.0).epsilon(1e-13));
    const double m = mass_for_plasma_frequency(7.0, 0.4, 3.0, kind, k);
    CHECK(plasma_frequency(0.4, m, 3.0, kind, k) == Approx(7.0).epsilon(1e-13));
  }
}

TEST_CASE("zero coupling") {
  ModelParams p = testing::fig3_params();
  p.lambda = 0.0;
  const DerivedParams d = derive(p);
  CHECK(d.Omega_P == 0.0);
  CHECK(std::isinf(d.r_p));
}

TEST_CASE("drive amplitude round trip") {
  const PhysicalConstants k{1.05e-34, 3e8, 8.85e-12, 1.38e-23};
  for (double A0 : {0.0, 1e-6, 0.3, 17.0}) {
    const double Phi0 = drive_amplitude(A0, 2.0e15, 1e-6, k);
    CHECK(dimensionless_amplitude(Phi0, 2.0e15, 1e-6, k) == Approx(A0).epsilon(1e-15));
  }
  const ModelParams p = testing::fig3_params();
  // A0^2 hbar / (2 omega eps0 L) = 1e-8 / 195.3125
  CHECK(derive(p).Phi0 * derive(p).Phi0 == Approx(5.12e-11).epsilon(1e-13));
}

TEST_CASE("renormalized mechanical frequency") {
  ModelParams p = testing::fig3_params();
  const double Phi0 = derive(p).Phi0;
  const double k = p.omega / p.constants.c;
  const double expected = std::sqrt(p.mho * p.mho + p.lambda * p.lambda / (p.m * p.M) * k * k *
                                                        Phi0 * Phi0 * std::pow(p.Omega / p.omega, 2));
  CHECK(renormalized_mechanical_frequency(p) == Approx(expected).epsilon(1e-14));
  CHECK(derive(p).mho_prime > p.mho);
  p.field_gradient_scale = 0.0;
  CHECK(renormalized_mechanical_frequency(p) == p.mho);
  p = testing::fig3_params();
  p.A0 = 0.0;
  CHECK(renormalized_mechanical_frequency(p) == p.mho);
}

TEST_CASE("validation rejects unphysical parameters") {
  ModelParams p = testing::fig3_params();
  CHECK_NOTHROW(validate(p));
  for (double ModelParams::*field : {&ModelParams::m, &ModelParams::Omega, &ModelParams::M,
                                     &ModelParams::mho, &ModelParams::omega, &ModelParams::L}) {
    ModelParams q = p;
    q.*field = 0.0;
    CHECK_THROWS_AS(validate(q), ParameterError);
  }
  for (double ModelParams::*field : {&ModelParams::gamma, &ModelParams::T, &ModelParams::gamma_i,
                                     &ModelParams::gamma_f}) {
    ModelParams q = p;
    q.*field = -1.0;
    CHECK_THROWS_AS(validate(q), ParameterError);
  }
  ModelParams q = p;
  q.lambda = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(validate(q), ParameterError);
}

TEST_CASE("occupations") {
  const PhysicalConstants k{};
  CHECK(bose_occupation(0.1, 0.0, k) == 0.0);
  CHECK(bose_occupation(1.0, 1.0, k) == Approx(1.0 / (std::exp(1.0) - 1.0)).epsilon(1e-14));
  CHECK(high_temperature_occupation(0.1, 1000.0, k) == Approx(1e4).epsilon(1e-14));
  const double n = bose_occupation(0.1, 1000.0, k);
  CHECK(std::abs(n - 1e4) / 1e4 < 1e-4);
}

TEST_CASE("regime report at the fig3 preset") {
  const ModelParams p = testing::fig3_params();
  const RegimeReport r = validate_regime(p);
  CHECK(r.sub_wavelength_bound == Approx(1e-7).epsilon(1e-14));
  CHECK(r.sub_wavelength.margin == Approx(1e-7 / 5.12e-11).epsilon(1e-12));
  CHECK(r.sub_wavelength.margin > 1.5e3);
  CHECK(r.sub_wavelength.margin < 2.5e3);
  CHECK(r.sub_wavelength.pass);
  CHECK(r.time_scale.margin == Approx(1000.0));
  CHECK(r.time_scale.pass);
  CHECK(std::isinf(r.rotating_wave.margin));
  CHECK(r.coupling == CouplingRegime::kWeak);
  CHECK(r.plasma_ratio == Approx(0.05));
  CHECK(r.all_pass());
  CHECK(r.warnings().empty());
}

TEST_CASE("regime report failures and limits") {
  ModelParams p = testing::fig3_params();
  p.A0 = 0.0;
  CHECK(std::isinf(validate_regime(p).sub_wavelength.margin));
  CHECK(validate_regime(p).sub_wavelength.pass);

  p = testing::fig3_params();
  p.A0 = 1e-2;
  const RegimeReport loud = validate_regime(p);
  CHECK_FALSE(loud.sub_wavelength.pass);
  CHECK_FALSE(loud.warnings().empty());

  p = testing::fig3_params();
  p.mho = 50.0;
  CHECK_FALSE(validate_regime(p).time_scale.pass);

  p = testing::fig3_params();
  p.lambda = 1.0;  // Omega_P = 500
  CHECK(validate_regime(p).coupling == CouplingRegime::kStrong);
}

TEST_CASE("sub-wavelength margin decreases strictly with drive") {
  ModelParams p = testing::fig3_params();
  double last = std::numeric_limits<double>::infinity();
  for (double A0 : {1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2}) {
    p.A0 = A0;
    const double margin = validate_regime(p).sub_wavelength.margin;
    CHECK(margin < last);
    last = margin;
  }
}

TEST_CASE("classical displacement estimates") {
  ModelParams p = testing::fig3_params();
  const ClassicalEstimates e = classical_estimates(p);
  CHECK(e.ratio == Approx(1e6).epsilon(1e-12));
  CHECK(e.Z0_est / e.Z2w_est == Approx(1e6).epsilon(1e-12));
  p.M *= 10.0;
  const ClassicalEstimates heavy = classical_estimates(p);
  CHECK(heavy.Z0_est == Approx(e.Z0_est / 10.0).epsilon(1e-14));
  CHECK(heavy.Z2w_est == Approx(e.Z2w_est / 10.0).epsilon(1e-14));
  p.A0 = 0.0;
  CHECK(classical_estimates(p).Z0_est == 0.0);
  CHECK(classical_estimates(p).Z2w_est == 0.0);
}

}  // TEST_SUITE
