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

// Shared fixtures and independent oracles for the unit and acceptance
// tests. Nothing here calls into the code under test except for types.

#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "mofsim/matrix.hpp"
#include "mofsim/params.hpp"

namespace mofsim::testing {

// m = 0.001, Omega = 100, M = 10, mho = 0.1, Omega_P = 5 (lambda = 0.1),
// A0 = 1e-4, T = 1000, resonant drive, |alpha_OF| = 1.6.
inline ModelParams fig3_params() {
  ModelParams p;
  p.m = 0.001;
  p.Omega = 100.0;
  p.M = 10.0;
  p.mho = 0.1;
  p.lambda = 0.1;
  p.omega = 100.0;
  p.L = 1000.0 / 1024.0;
  p.A0 = 1e-4;
  p.T = 1000.0;
  return p;
}

// Same, with Omega_P = 0.05 (lambda = 0.01).
inline ModelParams fig4_params() {
  ModelParams p = fig3_params();
  p.lambda = 0.01;
  return p;
}

inline Matrix tmsv(double r) {
  const double c = 0.5 * std::cosh(2.0 * r), s = 0.5 * std::sinh(2.0 * r);
  Matrix V = Matrix::Zero(4, 4);
  V(0, 0) = V(1, 1) = V(2, 2) = V(3, 3) = c;
  V(0, 2) = V(2, 0) = s;
  V(1, 3) = V(3, 1) = -s;
  return V;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// exp(J H) with H symmetric is symplectic.
inline Matrix random_symplectic(std::mt19937_64& rng, Eigen::Index modes, double scale) {
  const Eigen::Index n = 2 * modes;
  Eigen::MatrixXd H(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) H(i, j) = H(j, i) = uniform(rng, -scale, scale);
  Eigen::MatrixXd J = symplectic_form(modes);
  const Eigen::MatrixXd S = (J * H).exp();
  return S;
}

// 2x2 with unit determinant.
inline Matrix random_local_symplectic(std::mt19937_64& rng) {
  Matrix S(2, 2);
  const double a = uniform(rng, 0.5, 2.0);
  const double b = uniform(rng, -1.0, 1.0), c = uniform(rng, -1.0, 1.0);
  S << a, b, c, (1.0 + b * c) / a;
  return S;
}

// S diag(nu_k, nu_k) S^T with nu_k drawn from [1/2, 5/2].
inline Matrix random_physical(std::mt19937_64& rng, Eigen::Index modes, double scale = 0.6) {
  const Matrix S = random_symplectic(rng, modes, scale);
  Matrix W = Matrix::Zero(2 * modes, 2 * modes);
  for (Eigen::Index k = 0; k < modes; ++k) {
    const double nu = 0.5 + uniform(rng, 0.0, 2.0);
    W(2 * k, 2 * k) = W(2 * k + 1, 2 * k + 1) = nu;
  }
  Matrix V = S * W * S.transpose();
  return (0.5 * (V + V.transpose())).eval();
}

inline double bisect(const std::function<double(double)>& f, double a, double b, int iters = 200) {
  double fa = f(a);
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if ((fm < 0.0) == (fa < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

// Closed-form reflectances in (r_p, eta).
inline double reflectance_qphi_oracle(double r_p, double eta) {
  const double x = r_p * eta * (1.0 - eta * eta);
  return 1.0 / (1.0 + x * x);
}

inline double reflectance_qdotphi_oracle(double r_p, double eta) {
  const double y = r_p * (eta * eta - 1.0);
  return eta * eta / (eta * eta + y * y);
}

// Complex R straight from (lambda, m, eps0, c).
inline std::complex<double> R_qphi_oracle(double omega, double lambda, double m, double Omega,
                                          double eps0, double c) {
  const std::complex<double> I(0.0, 1.0);
  const double l2c = lambda * lambda * c;
  return -I * l2c / (I * l2c + 2.0 * m * omega * eps0 * (omega * omega - Omega * Omega));
}

inline std::complex<double> R_qdotphi_oracle(double omega, double lambda, double m, double Omega,
                                             double eps0, double c) {
  const std::complex<double> I(0.0, 1.0);
  const double l2w = lambda * lambda * omega;
  return -I * l2w / (I * l2w + 2.0 * m * eps0 * c * (omega * omega - Omega * Omega));
}

inline double max_abs(const Matrix& X) { return X.cwiseAbs().maxCoeff(); }

}  // namespace mofsim::testing
