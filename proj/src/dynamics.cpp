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
#include "mofsim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "mofsim/errors.hpp"
#include "mofsim/kernels/kernels.hpp"

namespace mofsim {

namespace {

enum : Eigen::Index { kZ = 0, kP = 1, kPhi = 2, kPi = 3, kQ = 4, kPq = 5 };

double detuning_sign(const ModelParams& p) {
  return p.detuning_convention == DetuningConvention::kInteractionPicture ? -1.0 : 1.0;
}

const std::vector<std::string>& bc_labels() {
  static const std::vector<std::string> labels{"Z", "P", "Phi", "Pi"};
  return labels;
}

}  // namespace

double mechanical_diffusion(const ModelParams& p) {
  const DerivedParams d = derive(p);
  const auto& k = p.constants;
  if (p.gamma == 0.0) return 0.0;
  if (p.noise_model == NoiseModel::kExactBose) return p.gamma * (2.0 * d.nbar + 1.0);
  return 2.0 * p.gamma * k.kB * p.T / (k.hbar * d.mho_prime);
}

Matrix build_diffusion(const ModelParams& p) {
  Matrix D = Matrix::Zero(6, 6);
  D(kP, kP) = mechanical_diffusion(p);
  D(kQ, kQ) = p.gamma_f;
  D(kPq, kPq) = p.gamma_i;
  return D;
}

DriftDiffusion build_drift_mof(const CouplingSet& c, const ModelParams& p) {
  const double mho = c.mho_prime;
  const double aOF = std::abs(c.alpha_OF);
  const double reOM = c.alpha_OM.real(), imOM = c.alpha_OM.imag();
  const double reMF = c.alpha_MF.real(), imMF = c.alpha_MF.imag();
  const double sD = detuning_sign(p) * (p.omega - p.Omega);

  Matrix A = Matrix::Zero(6, 6);
  A(kZ, kP) = mho;

  A(kP, kZ) = -mho;
  A(kP, kQ) = -2.0 * reOM;
  A(kP, kPq) = 2.0 * imOM;
  A(kP, kPhi) = -2.0 * reMF;
  A(kP, kPi) = 2.0 * imMF;
  A(kP, kP) = -p.gamma;

  A(kPhi, kQ) = aOF;
  A(kPhi, kZ) = -2.0 * imMF;

  A(kPi, kPq) = aOF;
  A(kPi, kZ) = -2.0 * reMF;

  A(kQ, kPq) = sD;
  A(kQ, kPhi) = -aOF;
  A(kQ, kZ) = -2.0 * imOM;
  A(kQ, kQ) = -p.gamma_f;

  A(kPq, kQ) = -sD;
  A(kPq, kPi) = -aOF;
  A(kPq, kZ) = -2.0 * reOM;
  A(kPq, kPq) = -p.gamma_i;

  return {std::move(A), build_diffusion(p), mof_labels()};
}

DriftDiffusion build_drift_bc(const ModelParams& p) {
  const CouplingSet c = compute_couplings(p);
  const double r2 = std::sqrt(2.0);
  const double reB = c.beta_MF.real(), imB = c.beta_MF.imag();
  Matrix A = Matrix::Zero(4, 4);
  A(kZ, kP) = p.mho;
  A(kP, kZ) = -p.mho;
  A(kP, kPhi) = r2 * reB;
  A(kP, kPi) = -r2 * imB;
  A(kP, kP) = -p.gamma;
  A(kPhi, kZ) = r2 * imB;
  A(kPi, kZ) = r2 * reB;
  Matrix D = Matrix::Zero(4, 4);
  D(kP, kP) = mechanical_diffusion(p);
  return {std::move(A), std::move(D), bc_labels()};
}

DriftDiffusion adiabatic_idf_elimination(const CouplingSet& c, const ModelParams& p) {
  const double Delta = p.omega - p.Omega;
  const double den = Delta * Delta + p.gamma_i * p.gamma_f;
  if (!(den > 0.0)) {
    std::ostringstream os;
    os << "adiabatic elimination needs Delta^2 + gamma_i gamma_f > 0 (Delta = " << Delta
       << ", gamma_i = " << p.gamma_i << ", gamma_f = " << p.gamma_f << ")";
    throw ParameterError(os.str());
  }
  const double sD = detuning_sign(p) * Delta;
  const double aOF = std::abs(c.alpha_OF);
  const double reOM = c.alpha_OM.real(), imOM = c.alpha_OM.imag();

  // Steady state of q' = s Delta p - gamma_f q - C1, p' = -s Delta q - gamma_i p - C2.
  Eigen::Matrix2d K;
  K << -p.gamma_i, -sD, sD, -p.gamma_f;
  K /= den;

  // C = G x over x = (Z, P, Phi, Pi).
  Eigen::Matrix<double, 2, 4> G = Eigen::Matrix<double, 2, 4>::Zero();
  G(0, kZ) = 2.0 * imOM;
  G(0, kPhi) = aOF;
  G(1, kZ) = 2.0 * reOM;
  G(1, kPi) = aOF;

  // How (q, p) enter the slow equations.
  Eigen::Matrix<double, 4, 2> B = Eigen::Matrix<double, 4, 2>::Zero();
  B(kP, 0) = -2.0 * reOM;
  B(kP, 1) = 2.0 * imOM;
  B(kPhi, 0) = aOF;
  B(kPi, 1) = aOF;

  const DriftDiffusion full = build_drift_mof(c, p);
  const Eigen::Matrix<double, 4, 2> BK = B * K;
  Matrix A = full.A.topLeftCorner(4, 4);
  A += BK * G;
  Matrix D = full.D.topLeftCorner(4, 4);
  const Eigen::Matrix2d noise = Eigen::Vector2d(p.gamma_f, p.gamma_i).asDiagonal();
  D += BK * noise * BK.transpose();
  D = (0.5 * (D + D.transpose())).eval();
  return {std::move(A), std::move(D), bc_labels()};
}

InitialState parse_initial_state(std::string_view name) {
  if (name == "thermal") return InitialState::kThermal;
  if (name == "ground") return InitialState::kGround;
  throw ParameterError("unknown initial state '" + std::string(name) +
                       "' (expected thermal or ground)");
}

std::string_view to_string(InitialState s) {
  return s == InitialState::kThermal ? "thermal" : "ground";
}

CovarianceMatrix initial_covariance(const ModelParams& p, InitialState state) {
  const double nbar = state == InitialState::kThermal ? derive(p).nbar : 0.0;
  Matrix V = 0.5 * Matrix::Identity(6, 6);
  V(kZ, kZ) = V(kP, kP) = nbar + 0.5;
  return CovarianceMatrix(std::move(V), mof_labels());
}

CovarianceMatrix initial_covariance_4(const ModelParams& p, InitialState state) {
  const CovarianceMatrix V6 = initial_covariance(p, state);
  return CovarianceMatrix(V6.values().topLeftCorner(4, 4), bc_labels());
}

Method parse_method(std::string_view name) {
  if (name == "exact") return Method::kExact;
  if (name == "rk4") return Method::kRk4;
  throw ParameterError("unknown integration method '" + std::string(name) +
                       "' (expected exact or rk4)");
}

std::string_view to_string(Method m) { return m == Method::kExact ? "exact" : "rk4"; }

std::vector<double> linspace(double start, double stop, std::size_t count) {
  std::vector<double> out(count);
  if (count == 0) return out;
  if (count == 1) {
    out[0] = start;
    return out;
  }
  const double span = stop - start;
  const double last = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = start + span * (static_cast<double>(i) / last);
  out.back() = stop;
  return out;
}

double default_rk4_step(const Matrix& A) {
  const Eigen::MatrixXd Ad = A;
  const double rho = Ad.eigenvalues().cwiseAbs().maxCoeff();
  if (!(rho > 0.0)) return 0.0;
  return 2.0 * std::numbers::pi / (kRk4StepsPerPeriod * rho);
}

Propagator propagator(const Matrix& A, const Matrix& D, double h) {
  const Eigen::Index n = A.rows();
  // Scaling and squaring on the Van Loan block: exp over h / 2^s keeps
  // e^{-A^T h'} bounded even when the damping is strong, then doubling
  // F <- F^2, Q <- F Q F^T + Q recovers the full interval.
  const double norm = A.cwiseAbs().rowwise().sum().maxCoeff() * std::abs(h);
  int s = 0;
  while (norm / std::ldexp(1.0, s) > 0.5 && s < 64) ++s;
  const double hs = std::ldexp(h, -s);

  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  C.topLeftCorner(n, n) = A * hs;
  C.topRightCorner(n, n) = D * hs;
  C.bottomRightCorner(n, n) = -A.transpose() * hs;
  const Eigen::MatrixXd E = C.exp();

  Propagator prop;
  prop.F = E.topLeftCorner(n, n);
  prop.Q = E.topRightCorner(n, n) * prop.F.transpose();
  prop.Q = (0.5 * (prop.Q + prop.Q.transpose())).eval();
  for (int i = 0; i < s; ++i) {
    Matrix Q2 = prop.F * prop.Q * prop.F.transpose() + prop.Q;
    prop.Q = (0.5 * (Q2 + Q2.transpose())).eval();
    prop.F = (prop.F * prop.F).eval();
  }
  return prop;
}

namespace {

// Roundoff in V + iJ/2 grows with the largest entry of V (thermal states
// reach T/mho), so the physicality floor is relative to that scale.
double physicality_tolerance(const Matrix& V) {
  return kSeparabilityTolerance * std::max(1.0, V.cwiseAbs().maxCoeff());
}

void record(const DriftDiffusion& sys, const EvolveOptions& opt, double t, const Matrix& V,
            EntanglementTrace& trace) {
  if (opt.check_physicality) {
    const UncertaintyResult u = uncertainty_check(V, 1.0, physicality_tolerance(V));
    if (!u.ok) {
      std::ostringstream os;
      os << "covariance left the physical set at t = " << t << " (min eigenvalue of V + iJ/2 = "
         << u.min_eig << "); reduce the integration step";
      throw PhysicalityError(os.str());
    }
  }
  const CovarianceMatrix cov(V, sys.labels);
  const EntanglementResult e = cov.dim() == 6 ? log_negativity(extract_pair(cov, opt.pair))
                                              : log_negativity(cov);
  trace.times.push_back(t);
  trace.E_N.push_back(e.E_N);
  trace.c_minus.push_back(e.c_minus);
  if (opt.keep_snapshots) trace.snapshots.push_back(V);
}

void rk4_interval(const DriftDiffusion& sys, Matrix& V, double dt, double h_max) {
  const std::size_t n = static_cast<std::size_t>(sys.dim());
  const std::size_t steps =
      h_max > 0.0 ? std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(dt / h_max))) : 1;
  const double h = dt / static_cast<double>(steps);
  Matrix k1(n, n), k2(n, n), k3(n, n), k4(n, n), W(n, n);
  const double* A = sys.A.data();
  const double* D = sys.D.data();
  for (std::size_t s = 0; s < steps; ++s) {
    kernels::lyapunov_rhs(n, A, V.data(), D, k1.data());
    W = V + (0.5 * h) * k1;
    kernels::lyapunov_rhs(n, A, W.data(), D, k2.data());
    W = V + (0.5 * h) * k2;
    kernels::lyapunov_rhs(n, A, W.data(), D, k3.data());
    W = V + h * k3;
    kernels::lyapunov_rhs(n, A, W.data(), D, k4.data());
    V += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
}

}  // namespace

EvolutionResult evolve_covariance(const DriftDiffusion& sys, const CovarianceMatrix& V0,
                                  std::span<const double> times, const EvolveOptions& opt) {
  const Eigen::Index n = sys.dim();
  if (sys.A.cols() != n || sys.D.rows() != n || sys.D.cols() != n)
    throw ParameterError("drift and diffusion shapes do not match");
  if (n != 4 && n != 6) throw ParameterError("evolve_covariance supports 4x4 and 6x6 systems");
  if (V0.dim() != n) throw ParameterError("initial covariance dimension does not match the system");
  if (times.empty()) throw ParameterError("time grid is empty");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i])) throw ParameterError("time grid has non-finite entries");
    if (i > 0 && !(times[i] > times[i - 1]))
      throw ParameterError("time grid must be strictly ascending");
  }
  const UncertaintyResult u0 =
      uncertainty_check(V0.values(), 1.0, physicality_tolerance(V0.values()));
  if (!u0.ok) {
    std::ostringstream os;
    os << "initial covariance is not physical (min eigenvalue " << u0.min_eig << ")";
    throw PhysicalityError(os.str());
  }

  EvolutionResult result;
  Matrix V = V0.values();
  record(sys, opt, times[0], V, result.trace);

  if (opt.method == Method::kRk4) {
    result.rk4_step = opt.rk4_step > 0.0 ? opt.rk4_step : default_rk4_step(sys.A);
    for (std::size_t i = 1; i < times.size(); ++i) {
      rk4_interval(sys, V, times[i] - times[i - 1], result.rk4_step);
      record(sys, opt, times[i], V, result.trace);
    }
  } else {
    std::map<double, Propagator> cache;
    Matrix next(n, n);
    for (std::size_t i = 1; i < times.size(); ++i) {
      const double dt = times[i] - times[i - 1];
      auto it = cache.find(dt);
      if (it == cache.end()) it = cache.emplace(dt, propagator(sys.A, sys.D, dt)).first;
      kernels::congruence(static_cast<std::size_t>(n), it->second.F.data(), V.data(),
                          it->second.Q.data(), next.data());
      V = 0.5 * (next + next.transpose());
      record(sys, opt, times[i], V, result.trace);
    }
  }
  result.final_V = V;
  return result;
}

CovarianceMatrix steady_state_covariance(const DriftDiffusion& sys) {
  const Eigen::Index n = sys.dim();
  const Eigen::MatrixXd Ad = sys.A;
  const Eigen::VectorXcd ev = Ad.eigenvalues();
  const double rho = std::max(1.0, ev.cwiseAbs().maxCoeff());
  Eigen::Index worst = 0;
  for (Eigen::Index i = 1; i < ev.size(); ++i)
    if (ev(i).real() > ev(worst).real()) worst = i;
  if (ev(worst).real() >= -1e-12 * rho) {
    std::ostringstream os;
    os << "drift matrix is not Hurwitz: eigenvalue " << ev(worst).real()
       << (ev(worst).imag() < 0 ? " - " : " + ") << std::abs(ev(worst).imag())
       << "i has non-negative real part";
    throw NotHurwitzError(os.str());
  }
  // Row-major vec: vec(A V) = (A (x) I) vec V, vec(V A^T) = (I (x) A) vec V.
  const Eigen::Index nn = n * n;
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(nn, nn);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k) {
        L(i * n + j, k * n + j) += Ad(i, k);
        L(i * n + j, i * n + k) += Ad(j, k);
      }
  Eigen::VectorXd rhs(nn);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) rhs(i * n + j) = -sys.D(i, j);
  const Eigen::VectorXd x = L.fullPivLu().solve(rhs);
  Matrix V(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) V(i, j) = x(i * n + j);
  V = (0.5 * (V + V.transpose())).eval();

  const Matrix res = sys.A * V + V * sys.A.transpose() + sys.D;
  const double dnorm = sys.D.norm();
  if (res.norm() > 1e-10 * std::max(dnorm, std::numeric_limits<double>::min())) {
    std::ostringstream os;
    os << "steady-state residual " << res.norm() << " exceeds 1e-10 ||D|| = " << 1e-10 * dnorm;
    throw NumericalError(os.str());
  }
  return CovarianceMatrix(std::move(V), sys.labels);
}

}  // namespace mofsim
