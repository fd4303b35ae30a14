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
#include "mofsim/gaussian.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "mofsim/errors.hpp"

namespace mofsim {

namespace {

double det2(const Matrix& V, Eigen::Index r, Eigen::Index c) {
  return V(r, c) * V(r + 1, c + 1) - V(r, c + 1) * V(r + 1, c);
}

void require_dim(const CovarianceMatrix& V, Eigen::Index dim, const char* what) {
  if (V.dim() != dim) {
    std::ostringstream os;
    os << what << " expects a " << dim << "x" << dim << " covariance matrix (got " << V.dim() << ")";
    throw ParameterError(os.str());
  }
}

}  // namespace

CovarianceMatrix::CovarianceMatrix(Matrix V, std::vector<std::string> labels)
    : V_(std::move(V)), labels_(std::move(labels)) {
  if (V_.rows() != V_.cols() || V_.rows() % 2 != 0 || V_.rows() == 0)
    throw ParameterError("covariance matrix must be square with positive even dimension");
  if (!V_.allFinite()) throw ParameterError("covariance matrix has non-finite entries");
  const double scale = std::max(1.0, V_.cwiseAbs().maxCoeff());
  const double asym = (V_ - V_.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * scale) {
    std::ostringstream os;
    os << "covariance matrix is not symmetric (max |V - V^T| = " << asym << ")";
    throw ParameterError(os.str());
  }
  V_ = (0.5 * (V_ + V_.transpose())).eval();
  if (!labels_.empty() && static_cast<Eigen::Index>(labels_.size()) != V_.rows())
    throw ParameterError("covariance label count does not match its dimension");
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& V, int mode) {
  require_dim(V, 4, "partial_transpose");
  if (mode != 0 && mode != 1) throw ParameterError("partial_transpose mode must be 0 or 1");
  Matrix out = V.values();
  const Eigen::Index k = 2 * mode + 1;
  out.row(k) *= -1.0;
  out.col(k) *= -1.0;
  return CovarianceMatrix(std::move(out), V.labels());
}

SymplecticPair symplectic_spectrum_2mode(const CovarianceMatrix& V) {
  require_dim(V, 4, "symplectic_spectrum_2mode");
  const Matrix& M = V.values();
  const double Zt = det2(M, 0, 0) + det2(M, 2, 2) + 2.0 * det2(M, 0, 2);
  const double detV = M.determinant();
  const double scale = std::max(1.0, Zt * Zt);
  double disc = Zt * Zt - 4.0 * detV;
  if (disc < -kSeparabilityTolerance * scale) {
    std::ostringstream os;
    os << "non-physical covariance: Zt^2 - 4 det V = " << disc << " (Zt = " << Zt
       << ", det V = " << detV << ")";
    throw PhysicalityError(os.str());
  }
  disc = std::max(disc, 0.0);
  const double root = std::sqrt(disc);
  const double hi = 0.5 * (Zt + root);
  // c-^2 = det V / c+^2 is the same root without the cancellation in
  // Zt - sqrt(disc) when c+ >> c-.
  double lo = hi > 0.0 ? detV / hi : 0.5 * (Zt - root);
  if (lo < -kSeparabilityTolerance * std::max(1.0, std::abs(Zt)) || hi < 0.0) {
    std::ostringstream os;
    os << "non-physical covariance: symplectic eigenvalue squares (" << hi << ", " << lo << ")";
    throw PhysicalityError(os.str());
  }
  lo = std::max(lo, 0.0);
  return {std::sqrt(hi), std::sqrt(lo)};
}

std::vector<double> symplectic_spectrum(const Matrix& V) {
  if (V.rows() != V.cols() || V.rows() % 2 != 0)
    throw ParameterError("symplectic_spectrum expects a square matrix of even dimension");
  const Eigen::Index n = V.rows() / 2;
  // i J V is similar to the Hermitian i S J S with S = V^{1/2}. The
  // Hermitian form keeps degenerate pairs accurate, where the non-normal
  // J V loses half the digits.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sq{Eigen::MatrixXd(V)};
  if (sq.info() != Eigen::Success) throw NumericalError("eigen-decomposition of V failed");
  if (sq.eigenvalues().minCoeff() <= 0.0)
    throw PhysicalityError("symplectic spectrum needs a positive definite matrix");
  const Eigen::MatrixXd S = sq.operatorSqrt();
  const Eigen::MatrixXcd H =
      Complex(0.0, 1.0) * (S * Eigen::MatrixXd(symplectic_form(n)) * S).cast<Complex>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("eigen-decomposition of i S J S failed");
  // Ascending: -nu_n .. -nu_1, nu_1 .. nu_n.
  std::vector<double> out;
  out.reserve(n);
  for (Eigen::Index i = 0; i < n; ++i)
    out.push_back(0.5 * (es.eigenvalues()(n + i) - es.eigenvalues()(n - 1 - i)));
  return out;
}

EntanglementResult log_negativity(const CovarianceMatrix& V, double hbar) {
  require_dim(V, 4, "log_negativity");
  const CovarianceMatrix pt = partial_transpose(V, 1);
  const SymplecticPair s = symplectic_spectrum_2mode(pt);

  EntanglementResult r;
  r.c_plus = s.c_plus;
  r.c_minus = s.c_minus;

  ComplexMatrix H = pt.values().cast<Complex>();
  H += Complex(0.0, 0.5 * hbar) * symplectic_form(2).cast<Complex>();
  H = (0.5 * (H + H.adjoint())).eval();
  r.Sigma = H.determinant().real();

  const double half = 0.5 * hbar;
  r.boundary = std::abs(r.c_minus - half) <= kSeparabilityTolerance * hbar;
  r.entangled = !r.boundary && r.c_minus < half;
  r.E_N = r.entangled ? -std::log2(r.c_minus / half) : 0.0;

  const double sigma_tol =
      kSeparabilityTolerance * hbar * hbar * std::max(hbar * hbar, r.c_plus * r.c_plus);
  if (!r.boundary && std::abs(r.Sigma) > sigma_tol && (r.Sigma < 0.0) != r.entangled) {
    std::ostringstream os;
    os << "separability criteria disagree: c- = " << r.c_minus << ", Sigma = " << r.Sigma;
    throw NumericalError(os.str());
  }
  return r;
}

ModePair parse_mode_pair(std::string_view name) {
  if (name == "MF") return ModePair::kMF;
  if (name == "OM") return ModePair::kOM;
  if (name == "OF") return ModePair::kOF;
  throw ParameterError("unknown mode pair '" + std::string(name) + "' (expected MF, OM or OF)");
}

std::string_view to_string(ModePair pair) {
  switch (pair) {
    case ModePair::kMF: return "MF";
    case ModePair::kOM: return "OM";
    case ModePair::kOF: return "OF";
  }
  return "MF";
}

CovarianceMatrix extract_pair(const CovarianceMatrix& V6, ModePair pair) {
  require_dim(V6, 6, "extract_pair");
  std::array<Eigen::Index, 4> idx{};
  switch (pair) {
    case ModePair::kMF: idx = {0, 1, 2, 3}; break;
    case ModePair::kOM: idx = {0, 1, 4, 5}; break;
    case ModePair::kOF: idx = {2, 3, 4, 5}; break;
  }
  Matrix out(4, 4);
  std::vector<std::string> labels;
  const auto& src = V6.labels().empty() ? mof_labels() : V6.labels();
  for (int i = 0; i < 4; ++i) {
    labels.push_back(src[idx[i]]);
    for (int j = 0; j < 4; ++j) out(i, j) = V6(idx[i], idx[j]);
  }
  return CovarianceMatrix(std::move(out), std::move(labels));
}

UncertaintyResult uncertainty_check(const Matrix& V, double hbar, double tol) {
  if (V.rows() != V.cols() || V.rows() % 2 != 0)
    throw ParameterError("uncertainty_check expects a square matrix of even dimension");
  Eigen::MatrixXcd H = V.cast<Complex>();
  H += Complex(0.0, 0.5 * hbar) * symplectic_form(V.rows() / 2).cast<Complex>();
  H = (0.5 * (H + H.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
  UncertaintyResult r;
  r.min_eig = es.eigenvalues().minCoeff();
  r.ok = r.min_eig >= -tol;
  return r;
}

}  // namespace mofsim
