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

#include "mofsim/matrix.hpp"

namespace mofsim {

/// Global quadrature order: mirror (Z, P), field (Phi, Pi), idf (q, p).
inline const std::vector<std::string>& mof_labels() {
  static const std::vector<std::string> labels{"Z", "P", "Phi", "Pi", "q", "p"};
  return labels;
}

/// Symmetric second-moment matrix V_ij = <{X_i, X_j}>/2 over 2n quadratures
/// ordered (x_1, p_1, x_2, p_2, ...).
class CovarianceMatrix {
 public:
  CovarianceMatrix() = default;
  /// Throws ParameterError unless V is square with even dimension and
  /// symmetric to 1e-12 relative. The stored matrix is exactly symmetric.
  explicit CovarianceMatrix(Matrix V, std::vector<std::string> labels = {});

  const Matrix& values() const { return V_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Eigen::Index dim() const { return V_.rows(); }
  Eigen::Index modes() const { return V_.rows() / 2; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return V_(i, j); }

 private:
  Matrix V_;
  std::vector<std::string> labels_;
};

/// V^PT = Lambda V Lambda with Lambda flipping the momentum of `mode`
/// (0 or 1) of a two-mode matrix.
CovarianceMatrix partial_transpose(const CovarianceMatrix& V, int mode = 1);

struct SymplecticPair {
  double c_plus = 0.0;
  double c_minus = 0.0;
};

/// Closed-form symplectic spectrum of a two-mode matrix,
///   c+- = sqrt[(Zt +- sqrt(Zt^2 - 4 det V)) / 2],
///   Zt  = det V_11 + det V_22 + 2 det V_12.
/// Applied to V^PT this is the entanglement spectrum, whose invariant
/// written in the blocks of V itself is det V_11 + det V_22 - 2 det V_12.
/// Throws PhysicalityError when the discriminant or c-^2 is negative
/// beyond 1e-9 relative.
SymplecticPair symplectic_spectrum_2mode(const CovarianceMatrix& V);

/// All n symplectic eigenvalues, ascending: the positive eigenvalues of
/// i J V, computed through the similar Hermitian matrix i V^{1/2} J V^{1/2}.
/// Throws PhysicalityError unless V is positive definite.
std::vector<double> symplectic_spectrum(const Matrix& V);

struct EntanglementResult {
  double E_N = 0.0;      ///< bits
  double c_minus = 0.0;  ///< of the partially transposed matrix
  double c_plus = 0.0;
  double Sigma = 0.0;    ///< det(V^PT + i hbar/2 J)
  bool entangled = false;
  bool boundary = false; ///< c- within tolerance of hbar/2; reported separable
};

inline constexpr double kSeparabilityTolerance = 1e-9;

/// Logarithmic negativity max(0, -log2(2 c-/hbar)) of a two-mode matrix.
/// Checks that E_N > 0, Sigma < 0 and c- < hbar/2 agree and throws
/// NumericalError if they do not.
EntanglementResult log_negativity(const CovarianceMatrix& V, double hbar = 1.0);

enum class ModePair { kMF, kOM, kOF };

ModePair parse_mode_pair(std::string_view name);
std::string_view to_string(ModePair pair);

/// Two-mode marginal of a 6x6 MOF matrix: MF keeps (Z,P,Phi,Pi), OM keeps
/// (Z,P,q,p), OF keeps (Phi,Pi,q,p), in that order.
CovarianceMatrix extract_pair(const CovarianceMatrix& V6, ModePair pair);

struct UncertaintyResult {
  bool ok = true;
  double min_eig = 0.0;
};

/// Smallest eigenvalue of the Hermitian matrix V + (i hbar/2) J.
UncertaintyResult uncertainty_check(const Matrix& V, double hbar = 1.0, double tol = 1e-9);

}  // namespace mofsim
