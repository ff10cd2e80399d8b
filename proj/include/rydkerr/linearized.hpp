// Copyright 2026 The rydkerr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// First-order quantum fluctuations around a stable classical root.
//
// The positive-P drift is linearized as d(dX)/dt = -mu dX + D^(1/2) xi with
// dX = (d alpha, d beta). With n = |alpha_s|^2,
//
//   mu = i [[ Gamma + 2 chi n,  chi alpha^2          ],
//           [ -chi alpha*^2,    -Gamma* - 2 chi n    ]],
//   D  = diag(-i chi alpha^2, i chi alpha*^2),
//
// so Tr(mu) = gamma and Det(mu) = Lambda. The stationary correlations
// C = <dX dX^T> solve mu C + C mu^T = D.

#ifndef RYDKERR_LINEARIZED_HPP
#define RYDKERR_LINEARIZED_HPP

#include <sstream>

#include <Eigen/Dense>

#include "rydkerr/classical.hpp"
#include "rydkerr/model.hpp"

namespace rydkerr {

using Matrix2 = Eigen::Matrix2cd;

struct DriftDiffusion {
  Matrix2 mu;
  Matrix2 diff;
};

/// Residual of the classical equation of motion at alpha.
inline double classical_residual(const ModelParams& p, cplx alpha) {
  const cplx Gamma = DerivedParams::from(p).Gamma;
  return std::abs(-kI * p.lambda - kI * alpha * (Gamma + p.chi * std::norm(alpha)));
}

inline DriftDiffusion drift_diffusion(const ModelParams& p, cplx alpha_s) {
  const double res = classical_residual(p, alpha_s);
  if (res > 1e-8 * std::max(1.0, p.lambda)) {
    std::ostringstream os;
    os << "alpha_s is not a stationary point (residual " << res << ")";
    throw InvalidArgument(os.str());
  }
  const cplx Gamma = DerivedParams::from(p).Gamma;
  const double n = std::norm(alpha_s);
  const cplx a2 = alpha_s * alpha_s;
  DriftDiffusion out;
  out.mu << kI * (Gamma + 2.0 * p.chi * n), kI * p.chi * a2,
            -kI * p.chi * std::conj(a2), -kI * (std::conj(Gamma) + 2.0 * p.chi * n);
  out.diff << -kI * p.chi * a2, 0.0,
              0.0, kI * p.chi * std::conj(a2);
  return out;
}

/// Closed-form solution of the 2x2 Lyapunov equation mu C + C mu^T = D:
/// C = [D Det(mu) + (mu - Tr mu) D (mu - Tr mu)^T] / (2 Tr(mu) Det(mu)).
inline Matrix2 correlation_matrix(const Matrix2& mu, const Matrix2& diff) {
  const cplx tr = mu.trace();
  const cplx det = mu.determinant();
  const double scale = std::max(1.0, mu.cwiseAbs2().sum());
  if (std::abs(tr * det) <= 1e-12 * scale) throw InstabilityError("linearization breaks down: Tr(mu) Det(mu) ~ 0");
  const Matrix2 shifted = mu - tr * Matrix2::Identity();
  return (diff * det + shifted * diff * shifted.transpose()) / (2.0 * tr * det);
}

/// Same equation through the 4x4 Kronecker system (I (x) mu + mu (x) I) vec C = vec D.
inline Matrix2 lyapunov_solve(const Matrix2& mu, const Matrix2& diff) {
  Eigen::Matrix4cd A = Eigen::Matrix4cd::Zero();
  const Matrix2 I = Matrix2::Identity();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      A.block<2, 2>(2 * i, 2 * j) += I(i, j) * mu;
      A.block<2, 2>(2 * i, 2 * j) += mu(i, j) * I;
    }
  Eigen::Vector4cd rhs = Eigen::Map<const Eigen::Vector4cd>(diff.data());
  Eigen::Vector4cd v = A.fullPivLu().solve(rhs);
  return Eigen::Map<Matrix2>(v.data());
}

struct LinearizedObservables {
  double n_es = 0.0;
  double lambda_cap = 0.0;
  double fluct_number = 0.0;   ///< <d alpha^+ d alpha> = chi^2 n^2 / (2 Lambda)
  double n_e_corrected = 0.0;  ///< n_es + fluct_number
  double q_lin = 0.0;          ///< (n chi / Lambda)(Delta - chi n)
  double q_ratio = 0.0;        ///< un-expanded ratio before dropping higher orders
};

inline LinearizedObservables linearized_observables(const ModelParams& p, double n_es) {
  LinearizedObservables out;
  out.n_es = n_es;
  out.lambda_cap = hurwitz_lambda(p, n_es);
  if (!(out.lambda_cap > 0.0)) {
    std::ostringstream os;
    os << "classical root n=" << n_es << " is not stable (Lambda=" << out.lambda_cap << ")";
    throw InstabilityError(os.str(), out.lambda_cap);
  }
  const double chi = p.chi, L = out.lambda_cap;
  out.fluct_number = chi * chi * n_es * n_es / (2.0 * L);
  out.n_e_corrected = n_es + out.fluct_number;
  out.q_lin = n_es * chi / L * (p.delta - chi * n_es);
  // 2 Re[alpha*^2 <d alpha^2>] = -chi n^2 (2 chi n - Delta) / Lambda
  const double cross = -chi * n_es * n_es * (2.0 * chi * n_es - p.delta) / L;
  out.q_ratio = out.n_e_corrected > 0.0 ? (cross + 2.0 * n_es * out.fluct_number) / out.n_e_corrected : 0.0;
  return out;
}

struct FluctuationResult {
  Matrix2 mu;
  Matrix2 diff;
  Matrix2 corr;  ///< [[<da^2>, <da^+ da>], [<da^+ da>, <da^+^2>]]
  LinearizedObservables obs;
};

inline FluctuationResult fluctuations(const ModelParams& p, const ClassicalRoot& root) {
  FluctuationResult out;
  out.obs = linearized_observables(p, root.n_es);
  const auto dd = drift_diffusion(p, root.alpha_s);
  out.mu = dd.mu;
  out.diff = dd.diff;
  out.corr = correlation_matrix(dd.mu, dd.diff);
  return out;
}

}  // namespace rydkerr

#endif  // RYDKERR_LINEARIZED_HPP
