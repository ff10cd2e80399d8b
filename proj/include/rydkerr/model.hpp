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

// Model definitions for the bosonized Rydberg ensemble. The Hamiltonian and
// Lindblad generator are:
//
//   H_b = -Delta n + (chi/2) b^+ b^+ b b + lambda (b + b^+)
//   drho/dt = -i[H_b, rho] + (gamma/2)(2 b rho b^+ - {b^+ b, rho})
//
// All quantities are in units of gamma unless a caller picks otherwise.

#ifndef RYDKERR_MODEL_HPP
#define RYDKERR_MODEL_HPP

#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "rydkerr/error.hpp"

namespace rydkerr {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr cplx kI{0.0, 1.0};
inline constexpr int kDefaultFockDim = 15;

struct ModelParams {
  double delta = 0.0;   ///< laser detuning
  double lambda = 0.0;  ///< collective drive sqrt(N) Omega / 2
  double chi = 0.0;     ///< all-to-all pair interaction
  double gamma = 1.0;   ///< Rydberg decay rate
  int n_atoms = 6;      ///< only the spin model and Omega need it

  /// Single-atom Rabi frequency recovered from the collective drive.
  double omega() const { return 2.0 * lambda / std::sqrt(double(n_atoms)); }

  void validate() const {
    if (!(gamma > 0.0)) throw InvalidArgument("gamma must be > 0");
    if (n_atoms < 1) throw InvalidArgument("n_atoms must be >= 1");
    if (!(lambda >= 0.0)) throw InvalidArgument("lambda must be >= 0");
    if (!std::isfinite(delta) || !std::isfinite(chi))
      throw InvalidArgument("delta and chi must be finite");
  }
};

/// Complex combinations that recur in the classical and generalized-P
/// descriptions. z, c, d are meaningless for chi == 0 and left at zero.
struct DerivedParams {
  cplx Gamma;  ///< -(Delta + i gamma / 2)
  cplx z;      ///< 2 lambda / chi
  cplx c;      ///< 2 Gamma / chi
  cplx d;      ///< conj(c)

  static DerivedParams from(const ModelParams& p) {
    DerivedParams out;
    out.Gamma = -cplx(p.delta, 0.5 * p.gamma);
    if (p.chi != 0.0) {
      out.z = 2.0 * p.lambda / p.chi;
      out.c = 2.0 * out.Gamma / p.chi;
      out.d = std::conj(out.c);
    }
    return out;
  }

  double gamma_abs2() const { return std::norm(Gamma); }
};

struct FockOperators {
  int dim = 0;
  Matrix annihilate;
  Matrix number;
  Matrix hamiltonian;
};

inline FockOperators build_fock_operators(const ModelParams& p, int dim) {
  if (dim < 2) throw InvalidArgument("Fock dimension must be >= 2, got " + std::to_string(dim));
  FockOperators ops;
  ops.dim = dim;
  ops.annihilate = Matrix::Zero(dim, dim);
  ops.number = Matrix::Zero(dim, dim);
  ops.hamiltonian = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) ops.annihilate(n - 1, n) = std::sqrt(double(n));
  for (int n = 0; n < dim; ++n) {
    ops.number(n, n) = double(n);
    // b^+ b^+ b b = n (n - 1) on Fock states
    ops.hamiltonian(n, n) = -p.delta * n + 0.5 * p.chi * n * (n - 1.0);
  }
  ops.hamiltonian += p.lambda * (ops.annihilate + ops.annihilate.adjoint());
  return ops;
}

/// Hermitian, unit-trace state on a truncated Fock ladder or spin register.
/// Construction does not validate; call check() when the source is untrusted.
class DensityMatrix {
 public:
  DensityMatrix() = default;
  explicit DensityMatrix(Matrix m) : m_(std::move(m)) {}

  int dim() const { return int(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  cplx operator()(int i, int j) const { return m_(i, j); }

  struct Diagnostics {
    double hermiticity = 0.0;  ///< max |rho - rho^+|
    double trace_error = 0.0;  ///< |Tr rho - 1|
    double min_eigenvalue = 0.0;
  };

  Diagnostics diagnostics() const {
    Diagnostics d;
    d.hermiticity = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    d.trace_error = std::abs(m_.trace() - 1.0);
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m_ + m_.adjoint()), Eigen::EigenvaluesOnly);
    d.min_eigenvalue = es.eigenvalues().minCoeff();
    return d;
  }

  /// Throws InvalidArgument unless the invariants hold to the given tolerances.
  void check(double herm_tol = 1e-12, double trace_tol = 1e-9, double pos_tol = 1e-8) const {
    if (m_.rows() != m_.cols() || m_.rows() < 1) throw InvalidArgument("density matrix must be square and nonempty");
    const auto d = diagnostics();
    if (d.hermiticity > herm_tol) throw InvalidArgument("density matrix is not Hermitian");
    if (d.trace_error > trace_tol) throw InvalidArgument("density matrix trace differs from 1");
    if (d.min_eigenvalue < -pos_tol) throw InvalidArgument("density matrix is not positive");
  }

  static DensityMatrix fock(int dim, int n) {
    if (n < 0 || n >= dim) throw InvalidArgument("Fock level outside truncation");
    Matrix m = Matrix::Zero(dim, dim);
    m(n, n) = 1.0;
    return DensityMatrix(std::move(m));
  }

  static DensityMatrix vacuum(int dim) { return fock(dim, 0); }

  /// Coherent state |alpha>, renormalized on the truncated ladder.
  static DensityMatrix coherent(int dim, cplx alpha) {
    Vector psi(dim);
    psi(0) = 1.0;
    for (int n = 1; n < dim; ++n) psi(n) = psi(n - 1) * alpha / std::sqrt(double(n));
    psi.normalize();
    return DensityMatrix(psi * psi.adjoint());
  }

  /// Hermitian part with unit trace; used to strip round-off after solves.
  static DensityMatrix normalized(const Matrix& m) {
    Matrix h = 0.5 * (m + m.adjoint());
    h /= h.trace().real();
    return DensityMatrix(std::move(h));
  }

 private:
  Matrix m_;
};

/// Right-hand side of the bosonic master equation.
inline Matrix lindblad_rhs(const ModelParams& p, const FockOperators& ops, const Matrix& rho) {
  if (rho.rows() != ops.dim || rho.cols() != ops.dim)
    throw InvalidArgument("density matrix dimension does not match operators");
  const Matrix& b = ops.annihilate;
  const Matrix& H = ops.hamiltonian;
  Matrix out = -kI * (H * rho - rho * H);
  // {n, rho} with n diagonal
  for (int j = 0; j < ops.dim; ++j)
    for (int i = 0; i < ops.dim; ++i) out(i, j) -= 0.5 * p.gamma * double(i + j) * rho(i, j);
  out.noalias() += p.gamma * (b * rho * b.adjoint());
  return out;
}

inline Matrix lindblad_rhs(const ModelParams& p, const FockOperators& ops, const DensityMatrix& rho) {
  return lindblad_rhs(p, ops, rho.matrix());
}

/// Kronecker product of two dense complex matrices.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Vectorized generator acting on column-stacked rho: vec(A X B) = (B^T (x) A) vec(X).
inline Matrix liouvillian(const ModelParams& p, const FockOperators& ops) {
  const int D = ops.dim;
  const Matrix I = Matrix::Identity(D, D);
  const Matrix& H = ops.hamiltonian;
  const Matrix& b = ops.annihilate;
  const Matrix n = b.adjoint() * b;
  Matrix L = -kI * (kron(I, H) - kron(H.transpose(), I));
  L += 0.5 * p.gamma * (2.0 * kron(b.conjugate(), b) - kron(I, n) - kron(n.transpose(), I));
  return L;
}

}  // namespace rydkerr

#endif  // RYDKERR_MODEL_HPP
