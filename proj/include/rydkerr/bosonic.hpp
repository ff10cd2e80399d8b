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

#ifndef RYDKERR_BOSONIC_HPP
#define RYDKERR_BOSONIC_HPP

#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "rydkerr/model.hpp"
#include "rydkerr/ode.hpp"

namespace rydkerr {

/// Counting statistics of one state. Q is reported as 0 when n_e < 1e-14.
struct ObservableSet {
  double n_e = 0.0;
  double mandel_q = 0.0;
  cplx b_mean{};
  double p_double = 0.0;
};

inline constexpr double kZeroPopulation = 1e-14;

inline double mandel_q(double mean, double second_moment) {
  if (mean < kZeroPopulation) return 0.0;
  return (second_moment - mean * mean) / mean - 1.0;
}

inline ObservableSet observables(const Matrix& rho) {
  ObservableSet out;
  const int D = int(rho.rows());
  double n1 = 0.0, n2 = 0.0;
  for (int n = 0; n < D; ++n) {
    const double p = rho(n, n).real();
    n1 += n * p;
    n2 += double(n) * n * p;
  }
  cplx b{};
  // Tr(rho b) = sum_n sqrt(n) rho(n, n-1)
  for (int n = 1; n < D; ++n) b += std::sqrt(double(n)) * rho(n, n - 1);
  out.n_e = std::max(n1, 0.0);
  out.mandel_q = mandel_q(n1, n2);
  out.b_mean = b;
  out.p_double = D > 2 ? std::clamp(rho(2, 2).real(), 0.0, 1.0) : 0.0;
  return out;
}

inline ObservableSet observables(const DensityMatrix& rho) { return observables(rho.matrix()); }

struct Trajectory {
  std::vector<double> times;
  std::vector<ObservableSet> records;
  DensityMatrix final_state;
};

struct EvolveOptions {
  OdeOptions ode{};
};

/// Integrates the bosonic master equation from rho0 and samples the
/// observables on a uniform grid of n_samples points over [0, t_final].
inline Trajectory evolve(const ModelParams& p, const DensityMatrix& rho0, double t_final, int n_samples,
                         const EvolveOptions& opt = {}) {
  p.validate();
  const auto times = uniform_grid(t_final, n_samples);
  const FockOperators ops = build_fock_operators(p, rho0.dim());
  Trajectory traj;
  traj.times = times;
  traj.records.resize(times.size());
  Matrix last;
  auto rhs = [&](double, const Matrix& rho) { return lindblad_rhs(p, ops, rho); };
  integrate_times(
      rhs, rho0.matrix(), std::span<const double>(times),
      [&](std::size_t i, double, const Matrix& rho) {
        traj.records[i] = observables(rho);
        if (i + 1 == times.size()) last = rho;
      },
      opt.ode);
  traj.final_state = DensityMatrix(std::move(last));
  return traj;
}

/// Largest truncation for which the null-space uniqueness test (a full SVD of
/// the D^2 x D^2 generator) is run.
inline constexpr int kUniquenessCheckMaxDim = 30;

enum class SteadyStrategy { kAuto, kLinearSolve, kLongTime };

struct SteadyOptions {
  int dim = kDefaultFockDim;
  SteadyStrategy strategy = SteadyStrategy::kAuto;
  double residual_tol = 1e-10;
  bool check_uniqueness = true;  ///< skipped above kUniquenessCheckMaxDim
  double long_time = 50.0;      ///< in units of 1/gamma
  double long_time_max = 1000.0;
  OdeOptions ode{1e-12, 1e-14};
};

struct SteadyResult {
  DensityMatrix rho;
  double residual = 0.0;
  SteadyStrategy used = SteadyStrategy::kLinearSolve;
  double second_singular_value = -1.0;  ///< < 0 when not computed
};

inline double generator_residual(const ModelParams& p, const FockOperators& ops, const Matrix& rho) {
  return lindblad_rhs(p, ops, rho).cwiseAbs().maxCoeff();
}

namespace detail {

inline std::optional<SteadyResult> steady_linear(const ModelParams& p, const FockOperators& ops,
                                                 const SteadyOptions& opt) {
  const int D = ops.dim;
  Matrix L = liouvillian(p, ops);
  SteadyResult res;
  if (opt.check_uniqueness && D <= kUniquenessCheckMaxDim) {
    Eigen::BDCSVD<Matrix> svd(L);
    const auto& s = svd.singularValues();
    res.second_singular_value = s(s.size() - 2);
    if (res.second_singular_value <= 1e-6 * p.gamma) return std::nullopt;
  }
  // the generator is trace-annihilating, so one row is redundant; replace it
  // by the trace functional
  Vector rhs = Vector::Zero(D * D);
  L.row(0).setZero();
  for (int k = 0; k < D; ++k) L(0, k * (D + 1)) = 1.0;
  rhs(0) = 1.0;
  Vector v = L.partialPivLu().solve(rhs);
  if (!v.allFinite()) return std::nullopt;
  Matrix rho = Eigen::Map<Matrix>(v.data(), D, D);
  res.rho = DensityMatrix::normalized(rho);
  res.residual = generator_residual(p, ops, res.rho.matrix());
  res.used = SteadyStrategy::kLinearSolve;
  return res;
}

inline SteadyResult steady_long_time(const ModelParams& p, const FockOperators& ops, const SteadyOptions& opt) {
  Matrix rho = DensityMatrix::vacuum(ops.dim).matrix();
  auto rhs = [&](double, const Matrix& r) { return lindblad_rhs(p, ops, r); };
  double t = 0.0;
  double chunk = opt.long_time / p.gamma;
  SteadyResult res;
  res.used = SteadyStrategy::kLongTime;
  while (true) {
    const double ts[2] = {t, t + chunk};
    integrate_times(rhs, rho, std::span<const double>(ts, 2),
                    [&](std::size_t i, double, const Matrix& r) {
                      if (i == 1) rho = r;
                    },
                    opt.ode);
    t += chunk;
    rho = DensityMatrix::normalized(rho).matrix();
    res.residual = generator_residual(p, ops, rho);
    if (res.residual < opt.residual_tol || t >= opt.long_time_max / p.gamma) break;
  }
  res.rho = DensityMatrix(rho);
  return res;
}

}  // namespace detail

/// Stationary state of the bosonic master equation at a fixed truncation.
/// The null vector of the vectorized generator is tried first; long-time
/// integration is the fallback. Throws NoConvergence with the best residual
/// when neither meets residual_tol.
inline SteadyResult steady_state_result(const ModelParams& p, const SteadyOptions& opt = {}) {
  p.validate();
  const FockOperators ops = build_fock_operators(p, opt.dim);
  double best = INFINITY;
  if (opt.strategy != SteadyStrategy::kLongTime) {
    if (auto r = detail::steady_linear(p, ops, opt)) {
      if (r->residual < opt.residual_tol) return *r;
      best = r->residual;
    }
    if (opt.strategy == SteadyStrategy::kLinearSolve) {
      std::ostringstream os;
      os << "stationary linear solve failed (residual " << best << ")";
      throw NoConvergence(os.str(), best);
    }
  }
  SteadyResult r = detail::steady_long_time(p, ops, opt);
  if (r.residual < opt.residual_tol) return r;
  best = std::min(best, r.residual);
  std::ostringstream os;
  os << "no stationary state found (best residual " << best << ")";
  throw NoConvergence(os.str(), best);
}

inline DensityMatrix steady_state(const ModelParams& p, const SteadyOptions& opt = {}) {
  return steady_state_result(p, opt).rho;
}

struct AdaptiveSteadyOptions {
  int start_dim = kDefaultFockDim;
  int step = 5;
  int max_dim = 40;
  double top_population_tol = 1e-10;
  double n_e_change_tol = 1e-8;
  SteadyOptions solve{};
};

/// Grows the truncation until the top two levels hold < 1e-10 and n_e moves
/// by < 1e-8 between consecutive truncations; returns the larger one.
inline SteadyResult steady_state_adaptive(const ModelParams& p, const AdaptiveSteadyOptions& opt = {}) {
  SteadyOptions so = opt.solve;
  so.dim = opt.start_dim;
  SteadyResult prev = steady_state_result(p, so);
  while (true) {
    const int D = so.dim;
    const double top = prev.rho(D - 1, D - 1).real() + prev.rho(D - 2, D - 2).real();
    if (so.dim + opt.step > opt.max_dim) {
      std::ostringstream os;
      os << "Fock truncation did not converge below dimension " << opt.max_dim;
      throw NoConvergence(os.str(), top);
    }
    so.dim += opt.step;
    SteadyResult next = steady_state_result(p, so);
    const double change = std::abs(observables(next.rho).n_e - observables(prev.rho).n_e);
    const int Dn = so.dim;
    const double top_next = next.rho(Dn - 1, Dn - 1).real() + next.rho(Dn - 2, Dn - 2).real();
    if (change < opt.n_e_change_tol && top_next < opt.top_population_tol) return next;
    prev = std::move(next);
  }
}

}  // namespace rydkerr

#endif  // RYDKERR_BOSONIC_HPP
