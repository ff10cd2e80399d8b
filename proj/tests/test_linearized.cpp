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


#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "rydkerr/bosonic.hpp"
#include "rydkerr/classical.hpp"
#include "rydkerr/linearized.hpp"

namespace rydkerr {
namespace {

ModelParams params(double delta, double lambda, double chi, double gamma = 1.0) {
  ModelParams p;
  p.delta = delta;
  p.lambda = lambda;
  p.chi = chi;
  p.gamma = gamma;
  return p;
}

double max_abs(const Matrix2& m) { return m.cwiseAbs().maxCoeff(); }

TEST(DriftDiffusion, LinearCavity) {
  const auto p = params(1.2, 0.6, 0.0);
  const cplx gamma_c = DerivedParams::from(p).Gamma;
  const auto dd = drift_diffusion(p, stationary_alpha(p, 0.6 * 0.6 / std::norm(gamma_c)));
  Matrix2 mu;
  mu << kI * gamma_c, 0.0, 0.0, -kI * std::conj(gamma_c);
  EXPECT_LT(max_abs(dd.mu - mu), 1e-14);
  EXPECT_EQ(max_abs(dd.diff), 0.0);
  EXPECT_LT(max_abs(correlation_matrix(dd.mu, dd.diff)), 1e-15);
}

TEST(DriftDiffusion, VacuumIsStable) {
  const auto p = params(2.0, 0.0, 10.0, 1.0);
  const auto dd = drift_diffusion(p, 0.0);
  const Eigen::Vector2cd ev = (-dd.mu).eigenvalues();
  for (int i = 0; i < 2; ++i) EXPECT_NEAR(ev(i).real(), -0.5, 1e-14);
}

TEST(DriftDiffusion, RejectsNonStationaryAmplitude) {
  EXPECT_THROW(drift_diffusion(params(0.0, 0.6, 10.0), cplx(0.3, 0.1)), InvalidArgument);
}

TEST(DriftDiffusion, TraceAndDeterminantAreGammaAndHurwitzLambda) {
  for (double delta : {-4.0, 0.0, 5.0}) {
    const auto p = params(delta, 0.6, 10.0);
    for (const auto& r : steady_roots(p).roots) {
      const auto dd = drift_diffusion(p, r.alpha_s);
      EXPECT_NEAR(std::abs(dd.mu.trace() - cplx(p.gamma)), 0.0, 1e-12);
      EXPECT_NEAR(std::abs(dd.mu.determinant() - cplx(r.lambda_cap)), 0.0, 1e-10 * std::max(1.0, r.lambda_cap));
    }
  }
}

TEST(DriftDiffusion, StabilityFlagMatchesDriftEigenvalues) {
  for (double delta : {-5.0, 0.0, 2.0, 5.0, 7.0})
    for (double lambda : {0.3, 0.6, 1.0}) {
      const auto p = params(delta, lambda, 10.0);
      for (const auto& r : steady_roots(p).roots) {
        const Eigen::Vector2cd ev = (-drift_diffusion(p, r.alpha_s).mu).eigenvalues();
        const bool negative = ev(0).real() < 0.0 && ev(1).real() < 0.0;
        EXPECT_EQ(negative, r.stable) << delta << " " << lambda << " n=" << r.n_es;
      }
    }
}

TEST(CorrelationMatrix, ReferencePointAtPairResonance) {
  const auto p = params(5.0, 0.6, 10.0);
  const auto root = steady_roots(p).roots.front();
  const auto f = fluctuations(p, root);
  EXPECT_NEAR(std::abs(f.corr(0, 0) - cplx(0.01528351, -0.00492232)), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(f.corr(0, 1) - cplx(0.0005150994)), 0.0, 1e-9);
  EXPECT_NEAR(f.corr(0, 1).real(), f.obs.fluct_number, 1e-12);
}

TEST(CorrelationMatrix, EntriesMatchExplicitExpressions) {
  for (double delta : {-3.0, 0.0, 5.0})
    for (double lambda : {0.3, 0.6, 1.0}) {
      const auto p = params(delta, lambda, 10.0);
      const cplx gamma_c = DerivedParams::from(p).Gamma;
      for (const auto& r : steady_roots(p).stable_roots()) {
        const auto f = fluctuations(p, r);
        const double L = r.lambda_cap, n = r.n_es;
        const cplx a2 = r.alpha_s * r.alpha_s;
        const cplx c11 = -10.0 * a2 * (std::conj(gamma_c) + 20.0 * n) / (2.0 * L);
        EXPECT_LT(std::abs(f.corr(0, 0) - c11), 1e-12);
        EXPECT_LT(std::abs(f.corr(1, 1) - std::conj(c11)), 1e-12);
        EXPECT_LT(std::abs(f.corr(0, 1) - 100.0 * n * n / (2.0 * L)), 1e-12);
        EXPECT_LT(std::abs(f.corr(0, 1) - f.corr(1, 0)), 1e-14);
      }
    }
}

TEST(CorrelationMatrix, ClosedFormMatchesLyapunovAtRandomStablePoints) {
  std::mt19937 rng(2026);
  std::uniform_real_distribution<double> ud(-8.0, 8.0), ul(0.05, 1.5), uc(1.0, 20.0);
  int checked = 0;
  while (checked < 20) {
    const auto p = params(ud(rng), ul(rng), uc(rng));
    for (const auto& r : steady_roots(p).stable_roots()) {
      const auto dd = drift_diffusion(p, r.alpha_s);
      const Matrix2 c = correlation_matrix(dd.mu, dd.diff);
      const Matrix2 l = lyapunov_solve(dd.mu, dd.diff);
      EXPECT_LT(max_abs(c - l), 1e-10);
      EXPECT_LT(max_abs(dd.mu * c + c * dd.mu.transpose() - dd.diff), 1e-10);
      ++checked;
    }
  }
}

TEST(CorrelationMatrix, MarginalPointRaises) {
  Matrix2 mu;
  mu << 1.0, 1.0, 1.0, 1.0;  // Det = 0
  EXPECT_THROW(correlation_matrix(mu, Matrix2::Identity()), InstabilityError);
}

TEST(LinearizedObservables, ResonanceIsSubPoissonian) {
  for (double lambda : {0.1, 0.3, 0.6, 1.0}) {
    const auto p = params(0.0, lambda, 10.0);
    const double n = steady_roots(p).roots.front().n_es;
    const auto l = linearized_observables(p, n);
    EXPECT_NEAR(l.q_lin, -100.0 * n * n / l.lambda_cap, 1e-14);
    EXPECT_LT(l.q_lin, 0.0);
  }
}

TEST(LinearizedObservables, SignFollowsDetuningExcess) {
  for (double delta : {-6.0, -1.0, 1.0, 3.0, 5.0, 8.0})
    for (double lambda : {0.2, 0.6, 1.2}) {
      const auto p = params(delta, lambda, 10.0);
      for (const auto& r : steady_roots(p).stable_roots()) {
        const auto l = linearized_observables(p, r.n_es);
        const double excess = delta - 10.0 * r.n_es;
        if (std::abs(excess) > 1e-12) EXPECT_EQ(l.q_lin > 0.0, excess > 0.0);
        EXPECT_GE(l.n_e_corrected, l.n_es);
      }
    }
}

TEST(LinearizedObservables, EnhancementVanishesOnlyWithoutInteraction) {
  const auto p = params(1.0, 0.6, 0.0);
  const auto l = linearized_observables(p, steady_roots(p).roots.front().n_es);
  EXPECT_EQ(l.n_e_corrected, l.n_es);
  const auto q = params(1.0, 0.6, 10.0);
  const auto m = linearized_observables(q, steady_roots(q).roots.front().n_es);
  EXPECT_GT(m.n_e_corrected, m.n_es);
}

TEST(LinearizedObservables, WeakDriveLimit) {
  double prev_q = INFINITY;
  for (double lambda : {1e-1, 1e-2, 1e-3}) {
    const auto p = params(2.0, lambda, 10.0);
    const auto l = linearized_observables(p, steady_roots(p).roots.front().n_es);
    EXPECT_LT(std::abs(l.q_lin), prev_q);
    prev_q = std::abs(l.q_lin);
    EXPECT_NEAR(l.n_e_corrected / l.n_es, 1.0, 100.0 * lambda * lambda);
  }
  EXPECT_LT(prev_q, 1e-4);
}

TEST(LinearizedObservables, UnstableRootRaises) {
  const auto p = params(5.0, 0.6, 10.0);
  EXPECT_THROW(linearized_observables(p, steady_roots(p).roots[1].n_es), InstabilityError);
}

}  // namespace
}  // namespace rydkerr
