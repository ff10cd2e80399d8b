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

// Classical limit of the driven Kerr model:
//
//   d alpha/dt = -i lambda - i alpha (Gamma + chi |alpha|^2)
//
// Stationary points satisfy the cubic
//
//   chi^2 n^3 - 2 chi Delta n^2 + |Gamma|^2 n - lambda^2 = 0,   n = |alpha|^2,
//
// and a root is stable iff d(lambda^2)/dn = 3 chi^2 n^2 - 4 chi Delta n + |Gamma|^2 > 0.

#ifndef RYDKERR_CLASSICAL_HPP
#define RYDKERR_CLASSICAL_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "rydkerr/model.hpp"
#include "rydkerr/ode.hpp"

namespace rydkerr {

struct ClassicalRoot {
  double n_es = 0.0;
  cplx alpha_s{};
  double lambda_cap = 0.0;  ///< d(lambda^2)/dn at the root
  bool stable = false;
  bool marginal = false;  ///< lambda_cap == 0 to round-off; reported unstable
};

struct ClassicalRootSet {
  std::vector<ClassicalRoot> roots;  ///< ascending in n_es
  bool bistable = false;             ///< more than one stable root

  std::vector<ClassicalRoot> stable_roots() const {
    std::vector<ClassicalRoot> out;
    for (const auto& r : roots)
      if (r.stable) out.push_back(r);
    return out;
  }
};

/// chi^2 n^3 - 2 chi Delta n^2 + |Gamma|^2 n - lambda^2
inline double cubic_residual(const ModelParams& p, double n) {
  const double g2 = p.delta * p.delta + 0.25 * p.gamma * p.gamma;
  return ((p.chi * p.chi * n - 2.0 * p.chi * p.delta) * n + g2) * n - p.lambda * p.lambda;
}

/// Hurwitz quantity Lambda(n) = d(lambda^2)/dn.
inline double hurwitz_lambda(const ModelParams& p, double n) {
  const double g2 = p.delta * p.delta + 0.25 * p.gamma * p.gamma;
  return 3.0 * p.chi * p.chi * n * n - 4.0 * p.chi * p.delta * n + g2;
}

/// Stationary amplitude on the branch with |alpha|^2 = n.
inline cplx stationary_alpha(const ModelParams& p, double n) {
  const cplx Gamma = DerivedParams::from(p).Gamma;
  return -p.lambda / (Gamma + p.chi * n);
}

/// Discriminant of the cubic in n (positive: three distinct real roots).
inline double cubic_discriminant(const ModelParams& p) {
  const double a = p.chi * p.chi, b = -2.0 * p.chi * p.delta;
  const double c = p.delta * p.delta + 0.25 * p.gamma * p.gamma, d = -p.lambda * p.lambda;
  return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c - 27 * a * a * d * d;
}

inline ClassicalRootSet steady_roots(const ModelParams& p) {
  p.validate();
  const double a = p.chi * p.chi, b = -2.0 * p.chi * p.delta;
  const double c = p.delta * p.delta + 0.25 * p.gamma * p.gamma, d = -p.lambda * p.lambda;

  std::vector<double> cand;
  if (p.chi == 0.0) {
    cand.push_back(-d / c);
  } else {
    // companion matrix of the monic cubic n^3 + (b/a) n^2 + (c/a) n + d/a
    Eigen::Matrix3d comp = Eigen::Matrix3d::Zero();
    comp(0, 0) = -b / a;
    comp(0, 1) = -c / a;
    comp(0, 2) = -d / a;
    comp(1, 0) = 1.0;
    comp(2, 1) = 1.0;
    const Eigen::Vector3cd ev = comp.eigenvalues();
    for (int i = 0; i < 3; ++i) {
      double n = ev(i).real();
      // Newton polish; a double root converges linearly, still well inside tolerance
      for (int it = 0; it < 60; ++it) {
        const double f = cubic_residual(p, n);
        const double fp = hurwitz_lambda(p, n);
        if (fp == 0.0) break;
        const double step = f / fp;
        n -= step;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(n))) break;
      }
      const double scale = std::max(1.0, std::abs(n));
      const bool real = std::abs(ev(i).imag()) < 1e-9 * scale ||
                        std::abs(cubic_residual(p, n)) < 1e-13 * std::max(1.0, p.lambda * p.lambda);
      if (!real || n < -1e-12) continue;
      cand.push_back(std::max(n, 0.0));
    }
  }
  std::sort(cand.begin(), cand.end());
  ClassicalRootSet out;
  for (double n : cand) {
    if (!out.roots.empty() && std::abs(out.roots.back().n_es - n) < 1e-9 * std::max(1.0, n)) continue;
    ClassicalRoot r;
    r.n_es = n;
    r.alpha_s = stationary_alpha(p, n);
    r.lambda_cap = hurwitz_lambda(p, n);
    r.marginal = std::abs(r.lambda_cap) <= 1e-12 * std::max(1.0, c);
    r.stable = r.lambda_cap > 0.0 && !r.marginal;
    out.roots.push_back(r);
  }
  out.bistable = out.stable_roots().size() > 1;
  return out;
}

/// Instability interval (n_minus, n_plus) of the cubic, when it exists.
inline std::optional<std::pair<double, double>> bistable_window(const ModelParams& p) {
  const double thr = std::sqrt(3.0) * p.gamma / 2.0;
  if (p.chi == 0.0 || p.delta * p.chi < 0.0 || std::abs(p.delta) < thr) return std::nullopt;
  const double disc = std::max(p.delta * p.delta - 0.75 * p.gamma * p.gamma, 0.0);
  const double s = std::sqrt(disc);
  return std::make_pair((2.0 * p.delta - s) / (3.0 * p.chi), (2.0 * p.delta + s) / (3.0 * p.chi));
}

/// Range of lambda^2 over which three real roots exist: (lambda^2(n_plus), lambda^2(n_minus)).
inline std::optional<std::pair<double, double>> bistable_drive_window(const ModelParams& p) {
  const auto w = bistable_window(p);
  if (!w) return std::nullopt;
  auto lam2 = [&](double n) {
    ModelParams q = p;
    q.lambda = 0.0;
    return cubic_residual(q, n);
  };
  return std::make_pair(lam2(w->second), lam2(w->first));
}

struct ClassicalSample {
  double t = 0.0;
  cplx alpha{};
};

inline std::vector<ClassicalSample> classical_evolve(const ModelParams& p, cplx alpha0, double t_final,
                                                     int n_samples = 201, const OdeOptions& ode = {1e-11, 1e-13}) {
  p.validate();
  const auto times = uniform_grid(t_final, n_samples);
  const cplx Gamma = DerivedParams::from(p).Gamma;
  using State = Eigen::Matrix<cplx, 1, 1>;
  auto rhs = [&](double, const State& y) {
    const cplx a = y(0);
    State out;
    out(0) = -kI * p.lambda - kI * a * (Gamma + p.chi * std::norm(a));
    return out;
  };
  std::vector<ClassicalSample> out(times.size());
  State y0;
  y0(0) = alpha0;
  integrate_times(rhs, y0, std::span<const double>(times),
                  [&](std::size_t i, double t, const State& y) { out[i] = {t, y(0)}; }, ode);
  return out;
}

enum class SweepDirection { kUp, kDown };

struct HysteresisPoint {
  double delta = 0.0;
  double n_es = 0.0;
};

/// Follows a stable branch along the detuning grid. At each point the stable
/// root nearest the previous selection is kept; the first point starts on the
/// lowest stable root. Output is in traversal order.
inline std::vector<HysteresisPoint> hysteresis_sweep(const ModelParams& p, std::span<const double> delta_grid,
                                                     SweepDirection dir) {
  if (delta_grid.empty()) throw InvalidArgument("detuning grid is empty");
  std::vector<double> grid(delta_grid.begin(), delta_grid.end());
  if (dir == SweepDirection::kDown) std::reverse(grid.begin(), grid.end());
  std::vector<HysteresisPoint> out;
  std::optional<double> prev;
  for (double d : grid) {
    ModelParams q = p;
    q.delta = d;
    auto st = steady_roots(q).stable_roots();
    // marginal points only: fall back to every root
    if (st.empty()) st = steady_roots(q).roots;
    double pick = st.front().n_es;
    if (prev) {
      for (const auto& r : st)
        if (std::abs(r.n_es - *prev) < std::abs(pick - *prev)) pick = r.n_es;
    }
    prev = pick;
    out.push_back({d, pick});
  }
  return out;
}

}  // namespace rydkerr

#endif  // RYDKERR_CLASSICAL_HPP
