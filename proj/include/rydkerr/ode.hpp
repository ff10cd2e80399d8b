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

// Embedded Dormand-Prince 5(4) integrator with FSAL and a PI step
// controller. State is any Eigen dense object (real or complex); the error
// estimate uses the max norm of the scaled componentwise error.

#ifndef RYDKERR_ODE_HPP
#define RYDKERR_ODE_HPP

#include <algorithm>
#include <cmath>
#include <span>
#include <sstream>
#include <vector>

#include "rydkerr/error.hpp"

namespace rydkerr {

struct OdeOptions {
  double rtol = 1e-9;
  double atol = 1e-9;
  double h_initial = 0.0;   ///< 0 picks a step from the derivative scale
  double h_min = 1e-13;     ///< relative to the span of the integration
  long max_steps = 50'000'000;
};

struct OdeStats {
  long accepted = 0;
  long rejected = 0;
  long rhs_calls = 0;
};

namespace detail {

// Butcher tableau of the Dormand-Prince pair.
struct DP54 {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  // b - b_hat
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
};

template <class State>
double scaled_error(const State& err, const State& y0, const State& y1, double atol, double rtol) {
  const auto scale = (atol + rtol * y0.cwiseAbs().cwiseMax(y1.cwiseAbs()).array()).eval();
  return (err.cwiseAbs().array() / scale).maxCoeff();
}

}  // namespace detail

/// Integrates dy/dt = f(t, y) and calls observe(index, t, y) at every entry of
/// `times` (strictly increasing, times[0] is the initial time). Steps are
/// clipped so each sample time is hit exactly. Throws IntegratorError with the
/// failing time when the step underflows or the step budget is exhausted.
template <class State, class Rhs, class Observer>
OdeStats integrate_times(Rhs&& f, State y, std::span<const double> times, Observer&& observe,
                         const OdeOptions& opt = {}) {
  using T = detail::DP54;
  OdeStats stats;
  if (times.empty()) return stats;
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1])) throw InvalidArgument("sample times must be strictly increasing");

  double t = times.front();
  const double span = times.back() - t;
  observe(std::size_t{0}, t, static_cast<const State&>(y));
  if (times.size() == 1) return stats;

  State k1 = f(t, y);
  ++stats.rhs_calls;
  double h = opt.h_initial;
  if (h <= 0.0) {
    const double d0 = y.cwiseAbs().maxCoeff();
    const double d1 = k1.cwiseAbs().maxCoeff();
    h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h = std::min(h, span);
  }
  const double h_floor = opt.h_min * std::max(1.0, span);
  double err_prev = 1e-4;

  for (std::size_t next = 1; next < times.size(); ++next) {
    const double target = times[next];
    while (t < target) {
      if (stats.accepted + stats.rejected >= opt.max_steps) {
        std::ostringstream os;
        os << "integrator step budget exhausted at t=" << t;
        throw IntegratorError(os.str(), t);
      }
      bool last = false;
      double hs = h;
      if (t + hs >= target) {
        hs = target - t;
        last = true;
      }
      const State k2 = f(t + T::c2 * hs, (y + hs * T::a21 * k1).eval());
      const State k3 = f(t + T::c3 * hs, (y + hs * (T::a31 * k1 + T::a32 * k2)).eval());
      const State k4 = f(t + T::c4 * hs, (y + hs * (T::a41 * k1 + T::a42 * k2 + T::a43 * k3)).eval());
      const State k5 = f(t + T::c5 * hs,
                         (y + hs * (T::a51 * k1 + T::a52 * k2 + T::a53 * k3 + T::a54 * k4)).eval());
      const State k6 = f(t + hs, (y + hs * (T::a61 * k1 + T::a62 * k2 + T::a63 * k3 + T::a64 * k4 +
                                            T::a65 * k5)).eval());
      State y1 = y + hs * (T::b1 * k1 + T::b3 * k3 + T::b4 * k4 + T::b5 * k5 + T::b6 * k6);
      const State k7 = f(t + hs, y1);
      stats.rhs_calls += 6;
      const State err =
          hs * (T::e1 * k1 + T::e3 * k3 + T::e4 * k4 + T::e5 * k5 + T::e6 * k6 + T::e7 * k7);
      const double e = detail::scaled_error(err, y, y1, opt.atol, opt.rtol);

      if (std::isfinite(e) && e <= 1.0) {
        t = last ? target : t + hs;
        y = std::move(y1);
        k1 = k7;
        ++stats.accepted;
        // PI controller (Hairer & Wanner, beta = 0.04)
        const double en = std::max(e, 1e-10);
        double fac = 0.9 * std::pow(en, -0.7 / 5.0) * std::pow(err_prev, 0.04);
        fac = std::clamp(fac, 0.2, 5.0);
        err_prev = en;
        // a step clipped to hit a sample time keeps the controller's proposal
        if (hs == h)
          h = hs * fac;
        else if (fac < 1.0)
          h = std::min(h, hs * fac);
      } else {
        ++stats.rejected;
        const double fac = std::isfinite(e) ? std::max(0.2, 0.9 * std::pow(e, -0.2)) : 0.1;
        h = hs * fac;
        if (h < h_floor) {
          std::ostringstream os;
          os << "integrator step fell below minimum at t=" << t << " (error ratio " << e << ")";
          throw IntegratorError(os.str(), t);
        }
      }
    }
    observe(next, t, static_cast<const State&>(y));
  }
  return stats;
}

/// Uniform grid of n points on [0, t_final].
inline std::vector<double> uniform_grid(double t_final, int n) {
  if (n < 2) throw InvalidArgument("sample count must be >= 2");
  if (!(t_final > 0.0)) throw InvalidArgument("final time must be > 0");
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = t_final * double(i) / double(n - 1);
  out.back() = t_final;
  return out;
}

}  // namespace rydkerr

#endif  // RYDKERR_ODE_HPP
