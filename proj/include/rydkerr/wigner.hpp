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

// Wigner function of a truncated Fock-space state in the displaced-parity
// form
//
//   W(x, p) = (1/pi) Tr[rho D(alpha) P D^+(alpha)],   alpha = (x + i p) / sqrt(2),
//
// with quadratures b = (x + i p) / sqrt(2), so the vacuum is exp(-x^2 - p^2)/pi
// and the map integrates to one over dx dp. Matrix elements of D(alpha) P D^+(alpha)
// = D(2 alpha) P follow from associated Laguerre polynomials.

#ifndef RYDKERR_WIGNER_HPP
#define RYDKERR_WIGNER_HPP

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include <Eigen/Dense>

#include "rydkerr/model.hpp"

namespace rydkerr {

inline constexpr double kWignerTruncationTol = 1e-8;

struct WignerMap {
  std::vector<double> x_grid;
  std::vector<double> p_grid;
  Eigen::MatrixXd values;  ///< values(i, j) = W(x_grid[i], p_grid[j])

  double dx() const { return x_grid.size() > 1 ? x_grid[1] - x_grid[0] : 0.0; }
  double dp() const { return p_grid.size() > 1 ? p_grid[1] - p_grid[0] : 0.0; }
  double integral() const { return values.sum() * dx() * dp(); }
  double min() const { return values.minCoeff(); }
  double max() const { return values.maxCoeff(); }
};

/// lo, lo + step, ... up to hi inclusive (to round-off).
inline std::vector<double> uniform_axis(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi > lo)) throw InvalidArgument("axis needs hi > lo and step > 0");
  const long n = std::lround(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> out(n);
  for (long i = 0; i < n; ++i) out[i] = lo + step * double(i);
  return out;
}

namespace detail {

inline void check_uniform(const std::vector<double>& g, const char* name) {
  if (g.size() < 2) throw InvalidArgument(std::string(name) + " grid needs at least two points");
  const double h = g[1] - g[0];
  if (!(h > 0.0)) throw InvalidArgument(std::string(name) + " grid must be increasing");
  for (std::size_t i = 2; i < g.size(); ++i)
    if (std::abs((g[i] - g[i - 1]) - h) > 1e-9 * std::max(1.0, std::abs(h)))
      throw InvalidArgument(std::string(name) + " grid is not uniform");
}

/// W at one phase-space point; rho is assumed Hermitian.
inline double wigner_point(const Matrix& rho, double x, double p, std::vector<double>& lag) {
  const int D = int(rho.rows());
  const cplx alpha = cplx(x, p) / std::numbers::sqrt2;
  const cplx two_alpha = 2.0 * alpha;
  const double y = 4.0 * std::norm(alpha);
  const double envelope = std::exp(-0.5 * y);
  double acc = 0.0;
  // k = m - n >= 0; O(n + k, n) = (-1)^n sqrt(n!/(n+k)!) (2 alpha)^k e^{-y/2} L_n^k(y)
  cplx pow_k = 1.0;
  for (int k = 0; k < D; ++k) {
    const int nmax = D - 1 - k;
    lag.assign(nmax + 1, 0.0);
    lag[0] = 1.0;
    if (nmax >= 1) lag[1] = 1.0 + k - y;
    for (int n = 1; n < nmax; ++n)
      lag[n + 1] = ((2.0 * n + 1.0 + k - y) * lag[n] - (n + k) * lag[n - 1]) / (n + 1.0);
    double ratio = 1.0;  // sqrt(n! / (n+k)!)
    for (int i = 1; i <= k; ++i) ratio /= std::sqrt(double(i));
    for (int n = 0; n <= nmax; ++n) {
      if (n > 0) ratio *= std::sqrt(double(n) / double(n + k));
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      const cplx elem = sign * ratio * pow_k * lag[n];
      // contributes rho(n, n+k) * O(n+k, n) and its conjugate partner
      const cplx term = rho(n, n + k) * elem;
      acc += (k == 0) ? term.real() : 2.0 * term.real();
    }
    pow_k *= two_alpha;
  }
  return acc * envelope / std::numbers::pi;
}

}  // namespace detail

inline WignerMap wigner(const DensityMatrix& rho, std::vector<double> x_grid, std::vector<double> p_grid) {
  detail::check_uniform(x_grid, "x");
  detail::check_uniform(p_grid, "p");
  const int D = rho.dim();
  const double top = rho(D - 1, D - 1).real();
  if (D > 1 && top > kWignerTruncationTol) {
    std::ostringstream os;
    os << "Fock truncation too small for Wigner map: top-level population " << top;
    throw TruncationError(os.str(), top);
  }
  const Matrix h = 0.5 * (rho.matrix() + rho.matrix().adjoint());
  WignerMap map;
  map.x_grid = std::move(x_grid);
  map.p_grid = std::move(p_grid);
  map.values.resize(map.x_grid.size(), map.p_grid.size());
  std::vector<double> lag;
  for (std::size_t i = 0; i < map.x_grid.size(); ++i)
    for (std::size_t j = 0; j < map.p_grid.size(); ++j)
      map.values(i, j) = detail::wigner_point(h, map.x_grid[i], map.p_grid[j], lag);
  return map;
}

/// Default phase-space window: +-5 in both quadratures at step 0.05.
inline WignerMap wigner(const DensityMatrix& rho) {
  return wigner(rho, uniform_axis(-5.0, 5.0, 0.05), uniform_axis(-5.0, 5.0, 0.05));
}

inline double negativity_volume(const WignerMap& map) {
  return (-map.values.array()).max(0.0).sum() * map.dx() * map.dp();
}

/// <x|rho|x> from harmonic-oscillator eigenfunctions (Hermite recursion).
inline double position_density(const DensityMatrix& rho, double x) {
  const int D = rho.dim();
  Eigen::VectorXd psi(D);
  psi(0) = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  if (D > 1) psi(1) = std::numbers::sqrt2 * x * psi(0);
  for (int n = 1; n + 1 < D; ++n)
    psi(n + 1) = std::sqrt(2.0 / (n + 1)) * x * psi(n) - std::sqrt(double(n) / (n + 1)) * psi(n - 1);
  return (psi.transpose().cast<cplx>() * rho.matrix() * psi.cast<cplx>()).value().real();
}

}  // namespace rydkerr

#endif  // RYDKERR_WIGNER_HPP
