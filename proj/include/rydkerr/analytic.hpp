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

// Exact steady state of the driven Kerr model from its generalized-P
// potential solution. Normally ordered moments reduce to ratios of 0F2
// series with z = 2 lambda / chi, c = 2 Gamma / chi, d = conj(c):
//
//   <b^+^i b^j> = (-z)^(i+j) / [(c)_j (d)_i] * 0F2(c+j, d+i; 2z^2) / 0F2(c, d; 2z^2)
//
// where (x)_k is the rising factorial. The (-1)^(i+j) makes the moments
// those of H = ... + lambda (b + b^+); odd moments carry the opposite sign
// when the bare z^(i+j) form is used.

#ifndef RYDKERR_ANALYTIC_HPP
#define RYDKERR_ANALYTIC_HPP

#include <cmath>
#include <sstream>

#include "rydkerr/error.hpp"
#include "rydkerr/model.hpp"

namespace rydkerr {

inline constexpr double kPoleGuard = 1e-9;
inline constexpr long kSeriesTermCap = 100000;

namespace detail {

/// Neumaier-compensated complex accumulator.
struct CompensatedSum {
  double re = 0.0, im = 0.0, cre = 0.0, cim = 0.0;

  static void add1(double& s, double& comp, double v) {
    const double t = s + v;
    if (std::abs(s) >= std::abs(v))
      comp += (s - t) + v;
    else
      comp += (v - t) + s;
    s = t;
  }
  void add(cplx v) {
    add1(re, cre, v.real());
    add1(im, cim, v.imag());
  }
  cplx value() const { return {re + cre, im + cim}; }
};

inline bool near_pole(cplx a) {
  if (std::abs(a.imag()) > kPoleGuard) return false;
  if (a.real() > kPoleGuard) return false;
  return std::abs(a.real() - std::round(a.real())) <= kPoleGuard;
}

}  // namespace detail

/// 0F2(;c,d;x) = sum_n x^n / (n! (c)_n (d)_n), summed through the term ratio
/// x / ((n+1)(c+n)(d+n)). Stops once |term| < tol |partial| for three
/// consecutive terms.
inline cplx hyper0f2(cplx c, cplx d, cplx x, double tol = 1e-16) {
  if (!(tol > 0.0)) throw InvalidArgument("series tolerance must be > 0");
  if (detail::near_pole(c) || detail::near_pole(d)) {
    std::ostringstream os;
    os << "0F2 parameter at a pole: c=" << c << " d=" << d;
    throw PoleError(os.str());
  }
  if (x == 0.0) return 1.0;
  detail::CompensatedSum sum;
  cplx term = 1.0;
  sum.add(term);
  int small = 0;
  for (long n = 0; n < kSeriesTermCap; ++n) {
    term *= x / ((double(n) + 1.0) * (c + double(n)) * (d + double(n)));
    sum.add(term);
    const double mag = std::abs(sum.value());
    if (term == 0.0 || std::abs(term) < tol * mag) {
      if (++small >= 3) return sum.value();
    } else {
      small = 0;
    }
  }
  std::ostringstream os;
  os << "0F2 series did not converge within " << kSeriesTermCap << " terms (x=" << x << ")";
  throw NumericalError(os.str(), std::abs(x));
}

/// Rising factorial (a)_k.
inline cplx rising(cplx a, int k) {
  cplx out = 1.0;
  for (int i = 0; i < k; ++i) out *= a + double(i);
  return out;
}

inline constexpr int kMaxMomentOrder = 6;

namespace detail {

inline DerivedParams analytic_params(const ModelParams& p) {
  p.validate();
  if (p.chi == 0.0)
    throw UnsupportedLimit("closed-form steady state needs chi != 0; for chi = 0 the state is coherent with "
                           "alpha = -lambda / Gamma");
  return DerivedParams::from(p);
}

inline cplx moment_with_base(int i, int j, const DerivedParams& dp, cplx base, double tol) {
  if (i == 0 && j == 0) return 1.0;
  if (dp.z == 0.0) return 0.0;
  const cplx x = 2.0 * dp.z * dp.z;
  const cplx num = hyper0f2(dp.c + double(j), dp.d + double(i), x, tol);
  const double sign = (i + j) % 2 == 0 ? 1.0 : -1.0;
  return sign * std::pow(dp.z, i + j) / (rising(dp.c, j) * rising(dp.d, i)) * num / base;
}

}  // namespace detail

/// Normally ordered steady-state moment <b^+^i b^j>, 0 <= i, j <= 6.
inline cplx moment(int i, int j, const ModelParams& p, double tol = 1e-16) {
  if (i < 0 || j < 0 || i > kMaxMomentOrder || j > kMaxMomentOrder)
    throw InvalidArgument("moment orders must lie in [0, 6]");
  const DerivedParams dp = detail::analytic_params(p);
  if (i == 0 && j == 0) return 1.0;
  if (dp.z == 0.0) return 0.0;
  const cplx base = hyper0f2(dp.c, dp.d, 2.0 * dp.z * dp.z, tol);
  return detail::moment_with_base(i, j, dp, base, tol);
}

struct AnalyticMoments {
  cplx z, c, d;
  cplx f2_base;  ///< 0F2(c, d; 2 z^2)
  cplx b_mean;
  double n_e = 0.0;
  double q = 0.0;
  double n_e_imag = 0.0;  ///< imaginary residue of <b^+ b>, for diagnostics
};

inline AnalyticMoments analytic_observables(const ModelParams& p, double tol = 1e-16) {
  const DerivedParams dp = detail::analytic_params(p);
  AnalyticMoments out;
  out.z = dp.z;
  out.c = dp.c;
  out.d = dp.d;
  if (dp.z == 0.0) {
    out.f2_base = 1.0;
    return out;
  }
  out.f2_base = hyper0f2(dp.c, dp.d, 2.0 * dp.z * dp.z, tol);
  out.b_mean = detail::moment_with_base(0, 1, dp, out.f2_base, tol);
  const cplx g11 = detail::moment_with_base(1, 1, dp, out.f2_base, tol);
  const cplx g22 = detail::moment_with_base(2, 2, dp, out.f2_base, tol);
  out.n_e = g11.real();
  out.n_e_imag = g11.imag();
  // Q = <b^+^2 b^2> / <b^+ b> - <b^+ b>
  out.q = out.n_e < 1e-14 ? 0.0 : (g22 / g11 - g11).real();
  return out;
}

}  // namespace rydkerr

#endif  // RYDKERR_ANALYTIC_HPP
