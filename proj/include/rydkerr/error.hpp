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

#ifndef RYDKERR_ERROR_HPP
#define RYDKERR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rydkerr {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something outside an operation's domain (bad dimension,
/// atom count out of range, malformed grid, mismatched shapes).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure did not reach its tolerance. Carries a scalar that
/// locates the failure: a time for integrators, a residual for solvers.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double where)
      : Error(what), where_(where) {}
  explicit NumericalError(const std::string& what) : Error(what) {}

  double where() const noexcept { return where_; }

 private:
  double where_ = 0.0;
};

/// Adaptive integrator hit its minimum step or step budget.
class IntegratorError : public NumericalError {
 public:
  using NumericalError::NumericalError;
  double failing_time() const noexcept { return where(); }
};

/// Stationary-state search failed every strategy.
class NoConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
  double residual() const noexcept { return where(); }
};

/// Series parameter sits on (or within 1e-9 of) a pole of the gamma ratio.
class PoleError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Linearization around a marginal or unstable fixed point.
class InstabilityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Density matrix truncation too small for the requested quantity.
class TruncationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A closed form that does not exist in the requested parameter limit.
class UnsupportedLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace rydkerr

#endif  // RYDKERR_ERROR_HPP
