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

#ifndef RYDKERR_CLI_SWEEP_HPP
#define RYDKERR_CLI_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "rydkerr/analytic.hpp"
#include "rydkerr/bosonic.hpp"
#include "rydkerr/classical.hpp"
#include "rydkerr/cli/config.hpp"
#include "rydkerr/linearized.hpp"

namespace rydkerr::cli {

/// Runs fn(i) for i in [0, n) on a pool sized to the available cores. The
/// first exception thrown by any task is rethrown after all workers join.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn, unsigned workers = 0) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = unsigned(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

/// Failure at one grid point; carries the parameters for the error report.
class PointError : public NumericalError {
 public:
  PointError(const std::string& what, ModelParams p) : NumericalError(what), params(p) {}
  ModelParams params;
};

struct SweepRow {
  double axis = 0.0;
  ModelParams params{};
  std::optional<ObservableSet> quantum;
  std::optional<double> n_e_classical_low, n_e_classical_high;
  std::optional<double> n_e_linearized, q_linearized;
  std::optional<AnalyticMoments> analytic;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  double max_n_e_deviation = 0.0;  ///< quantum vs analytic
  double max_q_deviation = 0.0;
  double max_b_abs_deviation = 0.0;
};

inline const std::vector<std::string>& sweep_header() {
  static const std::vector<std::string> h{"axis",         "n_e_quantum",      "q_quantum",
                                          "b_abs_quantum", "n_e_classical_low", "n_e_classical_high",
                                          "n_e_linearized", "q_linearized",     "n_e_analytic",
                                          "q_analytic"};
  return h;
}

struct Backends {
  bool quantum = true;
  bool classical = true;
  bool linearized = true;
  bool analytic = true;
};

/// Quantum stationary state at the configured truncation, adaptive when unset.
inline DensityMatrix quantum_steady(const ModelParams& p, std::optional<int> dim) {
  if (dim) {
    SteadyOptions so;
    so.dim = *dim;
    return steady_state(p, so);
  }
  return steady_state_adaptive(p).rho;
}

inline SweepRow evaluate_point(const ModelParams& p, double axis, std::optional<int> dim, const Backends& b) {
  SweepRow row;
  row.axis = axis;
  row.params = p;
  try {
    if (b.quantum) row.quantum = observables(quantum_steady(p, dim));
    if (b.classical || b.linearized) {
      const auto roots = steady_roots(p).stable_roots();
      if (!roots.empty()) {
        if (b.classical) {
          row.n_e_classical_low = roots.front().n_es;
          row.n_e_classical_high = roots.back().n_es;
        }
        if (b.linearized && p.lambda > 0.0) {
          try {
            const auto lin = linearized_observables(p, roots.front().n_es);
            row.n_e_linearized = lin.n_e_corrected;
            row.q_linearized = lin.q_lin;
          } catch (const InstabilityError&) {
            // marginal root: leave the linearized columns empty
          }
        }
      }
    }
    if (b.analytic && p.chi != 0.0) row.analytic = analytic_observables(p);
  } catch (const Error& e) {
    std::ostringstream os;
    os << e.what() << " at delta=" << p.delta << " lambda=" << p.lambda << " chi=" << p.chi << " gamma=" << p.gamma;
    throw PointError(os.str(), p);
  }
  return row;
}

inline SweepResult run_sweep(const ModelParams& base, const SweepSpec& grid, std::optional<int> dim,
                             const Backends& b = {}, unsigned workers = 0) {
  SweepResult res;
  res.rows.resize(grid.count);
  parallel_for(
      std::size_t(grid.count),
      [&](std::size_t i) {
        ModelParams p = base;
        const double v = grid.value(int(i));
        (grid.axis == Axis::kDelta ? p.delta : p.lambda) = v;
        res.rows[i] = evaluate_point(p, v, dim, b);
      },
      workers);
  for (const auto& r : res.rows) {
    if (r.quantum && r.analytic) {
      res.max_n_e_deviation = std::max(res.max_n_e_deviation, std::abs(r.quantum->n_e - r.analytic->n_e));
      res.max_q_deviation = std::max(res.max_q_deviation, std::abs(r.quantum->mandel_q - r.analytic->q));
      res.max_b_abs_deviation =
          std::max(res.max_b_abs_deviation, std::abs(std::abs(r.quantum->b_mean) - std::abs(r.analytic->b_mean)));
    }
  }
  return res;
}

inline std::vector<std::optional<double>> sweep_fields(const SweepRow& r) {
  std::vector<std::optional<double>> f{r.axis};
  if (r.quantum) {
    f.push_back(r.quantum->n_e);
    f.push_back(r.quantum->mandel_q);
    f.push_back(std::abs(r.quantum->b_mean));
  } else {
    f.insert(f.end(), 3, std::nullopt);
  }
  f.push_back(r.n_e_classical_low);
  f.push_back(r.n_e_classical_high);
  f.push_back(r.n_e_linearized);
  f.push_back(r.q_linearized);
  if (r.analytic) {
    f.push_back(r.analytic->n_e);
    f.push_back(r.analytic->q);
  } else {
    f.insert(f.end(), 2, std::nullopt);
  }
  return f;
}

}  // namespace rydkerr::cli

#endif  // RYDKERR_CLI_SWEEP_HPP
