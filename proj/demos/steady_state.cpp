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


// Steady state of the driven Kerr oscillator at one parameter point, computed
// three ways: Liouvillian null space, closed-form moments, classical roots.

#include <cstdio>

#include "rydkerr.hpp"

int main() {
  rydkerr::ModelParams p;
  p.delta = 5.0;
  p.lambda = 0.6;
  p.chi = 10.0;
  p.gamma = 1.0;

  const auto numeric = rydkerr::steady_state_adaptive(p);
  const auto obs = rydkerr::observables(numeric.rho);
  const auto exact = rydkerr::analytic_observables(p);
  std::printf("Fock dimension      %d\n", numeric.rho.dim());
  std::printf("n_e   numeric %.10f  analytic %.10f\n", obs.n_e, exact.n_e);
  std::printf("Q     numeric %.10f  analytic %.10f\n", obs.mandel_q, exact.q);

  for (const auto& r : rydkerr::steady_roots(p).roots)
    std::printf("classical root n_es = %.6f  %s\n", r.n_es, r.stable ? "stable" : "unstable");
  return 0;
}
