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


// Convenience header pulling in the whole library (without the CLI layer).

#ifndef RYDKERR_RYDKERR_HPP
#define RYDKERR_RYDKERR_HPP

#include "rydkerr/analytic.hpp"
#include "rydkerr/bosonic.hpp"
#include "rydkerr/classical.hpp"
#include "rydkerr/error.hpp"
#include "rydkerr/linearized.hpp"
#include "rydkerr/model.hpp"
#include "rydkerr/ode.hpp"
#include "rydkerr/spin.hpp"
#include "rydkerr/wigner.hpp"

#endif  // RYDKERR_RYDKERR_HPP
