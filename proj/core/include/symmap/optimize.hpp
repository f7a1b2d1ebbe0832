// Copyright 2026 The symmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMMAP_OPTIMIZE_HPP
#define SYMMAP_OPTIMIZE_HPP

#include <functional>

#include "symmap/symcore.hpp"

namespace symmap {

/// f(x) with the gradient written to `grad` when it is non-null.
using Objective = std::function<double(const RVector &x, RVector *grad)>;

/// Maps an accepted iterate back onto the feasible set (sphere, gauge, ...).
/// The objective must be invariant under it.
using Retraction = std::function<void(RVector &x)>;

struct MinimizeOptions {
    int max_iters = 500;
    double grad_tol = 1e-10;
    /// Relative change in f below which the run stops as converged. 0 disables.
    double ftol = 0.0;
};

struct MinimizeResult {
    RVector x;
    double value = 0.0;
    double grad_norm = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// BFGS with Armijo backtracking. Stops when |grad| < grad_tol, when the
/// relative decrease drops below ftol, or after max_iters iterations.
MinimizeResult minimize_bfgs(const Objective &f, RVector x0, const MinimizeOptions &options,
                             const Retraction &retract = nullptr);

/// Central differences, (f(x + h e_i) - f(x - h e_i)) / 2h.
RVector central_difference_gradient(const std::function<double(const RVector &)> &f, const RVector &x,
                                    double step);

}  // namespace symmap

#endif  // SYMMAP_OPTIMIZE_HPP
