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

#include "symmap/optimize.hpp"

#include <cmath>
#include <limits>

namespace symmap {

namespace {

constexpr double kArmijo = 1e-4;
constexpr int kMaxBacktracks = 60;

}  // namespace

MinimizeResult minimize_bfgs(const Objective &f, RVector x0, const MinimizeOptions &options,
                             const Retraction &retract) {
    const Eigen::Index n = x0.size();
    MinimizeResult result;
    if (retract) retract(x0);
    RVector x = std::move(x0);
    RVector g(n);
    double fx = f(x, &g);
    RMatrix h_inv = RMatrix::Identity(n, n);
    RVector g_new(n);
    const double eps = std::numeric_limits<double>::epsilon();

    int iter = 0;
    for (; iter < options.max_iters; ++iter) {
        if (g.norm() < options.grad_tol) {
            result.converged = true;
            break;
        }
        RVector p = -h_inv * g;
        double slope = g.dot(p);
        if (!(slope < 0.0)) {
            h_inv.setIdentity();
            p = -g;
            slope = -g.squaredNorm();
        }

        double alpha = 1.0;
        RVector x_new;
        double f_new = 0.0;
        bool accepted = false;
        for (int bt = 0; bt < kMaxBacktracks; ++bt) {
            x_new = x + alpha * p;
            f_new = f(x_new, nullptr);
            // a few ulps of slack so the search can still move once slope*alpha
            // falls below the rounding noise in f
            if (std::isfinite(f_new) && f_new <= fx + kArmijo * alpha * slope + 4 * eps * std::abs(fx)) {
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) {
            if (h_inv.isIdentity()) break;
            h_inv.setIdentity();
            continue;
        }
        if (retract) retract(x_new);
        f_new = f(x_new, &g_new);

        RVector s = x_new - x;
        RVector y = g_new - g;
        double sy = s.dot(y);
        if (sy > 1e-300 && std::isfinite(sy)) {
            if (iter == 0) {
                h_inv *= sy / y.squaredNorm();
            }
            double rho = 1.0 / sy;
            RVector hy = h_inv * y;
            h_inv += ((sy + y.dot(hy)) * rho * rho) * (s * s.transpose()) - rho * (hy * s.transpose() + s * hy.transpose());
        }

        double decrease = fx - f_new;
        x = std::move(x_new);
        fx = f_new;
        g = g_new;
        if (options.ftol > 0.0 && std::abs(decrease) <= options.ftol * std::max(1.0, std::abs(fx))) {
            result.converged = true;
            ++iter;
            break;
        }
    }
    if (!result.converged && g.norm() < options.grad_tol) {
        result.converged = true;
    }
    result.x = std::move(x);
    result.value = fx;
    result.grad_norm = g.norm();
    result.iterations = iter;
    return result;
}

RVector central_difference_gradient(const std::function<double(const RVector &)> &f, const RVector &x,
                                    double step) {
    RVector grad(x.size());
    RVector probe = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double xi = x[i];
        probe[i] = xi + step;
        double fp = f(probe);
        probe[i] = xi - step;
        double fm = f(probe);
        probe[i] = xi;
        grad[i] = (fp - fm) / (2 * step);
    }
    return grad;
}

}  // namespace symmap
