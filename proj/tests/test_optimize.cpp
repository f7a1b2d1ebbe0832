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

#include <gtest/gtest.h>

#include <atomic>
#include <set>

#include "symmap/optimize.hpp"
#include "symmap/parallel.hpp"

using namespace symmap;

TEST(Bfgs, Rosenbrock) {
    Objective f = [](const RVector &x, RVector *g) {
        double a = 1 - x[0], b = x[1] - x[0] * x[0];
        if (g) {
            g->resize(2);
            (*g)[0] = -2 * a - 400 * x[0] * b;
            (*g)[1] = 200 * b;
        }
        return a * a + 100 * b * b;
    };
    RVector x0(2);
    x0 << -1.2, 1.0;
    MinimizeOptions opts;
    opts.max_iters = 2000;
    MinimizeResult r = minimize_bfgs(f, x0, opts);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.x[0], 1.0, 1e-8);
    EXPECT_NEAR(r.x[1], 1.0, 1e-8);
}

TEST(Bfgs, SphereRetractionFindsSmallestEigenvalue) {
    RMatrix a(3, 3);
    a << 4, 1, 0, 1, 3, 1, 0, 1, 2;
    Objective f = [&](const RVector &x, RVector *g) {
        double n2 = x.squaredNorm();
        double q = x.dot(a * x);
        if (g) *g = 2 * (a * x) / n2 - 2 * q * x / (n2 * n2);
        return q / n2;
    };
    RVector x0 = RVector::Ones(3);
    MinimizeResult r = minimize_bfgs(f, x0, {}, [](RVector &x) { x /= x.norm(); });
    Eigen::SelfAdjointEigenSolver<RMatrix> es(a);
    EXPECT_NEAR(r.value, es.eigenvalues()[0], 1e-10);
    EXPECT_NEAR(r.x.norm(), 1.0, 1e-12);
}

TEST(FiniteDifference, Quadratic) {
    RVector x(3);
    x << 1, -2, 0.5;
    RVector g = central_difference_gradient([](const RVector &y) { return y.squaredNorm() + y[0] * y[1]; }, x, 1e-5);
    EXPECT_NEAR(g[0], 2 * x[0] + x[1], 1e-9);
    EXPECT_NEAR(g[1], 2 * x[1] + x[0], 1e-9);
    EXPECT_NEAR(g[2], 2 * x[2], 1e-9);
}

TEST(ParallelMap, OrderedResults) {
    auto out = parallel_map(1000, [](int i) { return i * i; });
    ASSERT_EQ(out.size(), 1000u);
    for (int i = 0; i < 1000; ++i) ASSERT_EQ(out[i], i * i);
    EXPECT_TRUE(parallel_map(0, [](int i) { return i; }).empty());
}

TEST(ParallelMap, PropagatesExceptions) {
    std::atomic<int> calls{0};
    EXPECT_THROW(parallel_map(50,
                              [&](int i) {
                                  ++calls;
                                  if (i == 17) throw std::runtime_error("boom");
                                  return i;
                              }),
                 std::runtime_error);
    EXPECT_EQ(calls.load(), 50);
}

TEST(StreamRng, ReproducibleAndDistinct) {
    auto a = stream_rng(42, 3), b = stream_rng(42, 3);
    EXPECT_EQ(a(), b());
    std::set<std::uint64_t> first;
    for (std::uint64_t s = 0; s < 100; ++s) first.insert(stream_rng(42, s)());
    for (std::uint64_t seed = 0; seed < 100; ++seed) first.insert(stream_rng(seed, 0)());
    EXPECT_EQ(first.size(), 199u);
}
