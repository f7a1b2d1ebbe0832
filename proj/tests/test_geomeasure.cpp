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

#include "oracles.hpp"
#include "symmap/errors.hpp"
#include "symmap/geomeasure.hpp"
#include "symmap/optimize.hpp"

using namespace symmap;

namespace {

double dicke_measure(int n, int k) {
    double p = static_cast<double>(k) / n;
    return 1.0 - binomial_real(n, k) * std::pow(p, k) * std::pow(1.0 - p, n - k);
}

}  // namespace

TEST(GeometricMeasure, DickeClosedForm) {
    for (int n = 1; n <= 16; ++n)
        for (int k = 0; k <= n; ++k)
            EXPECT_NEAR(geometric_measure(dicke(n, k)).value, dicke_measure(n, k), 1e-9) << n << "," << k;
}

TEST(GeometricMeasure, GhzAndW) {
    for (int n = 2; n <= 20; ++n) {
        EXPECT_NEAR(geometric_measure(ghz(n)).value, 0.5, 1e-9);
        EXPECT_NEAR(geometric_measure(w_state(n)).value, 1.0 - std::pow((n - 1.0) / n, n - 1), 1e-9);
    }
}

TEST(GeometricMeasure, AgreesWithDenseGridOracle) {
    std::mt19937_64 rng(31);
    for (int n = 2; n <= 8; ++n)
        for (int t = 0; t < 3; ++t) {
            SymmetricState psi(n, oracle::random_complex(rng, n + 1));
            double grid = 1.0 - oracle::grid_max_overlap(psi.coeffs());
            GeometricResult r = geometric_measure(psi);
            EXPECT_NEAR(r.value, grid, 1e-9) << n;
            EXPECT_NEAR(1.0 - std::norm(product_overlap(psi, r.argmax.qubit())), r.value, 1e-14);
        }
}

TEST(GeometricMeasure, ProductStatesAreUnentangled) {
    std::mt19937_64 rng(32);
    for (int n = 1; n <= 12; ++n) {
        CVector q = oracle::random_complex(rng, 2);
        EXPECT_NEAR(geometric_measure(product_state(QubitState(q[0], q[1]), n)).value, 0.0, 1e-10);
    }
}

TEST(GeometricMeasure, SeedReproducible) {
    std::mt19937_64 rng(33);
    SymmetricState psi(10, oracle::random_complex(rng, 11));
    GeometricOptions opts;
    opts.seed = 5;
    GeometricResult a = geometric_measure(psi, opts), b = geometric_measure(psi, opts);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.argmax.theta, b.argmax.theta);
    EXPECT_EQ(a.argmax.phi, b.argmax.phi);
    EXPECT_EQ(a.n_starts, 80);
}

TEST(GeometricMeasure, BoundsOnRandomStates) {
    std::mt19937_64 rng(34);
    for (int n = 2; n <= 14; n += 2)
        for (int t = 0; t < 20; ++t) {
            SymmetricState psi(n, oracle::random_complex(rng, n + 1));
            double e = geometric_measure(psi).value;
            ASSERT_LE(mapped_lower_bound(psi), e + 1e-9);
            ASSERT_LE(e, symmetric_measure_upper_bound(n) + 1e-9);
        }
}

TEST(Landscape, GradientMatchesFiniteDifferences) {
    std::mt19937_64 rng(35);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 1; n <= 12; ++n) {
        OverlapLandscape land(SymmetricState(n, oracle::random_complex(rng, n + 1)));
        for (int t = 0; t < 5; ++t) {
            RVector x(2);
            x << 0.05 + 3.0 * u(rng), 6.28 * u(rng);
            std::array<double, 2> g{};
            double v = land.value_and_gradient(x[0], x[1], g);
            EXPECT_EQ(v, land.value(x[0], x[1]));
            RVector fd = central_difference_gradient([&](const RVector &y) { return land.value(y[0], y[1]); }, x, 1e-6);
            EXPECT_NEAR(g[0], fd[0], 1e-7);
            EXPECT_NEAR(g[1], fd[1], 1e-7);
        }
    }
}

TEST(BlochPoint, CanonicalFolding) {
    BlochPoint p = BlochPoint::canonical(2 * M_PI - 0.4, 0.1);
    EXPECT_NEAR(p.theta, 0.4, 1e-15);
    EXPECT_NEAR(p.phi, 0.1 + M_PI, 1e-15);
    BlochPoint q = BlochPoint::canonical(-0.4, -0.1);
    EXPECT_NEAR(q.theta, 0.4, 1e-15);
    EXPECT_NEAR(q.phi, M_PI - 0.1, 1e-14);
    // folding keeps the same ray
    QubitState a = QubitState::from_bloch(-0.4, -0.1), b = q.qubit();
    EXPECT_NEAR(std::abs(std::conj(a.a0()) * b.a0() + std::conj(a.a1()) * b.a1()), 1.0, 1e-14);
}

TEST(BlochPoint, FibonacciLatticeCoversSphere) {
    auto pts = fibonacci_lattice(64);
    ASSERT_EQ(pts.size(), 64u);
    double mean_z = 0.0;
    for (const auto &p : pts) {
        EXPECT_GE(p.theta, 0.0);
        EXPECT_LE(p.theta, M_PI);
        mean_z += std::cos(p.theta);
    }
    EXPECT_NEAR(mean_z / 64, 0.0, 1e-12);
}

TEST(Mes, PlatonicCandidatesExact) {
    EXPECT_NEAR(geometric_measure(mes_candidate(4)).value, 2.0 / 3.0, 1e-9);
    EXPECT_NEAR(geometric_measure(mes_candidate(6)).value, 7.0 / 9.0, 1e-9);
    EXPECT_NEAR(geometric_measure(mes_candidate(12)).value, 215.0 / 243.0, 1e-9);
}

TEST(Mes, TabulatedSizesWithinPublishedRounding) {
    for (int n : {4, 6, 8, 10, 12}) EXPECT_NEAR(geometric_measure(mes_candidate(n)).value, tabulated_mes_measure(n), 1e-3);
}

// |1>^{(x)20} alone has squared overlap 187/1875 with the N=20 candidate, so its
// measure cannot exceed 1 - 187/1875 = 0.90027.
TEST(Mes, TwentyQubitCandidateIsBoundedByABasisProduct) {
    SymmetricState mes = mes_candidate(20);
    double f = std::norm(product_overlap(mes, QubitState(0.0, 1.0)));
    EXPECT_NEAR(f, 187.0 / 1875.0, 1e-6);
    EXPECT_NEAR(geometric_measure(mes).value, 1.0 - 187.0 / 1875.0, 1e-6);
}

TEST(Mes, Errors) {
    EXPECT_THROW(mes_candidate(14), NotTabulated);
    EXPECT_THROW(tabulated_mes_measure(7), NotTabulated);
    EXPECT_THROW(mapped_lower_bound(w_state(5)), UnsupportedParity);
}
