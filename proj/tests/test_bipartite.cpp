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
#include "symmap/bipartite.hpp"
#include "symmap/errors.hpp"

using namespace symmap;

TEST(Schmidt, MappedDickeRanks) {
    for (int n = 2; n <= 30; n += 2)
        for (int k = 0; k <= n; ++k) {
            SchmidtData s = schmidt(map_pure(dicke(n, k)));
            ASSERT_EQ(s.rank, std::min(k, n - k) + 1) << n << "," << k;
            ASSERT_EQ(s.rank, mapped_dicke_rank(n, k));
            ASSERT_NEAR(s.coefficients.squaredNorm(), 1.0, 1e-12);
        }
}

TEST(Schmidt, WAndGhzHaveRankTwo) {
    for (int n = 2; n <= 30; n += 2) {
        EXPECT_EQ(schmidt(map_pure(w_state(n))).rank, 2);
        EXPECT_EQ(schmidt(map_pure(ghz(n))).rank, 2);
    }
}

TEST(Schmidt, BoundedBySymmetricTensorRank) {
    for (int n = 2; n <= 20; n += 2)
        for (int k = 0; 2 * k <= n; ++k) EXPECT_LE(mapped_dicke_rank(n, k), dicke_symmetric_tensor_rank(n, k));
    EXPECT_THROW(dicke_symmetric_tensor_rank(6, 4), DomainError);
    EXPECT_THROW(mapped_dicke_rank(5, 1), UnsupportedParity);
}

TEST(Schmidt, CoefficientsAreHalfSystemSingularValues) {
    std::mt19937_64 rng(21);
    for (int n = 2; n <= 8; n += 2) {
        SymmetricState psi(n, oracle::random_complex(rng, n + 1));
        CMatrix a = oracle::half_dicke_coefficients(oracle::expand(psi.coeffs()), n);
        Eigen::JacobiSVD<CMatrix> svd(a);
        EXPECT_LT((schmidt(map_pure(psi)).coefficients - svd.singularValues()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(ReducedState, DiagonalFormula) {
    for (int n = 2; n <= 20; n += 2) {
        const int h = n / 2;
        for (int k = 0; k <= n; ++k) {
            CMatrix rho = reduced_state(map_pure(dicke(n, k)));
            for (int i = 0; i <= h; ++i)
                for (int j = 0; j <= h; ++j) {
                    double expected = 0.0;
                    if (i == j && k - i >= 0 && k - i <= h)
                        expected = std::exp(oracle::log_binomial(h, i) + oracle::log_binomial(h, k - i) -
                                            oracle::log_binomial(n, k));
                    ASSERT_NEAR(std::abs(rho(i, j)), expected, 1e-12);
                }
        }
    }
}

TEST(PartialTranspose, ProductOperators) {
    std::mt19937_64 rng(22);
    const int d = 3;
    CMatrix a = CMatrix::Random(d, d), b = CMatrix::Random(d, d);
    CMatrix ab(d * d, d * d), abt(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    ab(i * d + j, k * d + l) = a(i, k) * b(j, l);
                    abt(i * d + j, k * d + l) = a(i, k) * b(l, j);
                }
    EXPECT_LT((partial_transpose(ab, d) - abt).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((partial_transpose(partial_transpose(ab, d), d) - ab).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Ppt, PureMappedStates) {
    EXPECT_TRUE(ppt_is_entangled(map_mixed(w_mixture(6, 1.0))).entangled);
    EXPECT_FALSE(ppt_is_entangled(map_mixed(w_mixture(6, 0.01))).entangled);
    auto product = SymmetricDensity::pure(product_state(QubitState::from_bloch(0.3, 1.1), 6));
    EXPECT_FALSE(ppt_is_entangled(map_mixed(product)).entangled);
    EXPECT_THROW(ppt_is_entangled(CMatrix::Identity(9, 9)), InvalidDensity);
    EXPECT_THROW(ppt_is_entangled(CMatrix::Identity(5, 5) / 5.0), InvalidDensity);
}

TEST(Ppt, WMixtureThresholdN6) {
    ThresholdResult r = ppt_threshold([](double p) { return map_mixed(w_mixture(6, p)); }, 0.0, 1.0);
    EXPECT_NEAR(r.threshold, 0.034, 5e-4);
    ASSERT_FALSE(r.trace.empty());
    EXPECT_LE(r.trace.back().hi - r.trace.back().lo, 2 * kBisectionWidth);
}

// For N=4 the {|02>, |20>} block of the partial transpose of the mapped GHZ
// mixture has eigenvalue (1-p)/30 - p/2, which vanishes at p = 1/16.
TEST(Ppt, GhzMixtureThresholdN4IsOneSixteenth) {
    ThresholdResult r = ppt_threshold([](double p) { return map_mixed(noisy_mixture(ghz(4), p)); }, 0.0, 1.0);
    EXPECT_NEAR(r.threshold, 1.0 / 16.0, kBisectionWidth);
}

TEST(Ppt, BracketErrors) {
    auto family = [](double p) { return map_mixed(w_mixture(6, p)); };
    EXPECT_THROW(ppt_threshold(family, 0.5, 1.0), BracketError);
    EXPECT_THROW(ppt_threshold(family, 0.0, 0.01), BracketError);
}

TEST(Proxies, KnownValues) {
    const int d = 4;
    CMatrix mixed = CMatrix::Identity(d, d) / d;
    EXPECT_NEAR(purity_deficit(mixed), 1.0 - 1.0 / d, 1e-15);
    EXPECT_NEAR(det_measure(mixed), std::pow(1.0 / d, d), 1e-15);
    CMatrix pure = CMatrix::Zero(d, d);
    pure(0, 0) = 1.0;
    EXPECT_NEAR(purity_deficit(pure), 0.0, 1e-15);
    EXPECT_NEAR(bipartite_geometric_measure(map_pure(ghz(6))), 0.5, 1e-12);
}
