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
#include "symmap/mapping.hpp"

using namespace symmap;

// The mapped amplitudes are the coordinates of the state in the product of
// the two half-system Dicke bases; the oracle computes them in the full 2^N space.
TEST(Mapping, MatchesHalfSystemDickeCoordinates) {
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 10; n += 2) {
        for (int k = 0; k <= n; ++k) {
            CMatrix expected = oracle::half_dicke_coefficients(oracle::dicke_vector(n, k), n);
            EXPECT_LT((map_pure(dicke(n, k)).amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-12) << n << "," << k;
        }
        SymmetricState psi(n, oracle::random_complex(rng, n + 1));
        CMatrix expected = oracle::half_dicke_coefficients(oracle::expand(psi.coeffs()), n);
        EXPECT_LT((map_pure(psi).amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-12) << n;
    }
}

TEST(Mapping, D4ClosedForms) {
    auto a = map_pure(dicke(4, 2)).amplitudes();
    EXPECT_NEAR(a(1, 1).real(), std::sqrt(2.0 / 3.0), 1e-15);
    EXPECT_NEAR(a(0, 2).real(), 1 / std::sqrt(6.0), 1e-15);
    CVector c = map_pure(dicke(4, 2)).psi_coordinates();
    // psi_00, psi_01, psi_02, psi_11, psi_12, psi_22
    EXPECT_NEAR(c[2].real(), 1 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(c[3].real(), std::sqrt(2.0 / 3.0), 1e-15);
    EXPECT_NEAR(map_pure(dicke(4, 1)).amplitudes()(0, 1).real(), 1 / std::sqrt(2.0), 1e-15);
}

TEST(Mapping, RejectsOddN) { EXPECT_THROW(map_pure(w_state(5)), UnsupportedParity); }

TEST(Mapping, IsometryHasOrthonormalColumns) {
    for (int n = 2; n <= 30; n += 2) {
        const MappedBasis basis(n);
        const RMatrix &v = basis.isometry();
        EXPECT_LT((v.transpose() * v - RMatrix::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff(), 1e-12) << n;
    }
}

TEST(Mapping, FidelityIsPreserved) {
    std::mt19937_64 rng(5);
    for (int n = 2; n <= 16; n += 2)
        for (int t = 0; t < 20; ++t) {
            SymmetricState a(n, oracle::random_complex(rng, n + 1)), b(n, oracle::random_complex(rng, n + 1));
            double f = std::norm(a.coeffs().dot(b.coeffs()));
            double g = std::norm(map_pure(a).to_vector().dot(map_pure(b).to_vector()));
            ASSERT_NEAR(f, g, 1e-12);
        }
}

TEST(Mapping, ProductStatesMapToProducts) {
    std::mt19937_64 rng(6);
    for (int n = 2; n <= 20; n += 2)
        for (int t = 0; t < 10; ++t) {
            CVector q = oracle::random_complex(rng, 2);
            QubitState phi(q[0], q[1]);
            QuditState image = separable_image(phi, n);
            EXPECT_NEAR(image.amps().norm(), 1.0, 1e-12);
            CMatrix expected = image.amps() * image.amps().transpose();
            ASSERT_LT((map_pure(product_state(phi, n)).amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-12);
        }
}

TEST(Mapping, MixedMapMatchesPureOnRankOne) {
    std::mt19937_64 rng(7);
    SymmetricState psi(6, oracle::random_complex(rng, 7));
    CVector v = map_pure(psi).to_vector();
    CMatrix mapped = map_mixed(SymmetricDensity::pure(psi));
    EXPECT_LT((mapped - v * v.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(mapped.trace().real(), 1.0, 1e-12);
}

TEST(BipartiteState, ConstructionChecks) {
    CMatrix a = CMatrix::Zero(2, 2);
    a(0, 1) = 1.0;
    EXPECT_THROW(BipartiteSymmetricState{a}, NotSymmetric);
    EXPECT_THROW(BipartiteSymmetricState{CMatrix::Identity(2, 2)}, DomainError);
    CVector v = CVector::Zero(4);
    v[1] = 1.0;
    EXPECT_THROW(BipartiteSymmetricState::from_product_vector(2, v), NotSymmetric);
    v[2] = 1.0;
    auto s = BipartiteSymmetricState::from_product_vector(2, v);
    EXPECT_NEAR(s.psi_coordinates()[1].real(), 1.0, 1e-15);
}

TEST(BipartiteState, PsiCoordinatesRoundTrip) {
    std::mt19937_64 rng(8);
    for (int d = 2; d <= 7; ++d) {
        CVector c = oracle::random_complex(rng, symmetric_dimension(d));
        auto s = BipartiteSymmetricState::from_psi_coordinates(d, c);
        EXPECT_LT((s.psi_coordinates() - c).cwiseAbs().maxCoeff(), 1e-14);
        EXPECT_NEAR(s.to_vector().norm(), 1.0, 1e-14);
    }
    auto p = BipartiteSymmetricState::psi(3, 0, 2);
    EXPECT_NEAR(p.amplitudes()(2, 0).real(), 1 / std::sqrt(2.0), 1e-15);
}

TEST(Projectors, Ranks) {
    for (int n = 2; n <= 20; n += 2) {
        const int d = n / 2 + 1;
        EXPECT_EQ(swap_symmetric_projector(d).rank(), d * (d + 1) / 2);
        EXPECT_EQ(image_projector(n).rank(), n + 1);
        EXPECT_EQ(complement_projector(n).rank(), (d - 1) * (d - 2) / 2);
        EXPECT_NEAR(complement_projector(n).trace(), (d - 1) * (d - 2) / 2.0, 1e-9);
    }
}

TEST(Projectors, ImageInsideSymmetricSubspace) {
    for (int n = 2; n <= 12; n += 2) {
        const int d = n / 2 + 1;
        CMatrix s = swap_symmetric_projector(d).matrix, im = image_projector(n).matrix;
        EXPECT_LT((s * im - im).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((im * im - im).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Decompose, MappedStatesHaveNoComplementWeight) {
    std::mt19937_64 rng(9);
    for (int n = 2; n <= 12; n += 2) {
        Decomposition dec = decompose(map_pure(SymmetricState(n, oracle::random_complex(rng, n + 1))));
        EXPECT_NEAR(dec.tilde_weight, 1.0, 1e-12);
        EXPECT_NEAR(dec.hat_weight, 0.0, 1e-12);
    }
    // psi_11 - sqrt(2) psi_02 is orthogonal to M(D_4^2), the only image state in sector 2
    CVector c = CVector::Zero(6);
    c[3] = 1.0;
    c[2] = -std::sqrt(2.0);
    Decomposition dec = decompose(BipartiteSymmetricState::from_psi_coordinates(3, c / c.norm()));
    EXPECT_NEAR(dec.hat_weight, 1.0, 1e-12);
}

TEST(Decompose, RejectsAntisymmetricVector) {
    CVector v = CVector::Zero(9);
    v[1] = 1 / std::sqrt(2.0);
    v[3] = -1 / std::sqrt(2.0);
    EXPECT_THROW(decompose(3, v), NotSymmetric);
}
