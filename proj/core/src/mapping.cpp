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

#include "symmap/mapping.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "symmap/errors.hpp"

namespace symmap {

namespace {

CMatrix vector_to_matrix(int d, const CVector &vec) {
    CMatrix a(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a(i, j) = vec[i * d + j];
    return a;
}

CVector matrix_to_vector(const CMatrix &a) {
    const auto d = a.rows();
    CVector vec(d * d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) vec[i * d + j] = a(i, j);
    return vec;
}

void require_even(int n_qubits) {
    if (n_qubits % 2 != 0) throw UnsupportedParity(n_qubits);
    if (n_qubits < 2) throw DomainError("mapping needs N >= 2, got " + std::to_string(n_qubits));
}

}  // namespace

BipartiteSymmetricState::BipartiteSymmetricState(CMatrix amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.rows() != amplitudes_.cols() || amplitudes_.rows() < 1) {
        throw DomainError("BipartiteSymmetricState: amplitude matrix must be square and non-empty");
    }
    if ((amplitudes_ - amplitudes_.transpose()).norm() > kStateNormTol) {
        throw NotSymmetric("amplitude matrix is not symmetric under exchange of the qudits");
    }
    double n2 = amplitudes_.squaredNorm();
    if (std::abs(n2 - 1.0) > kStateNormTol) {
        throw DomainError("BipartiteSymmetricState: squared norm " + std::to_string(n2) + " != 1");
    }
}

BipartiteSymmetricState BipartiteSymmetricState::from_psi_coordinates(int d, const CVector &coords) {
    if (coords.size() != symmetric_dimension(d)) {
        throw DomainError("expected " + std::to_string(symmetric_dimension(d)) + " psi coordinates");
    }
    CMatrix a = CMatrix::Zero(d, d);
    int idx = 0;
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j, ++idx) {
            if (i == j) {
                a(i, i) = coords[idx];
            } else {
                a(i, j) = a(j, i) = coords[idx] / std::sqrt(2.0);
            }
        }
    }
    return BipartiteSymmetricState(a);
}

BipartiteSymmetricState BipartiteSymmetricState::from_product_vector(int d, const CVector &vec) {
    if (d < 1 || vec.size() != static_cast<Eigen::Index>(d) * d) {
        throw DomainError("expected a vector of length d^2");
    }
    CMatrix a = vector_to_matrix(d, vec);
    if ((a - a.transpose()).norm() > kStateNormTol * std::max(1.0, a.norm())) {
        throw NotSymmetric("vector is not invariant under SWAP");
    }
    double norm = a.norm();
    if (!(norm > 0.0)) throw DomainError("cannot normalize a zero vector");
    a /= norm;
    return BipartiteSymmetricState(0.5 * (a + a.transpose()));
}

BipartiteSymmetricState BipartiteSymmetricState::psi(int d, int i, int j) {
    if (i < 0 || j < 0 || i >= d || j >= d) throw DomainError("psi: index outside [0, d)");
    CMatrix a = CMatrix::Zero(d, d);
    if (i == j) {
        a(i, i) = 1.0;
    } else {
        a(i, j) = a(j, i) = 1.0 / std::sqrt(2.0);
    }
    return BipartiteSymmetricState(a);
}

BipartiteSymmetricState BipartiteSymmetricState::product(const QuditState &phi) {
    return BipartiteSymmetricState(phi.amps() * phi.amps().transpose());
}

CVector BipartiteSymmetricState::to_vector() const { return matrix_to_vector(amplitudes_); }

CVector BipartiteSymmetricState::psi_coordinates() const {
    const int d = dim();
    CVector coords(symmetric_dimension(d));
    int idx = 0;
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j, ++idx) coords[idx] = (i == j) ? amplitudes_(i, i) : std::sqrt(2.0) * amplitudes_(i, j);
    return coords;
}

int symmetric_dimension(int d) { return d * (d + 1) / 2; }

MappedBasis::MappedBasis(int n_qubits) : n_qubits_(n_qubits) {
    require_even(n_qubits);
    const MuTable mu = mu_table(n_qubits);
    const int d = dim();
    isometry_ = RMatrix::Zero(d * d, n_qubits + 1);
    vectors_.reserve(n_qubits + 1);
    for (int k = 0; k <= n_qubits; ++k) {
        CMatrix a = CMatrix::Zero(d, d);
        for (int i = std::max(0, k - (d - 1)); i <= std::min(k, d - 1); ++i) {
            int j = k - i;
            // diagonal: psi_ii = |ii>; off-diagonal: psi_ij splits mu_ij over |ij> and |ji>
            double amp = (i == j) ? mu(i, i) : mu(i, j) / std::sqrt(2.0);
            a(i, j) = amp;
            isometry_(i * d + j, k) = amp;
        }
        vectors_.emplace_back(a);
    }
}

BipartiteSymmetricState map_pure(const SymmetricState &state) {
    MappedBasis basis(state.n_qubits());
    CVector vec = basis.isometry().cast<Complex>() * state.coeffs();
    return BipartiteSymmetricState(vector_to_matrix(basis.dim(), vec));
}

CMatrix map_mixed(const SymmetricDensity &rho) {
    MappedBasis basis(rho.n_qubits());
    const CMatrix v = basis.isometry().cast<Complex>();
    CMatrix out = v * rho.matrix() * v.adjoint();
    return 0.5 * (out + out.adjoint());
}

QuditState separable_image(const QubitState &phi, int n_qubits) {
    require_even(n_qubits);
    const int half = n_qubits / 2;
    CVector amps(half + 1);
    for (int i = 0; i <= half; ++i) {
        amps[i] = std::sqrt(binomial_real(half, i)) * int_power(phi.a0(), half - i) * int_power(phi.a1(), i);
    }
    return QuditState(amps);
}

int SubspaceProjector::rank() const {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(matrix, Eigen::EigenvaluesOnly);
    return static_cast<int>((es.eigenvalues().array() > kProjectorRankThreshold).count());
}

SubspaceProjector swap_symmetric_projector(int d) {
    if (d < 1) throw DomainError("swap_symmetric_projector: d must be positive");
    CMatrix p = CMatrix::Identity(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) p(j * d + i, i * d + j) += 1.0;
    return {d, 0.5 * p};
}

SubspaceProjector image_projector(int n_qubits) {
    MappedBasis basis(n_qubits);
    const RMatrix &v = basis.isometry();
    return {basis.dim(), (v * v.transpose()).cast<Complex>()};
}

SubspaceProjector complement_projector(int n_qubits) {
    SubspaceProjector img = image_projector(n_qubits);
    SubspaceProjector sym = swap_symmetric_projector(img.d);
    return {img.d, sym.matrix - img.matrix};
}

Decomposition decompose(const BipartiteSymmetricState &state) { return decompose(state.dim(), state.to_vector()); }

Decomposition decompose(int d, const CVector &vec) {
    if (d < 2 || vec.size() != static_cast<Eigen::Index>(d) * d) {
        throw DomainError("decompose: expected a vector of length d^2 with d >= 2");
    }
    const SubspaceProjector sym = swap_symmetric_projector(d);
    double norm2 = vec.squaredNorm();
    if (!(norm2 > 0.0)) throw DomainError("decompose: zero vector");
    if ((sym.matrix * vec - vec).norm() > kStateNormTol * std::sqrt(norm2)) {
        throw NotSymmetric("input has weight outside the symmetric subspace");
    }
    const SubspaceProjector img = image_projector(2 * (d - 1));
    CVector tilde = img.matrix * vec;
    CVector hat = vec - tilde;
    Decomposition out;
    out.tilde = vector_to_matrix(d, tilde);
    out.hat = vector_to_matrix(d, hat);
    out.tilde_weight = tilde.squaredNorm() / norm2;
    out.hat_weight = hat.squaredNorm() / norm2;
    return out;
}

}  // namespace symmap
