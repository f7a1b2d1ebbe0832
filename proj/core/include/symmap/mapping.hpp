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

#ifndef SYMMAP_MAPPING_HPP
#define SYMMAP_MAPPING_HPP

#include <vector>

#include "symmap/symcore.hpp"

namespace symmap {

/// Pure two-qudit state sum_ij A_ij |ij> with a symmetric amplitude matrix A = A^T.
///
/// The orthonormal basis psi_ij (i <= j) of the two-qudit symmetric subspace
/// is a view on A: psi_ii = |ii> carries A_ii directly, and psi_ij for i < j
/// has coordinate sqrt(2) A_ij. Coordinates are ordered lexicographically in
/// (i, j), i <= j.
class BipartiteSymmetricState {
   public:
    /// Throws NotSymmetric unless A = A^T within 1e-10, DomainError unless unit norm.
    explicit BipartiteSymmetricState(CMatrix amplitudes);

    /// Builds a state from its psi_ij coordinates (length d(d+1)/2).
    static BipartiteSymmetricState from_psi_coordinates(int d, const CVector &coords);

    /// Checks the symmetry of a vector in C^d (x) C^d, index i*d + j, then normalizes it.
    static BipartiteSymmetricState from_product_vector(int d, const CVector &vec);

    /// The basis state psi_ij.
    static BipartiteSymmetricState psi(int d, int i, int j);

    /// phi (x) phi.
    static BipartiteSymmetricState product(const QuditState &phi);

    int dim() const noexcept { return static_cast<int>(amplitudes_.rows()); }
    const CMatrix &amplitudes() const noexcept { return amplitudes_; }

    /// Vector in C^d (x) C^d with index i*d + j.
    CVector to_vector() const;

    CVector psi_coordinates() const;

   private:
    CMatrix amplitudes_;
};

/// Number of psi_ij basis states, d(d+1)/2.
int symmetric_dimension(int d);

/// The images M(|D_N^k>), k = 0..N, in the two-qudit space with d = N/2 + 1.
class MappedBasis {
   public:
    explicit MappedBasis(int n_qubits);

    int n_qubits() const noexcept { return n_qubits_; }
    int dim() const noexcept { return n_qubits_ / 2 + 1; }
    const std::vector<BipartiteSymmetricState> &vectors() const noexcept { return vectors_; }
    const BipartiteSymmetricState &operator[](int k) const { return vectors_[k]; }

    /// The d^2 x (N+1) isometry V whose k-th column is M(|D_N^k>).
    const RMatrix &isometry() const noexcept { return isometry_; }

   private:
    int n_qubits_;
    std::vector<BipartiteSymmetricState> vectors_;
    RMatrix isometry_;
};

/// M(|Psi>) = sum_k c_k M(|D_N^k>). Throws UnsupportedParity for odd N.
BipartiteSymmetricState map_pure(const SymmetricState &state);

/// V rho V^dagger as a d^2 x d^2 density matrix.
CMatrix map_mixed(const SymmetricDensity &rho);

/// The qudit phi with M(|Phi>^{(x)N}) = phi (x) phi.
QuditState separable_image(const QubitState &phi, int n_qubits);

/// Orthogonal projector on C^d (x) C^d.
struct SubspaceProjector {
    int d;
    CMatrix matrix;

    double trace() const { return matrix.trace().real(); }
    /// Eigenvalues above 1e-8.
    int rank() const;
};

inline constexpr double kProjectorRankThreshold = 1e-8;

/// Pi_S = (1 + SWAP) / 2 on two qudits.
SubspaceProjector swap_symmetric_projector(int d);

/// Projector onto the image of the mapping, rank N + 1.
SubspaceProjector image_projector(int n_qubits);

/// Pi_S - Pi_image, rank (d-1)(d-2)/2.
SubspaceProjector complement_projector(int n_qubits);

/// Split of a symmetric two-qudit state into image and complement parts.
struct Decomposition {
    CMatrix tilde;  ///< amplitude matrix of Pi_image psi (unnormalized)
    CMatrix hat;    ///< amplitude matrix of Pi_complement psi (unnormalized)
    double tilde_weight = 0.0;
    double hat_weight = 0.0;
};

Decomposition decompose(const BipartiteSymmetricState &state);

/// As above for a raw d^2 vector; throws NotSymmetric if Pi_S psi != psi within 1e-10.
Decomposition decompose(int d, const CVector &vec);

}  // namespace symmap

#endif  // SYMMAP_MAPPING_HPP
