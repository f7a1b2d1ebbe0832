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

#ifndef SYMMAP_SUBSPACE_HPP
#define SYMMAP_SUBSPACE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symmap/mapping.hpp"
#include "symmap/symcore.hpp"

namespace symmap {

/// Real symmetric d x d matrix with M_ii = delta_{k,2i} mu_ii and
/// M_ij = (sqrt(2)/2) delta_{k,i+j} mu_ij, so that a^T M a = <phi_k|aa>.
struct MKMatrix {
    int d;
    int k;
    RMatrix matrix;
};

std::vector<MKMatrix> mk_matrices(int n_qubits);

/// sum_k |a^T M^(k) a|^2 = <aa| Pi_image |aa> for a unit qudit vector a.
double image_overlap(const std::vector<MKMatrix> &mk, const CVector &a);

/// sum_k sigma_min(M^(k))^2 with sigma_min the smallest absolute eigenvalue.
double sigma_min_bound(int n_qubits);

/// The objective minimized by g_d: sum_k |z^T M^(k) z|^2 / |z|^4 for z = x + i y,
/// params = (x, y) of length 2d. Writes the analytic gradient when `grad` is non-null.
double image_overlap_objective(int d, const RVector &params, RVector *grad = nullptr);

struct GdOptions {
    int n_starts = 128;
    std::uint64_t seed = 0;
    /// Restrict the search to real vectors a.
    bool real_only = false;
    int max_iters = 2000;
    double grad_tol = 1e-10;
};

struct GdResult {
    double value = 0.0;
    CVector minimizer;  ///< unit norm, a_0 real and nonnegative
    int n_starts = 0;
    bool converged = false;
};

/// g_d = min over unit a in C^d of <aa| Pi_image |aa>, with N = 2(d - 1).
GdResult g_d(int d, const GdOptions &options);
GdResult g_d(int d, int n_starts = 128, std::uint64_t seed = 0);

/// (d-1)(d-2)/2.
int hat_dimension(int d);

/// Orthonormal basis of the complement subspace as columns of a d^2 x hat_dimension(d) matrix.
CMatrix hat_basis(int d);

/// Uniformly random unit vector in the complement subspace. Throws DomainError for d < 3.
BipartiteSymmetricState random_hat_state(int d, std::uint64_t seed, std::uint64_t stream = 0);

/// 1 - s_max^2 of a state in the complement subspace; throws NotInHatSubspace otherwise.
double hat_state_entanglement(const BipartiteSymmetricState &psi_hat);

/// The constant 1/2 lower bound for antisymmetric two-qudit states.
inline constexpr double kAntisymmetricBound = 0.5;

struct GdRow {
    int d;
    std::optional<double> g;  ///< empty when the complement subspace is zero-dimensional
    int hat_dim;
    double antisym_bound = kAntisymmetricBound;
};

std::vector<GdRow> gd_sweep(int d_max, int n_starts = 128, std::uint64_t seed = 0);

/// Header `d,g_d,hat_dim,antisym_bound`, LF line endings, `NA` for an undefined g_d.
std::string gd_sweep_csv(const std::vector<GdRow> &rows);

}  // namespace symmap

#endif  // SYMMAP_SUBSPACE_HPP
