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

#ifndef SYMMAP_BIPARTITE_HPP
#define SYMMAP_BIPARTITE_HPP

#include <functional>
#include <vector>

#include "symmap/mapping.hpp"
#include "symmap/symcore.hpp"

namespace symmap {

inline constexpr double kDefaultSchmidtTol = 1e-8;
inline constexpr double kPsdFloor = 1e-10;

struct SchmidtData {
    RVector coefficients;  ///< descending, squares sum to 1
    int rank = 0;
    double tolerance = kDefaultSchmidtTol;

    double max_coefficient() const { return coefficients.size() ? coefficients[0] : 0.0; }
};

/// rho_A = tr_B |psi><psi| = A A^dagger.
CMatrix reduced_state(const BipartiteSymmetricState &psi);

/// Singular values of the amplitude matrix. A value counts toward the rank
/// when it exceeds tau * s_1.
SchmidtData schmidt(const BipartiteSymmetricState &psi, double tau = kDefaultSchmidtTol);

/// Closed-form Schmidt rank of M(|D_N^k>): k+1 for k <= N/2, N-k+1 above.
int mapped_dicke_rank(int n_qubits, int k);

/// Symmetric tensor rank of |D_N^k> for k <= N/2, N - k + 1. Known constant, not computed.
int dicke_symmetric_tensor_rank(int n_qubits, int k);

/// Transposes the second subsystem of a d^2 x d^2 operator.
CMatrix partial_transpose(const CMatrix &rho, int d);

struct PptResult {
    bool entangled = false;
    double min_eigenvalue = 0.0;
};

/// Throws InvalidDensity if rho is not a valid d^2 x d^2 density matrix.
/// Entangled iff the partial transpose has an eigenvalue below -1e-10.
PptResult ppt_is_entangled(const CMatrix &rho);

using DensityFamily = std::function<CMatrix(double)>;

struct BracketStep {
    double lo;
    double hi;
    double mid;
    double min_eigenvalue;
};

struct ThresholdResult {
    double threshold = 0.0;
    std::vector<BracketStep> trace;
};

inline constexpr double kBisectionWidth = 1e-5;

/// Bisection for the PPT/NPT crossing of p -> rho(p). Requires rho(lo) PPT and
/// rho(hi) NPT (BracketError otherwise); assumes a single crossing in between.
ThresholdResult ppt_threshold(const DensityFamily &family, double lo, double hi);

/// 1 - tr(rho^2).
double purity_deficit(const CMatrix &rho);

/// det(rho), real part.
double det_measure(const CMatrix &rho);

/// 1 - s_max^2.
double bipartite_geometric_measure(const BipartiteSymmetricState &psi);

}  // namespace symmap

#endif  // SYMMAP_BIPARTITE_HPP
