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

#ifndef SYMMAP_GEOMEASURE_HPP
#define SYMMAP_GEOMEASURE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "symmap/symcore.hpp"

namespace symmap {

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, theta in [0, pi], phi in [0, 2 pi).
struct BlochPoint {
    double theta = 0.0;
    double phi = 0.0;

    /// Folds arbitrary real angles into the canonical ranges describing the same ray.
    static BlochPoint canonical(double theta, double phi);

    QubitState qubit() const { return QubitState::from_bloch(theta, phi); }

    friend bool operator<(const BlochPoint &a, const BlochPoint &b) {
        return a.theta < b.theta || (a.theta == b.theta && a.phi < b.phi);
    }
};

/// F(theta, phi) = |<Phi(theta, phi)^{(x)N} | Psi>|^2 and its analytic gradient.
class OverlapLandscape {
   public:
    explicit OverlapLandscape(const SymmetricState &state);

    double value(double theta, double phi) const;
    double value_and_gradient(double theta, double phi, std::array<double, 2> &grad) const;

   private:
    int n_;
    CVector weighted_;  // sqrt(C(N,k)) c_k
};

struct GeometricOptions {
    int lattice_starts = 64;
    int random_starts = 16;
    std::uint64_t seed = 0;
    int max_iters = 500;
    double grad_tol = 1e-10;
};

struct GeometricResult {
    double value = 0.0;  ///< E = 1 - max F
    BlochPoint argmax;
    int n_starts = 0;
    bool converged = false;
};

/// Points i = 0..n-1 of a Fibonacci lattice on the Bloch sphere.
std::vector<BlochPoint> fibonacci_lattice(int n);

/// Multi-start local maximization of F over symmetric product states.
GeometricResult geometric_measure(const SymmetricState &state, const GeometricOptions &options);
GeometricResult geometric_measure(const SymmetricState &state, int n_starts = 64, std::uint64_t seed = 0);

/// 1 - s_max^2 of the mapped state; a lower bound on E. Even N only.
double mapped_lower_bound(const SymmetricState &state);

/// 1 - 1/(N+1), the largest E any N-qubit symmetric state can have.
double symmetric_measure_upper_bound(int n_qubits);

/// Previously published candidates for maximally entangled symmetric states,
/// N in {4, 6, 8, 10, 12, 20}. Throws NotTabulated otherwise.
SymmetricState mes_candidate(int n_qubits);

/// Published geometric measure of mes_candidate(N) (3 decimals).
double tabulated_mes_measure(int n_qubits);

/// The N values for which mes_candidate is defined.
std::vector<int> mes_tabulated_sizes();

}  // namespace symmap

#endif  // SYMMAP_GEOMEASURE_HPP
