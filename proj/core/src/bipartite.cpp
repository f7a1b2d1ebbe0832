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

#include "symmap/bipartite.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <string>

#include "symmap/errors.hpp"

namespace symmap {

CMatrix reduced_state(const BipartiteSymmetricState &psi) {
    const CMatrix &a = psi.amplitudes();
    return a * a.adjoint();
}

SchmidtData schmidt(const BipartiteSymmetricState &psi, double tau) {
    Eigen::JacobiSVD<CMatrix> svd(psi.amplitudes());
    SchmidtData out;
    out.coefficients = svd.singularValues();  // Eigen sorts descending
    out.tolerance = tau;
    const double cut = tau * out.max_coefficient();
    out.rank = static_cast<int>((out.coefficients.array() > cut).count());
    return out;
}

int mapped_dicke_rank(int n_qubits, int k) {
    if (n_qubits % 2 != 0) throw UnsupportedParity(n_qubits);
    if (k < 0 || k > n_qubits) {
        throw DomainError("mapped_dicke_rank: k=" + std::to_string(k) + " outside [0, N]");
    }
    return (2 * k <= n_qubits) ? k + 1 : n_qubits - k + 1;
}

int dicke_symmetric_tensor_rank(int n_qubits, int k) {
    if (k < 0 || 2 * k > n_qubits) {
        throw DomainError("dicke_symmetric_tensor_rank: known only for 0 <= k <= N/2");
    }
    return n_qubits - k + 1;
}

CMatrix partial_transpose(const CMatrix &rho, int d) {
    CMatrix out(d * d, d * d);
    // <i j| rho^{T_B} |k l> = <i l| rho |k j>
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) out(i * d + j, k * d + l) = rho(i * d + l, k * d + j);
    return out;
}

namespace {

int validate_bipartite_density(const CMatrix &rho) {
    const auto n = rho.rows();
    int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    if (rho.cols() != n || d < 1 || static_cast<Eigen::Index>(d) * d != n) {
        throw InvalidDensity("expected a square d^2 x d^2 matrix");
    }
    if ((rho - rho.adjoint()).norm() > kStateNormTol) throw InvalidDensity("matrix is not Hermitian");
    if (std::abs(rho.trace() - Complex(1.0)) > kStateNormTol) throw InvalidDensity("trace is not 1");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPsdFloor) throw InvalidDensity("matrix is not positive semidefinite");
    return d;
}

double min_pt_eigenvalue(const CMatrix &rho, int d) {
    CMatrix pt = partial_transpose(rho, d);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (pt + pt.adjoint()), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

}  // namespace

PptResult ppt_is_entangled(const CMatrix &rho) {
    int d = validate_bipartite_density(rho);
    PptResult out;
    out.min_eigenvalue = min_pt_eigenvalue(rho, d);
    out.entangled = out.min_eigenvalue < -kPsdFloor;
    return out;
}

ThresholdResult ppt_threshold(const DensityFamily &family, double lo, double hi) {
    if (!(lo < hi)) throw BracketError("need lo < hi");
    PptResult at_lo = ppt_is_entangled(family(lo));
    PptResult at_hi = ppt_is_entangled(family(hi));
    if (at_lo.entangled || !at_hi.entangled) {
        throw BracketError("interval [" + std::to_string(lo) + ", " + std::to_string(hi) +
                           "] does not bracket the PPT crossing (lo " + (at_lo.entangled ? "NPT" : "PPT") +
                           ", hi " + (at_hi.entangled ? "NPT" : "PPT") + ")");
    }
    ThresholdResult out;
    while (hi - lo > kBisectionWidth) {
        double mid = 0.5 * (lo + hi);
        PptResult r = ppt_is_entangled(family(mid));
        out.trace.push_back({lo, hi, mid, r.min_eigenvalue});
        if (r.entangled) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    out.threshold = 0.5 * (lo + hi);
    return out;
}

double purity_deficit(const CMatrix &rho) { return 1.0 - (rho * rho).trace().real(); }

double det_measure(const CMatrix &rho) { return rho.determinant().real(); }

double bipartite_geometric_measure(const BipartiteSymmetricState &psi) {
    double s = schmidt(psi).max_coefficient();
    return 1.0 - s * s;
}

}  // namespace symmap
