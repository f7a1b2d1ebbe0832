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

#include "symmap/symcore.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <string>

#include "symmap/errors.hpp"

namespace symmap {

std::uint64_t binomial(int n, int k) {
    if (n < 0) {
        throw DomainError("binomial: n must be nonnegative, got " + std::to_string(n));
    }
    if (n > kMaxBinomialN) {
        throw OverflowError("binomial: n=" + std::to_string(n) + " exceeds the exact range n <= 64");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    // Each partial product C(n, i+1) is an integer, and C(64, 32) < 2^64; the
    // 128-bit intermediate holds result * (n - i) before the exact division.
    __extension__ using u128 = unsigned __int128;
    u128 result = 1;
    for (int i = 0; i < k; ++i) {
        result = result * static_cast<unsigned>(n - i) / static_cast<unsigned>(i + 1);
    }
    if (result > std::numeric_limits<std::uint64_t>::max()) {
        throw OverflowError("binomial: result does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(result);
}

double binomial_real(int n, int k) { return static_cast<double>(binomial(n, k)); }

SymmetricState::SymmetricState(int n_qubits, CVector coeffs) : n_qubits_(n_qubits), coeffs_(std::move(coeffs)) {
    if (n_qubits_ < 1) {
        throw DomainError("SymmetricState: N must be positive, got " + std::to_string(n_qubits_));
    }
    if (coeffs_.size() != n_qubits_ + 1) {
        throw DomainError("SymmetricState: expected " + std::to_string(n_qubits_ + 1) + " coefficients, got " +
                          std::to_string(coeffs_.size()));
    }
    double norm = coeffs_.norm();
    if (!std::isfinite(norm) || std::abs(norm * norm - 1.0) > kStateNormTol) {
        throw DomainError("SymmetricState: coefficients are not normalized (|c|^2 = " +
                          std::to_string(norm * norm) + ")");
    }
}

SymmetricState SymmetricState::normalized(CVector coeffs) {
    double norm = coeffs.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw DomainError("SymmetricState: cannot normalize a zero or non-finite vector");
    }
    int n = static_cast<int>(coeffs.size()) - 1;
    return SymmetricState(n, coeffs / norm);
}

QubitState::QubitState(Complex a0, Complex a1) : a0_(a0), a1_(a1) {
    double n2 = std::norm(a0_) + std::norm(a1_);
    if (std::abs(n2 - 1.0) > kScalarTol) {
        throw DomainError("QubitState: |a0|^2 + |a1|^2 = " + std::to_string(n2) + " != 1");
    }
}

QubitState QubitState::from_bloch(double theta, double phi) {
    return QubitState(std::cos(theta / 2), std::polar(std::sin(theta / 2), phi));
}

QuditState::QuditState(CVector amps) : amps_(std::move(amps)) {
    if (amps_.size() < 1) {
        throw DomainError("QuditState: dimension must be positive");
    }
    double n2 = amps_.squaredNorm();
    if (std::abs(n2 - 1.0) > kScalarTol) {
        throw DomainError("QuditState: squared norm " + std::to_string(n2) + " != 1");
    }
}

MuTable mu_table(int n_qubits) {
    if (n_qubits % 2 != 0) {
        throw UnsupportedParity(n_qubits);
    }
    if (n_qubits < 2) {
        throw DomainError("mu_table: N must be at least 2, got " + std::to_string(n_qubits));
    }
    const int half = n_qubits / 2;
    const int d = half + 1;
    MuTable table{n_qubits, RMatrix::Zero(d, d)};
    for (int i = 0; i < d; ++i) {
        table.values(i, i) = binomial_real(half, i) / std::sqrt(binomial_real(n_qubits, 2 * i));
        for (int j = i + 1; j < d; ++j) {
            // The ratio is formed in exact integers where possible before the square root.
            double num = 2.0 * binomial_real(half, i) * binomial_real(half, j);
            double mu = std::sqrt(num / binomial_real(n_qubits, i + j));
            table.values(i, j) = mu;
            table.values(j, i) = mu;
        }
    }
    return table;
}

double f_norm(int k, int n_qubits) {
    if (k < 0 || k > n_qubits) {
        throw DomainError("f_norm: k=" + std::to_string(k) + " outside [0, " + std::to_string(n_qubits) + "]");
    }
    MuTable mu = mu_table(n_qubits);
    const int d = n_qubits / 2 + 1;
    double sum = 0.0;
    for (int i = 0; i < d; ++i) {
        int j = k - i;
        if (j >= i && j < d) {
            sum += mu(i, j) * mu(i, j);
        }
    }
    return sum;
}

namespace {

// sqrt(C(N,k)) a0^{N-k} a1^k, the Dicke coefficients of |Phi>^{(x)N}.
CVector product_coefficients(const QubitState &phi, int n) {
    CVector out(n + 1);
    for (int k = 0; k <= n; ++k) {
        out[k] = std::sqrt(binomial_real(n, k)) * int_power(phi.a0(), n - k) * int_power(phi.a1(), k);
    }
    return out;
}

}  // namespace

Complex product_overlap(const SymmetricState &state, const QubitState &phi) {
    // adjoint-linear in the first slot: dot() conjugates its left operand.
    return product_coefficients(phi, state.n_qubits()).dot(state.coeffs());
}

SymmetricState product_state(const QubitState &phi, int n_qubits) {
    return SymmetricState::normalized(product_coefficients(phi, n_qubits));
}

SymmetricState dicke(int n_qubits, int k) {
    if (n_qubits < 1 || k < 0 || k > n_qubits) {
        throw DomainError("dicke: need 0 <= k <= N with N >= 1, got N=" + std::to_string(n_qubits) +
                          ", k=" + std::to_string(k));
    }
    CVector c = CVector::Zero(n_qubits + 1);
    c[k] = 1.0;
    return SymmetricState(n_qubits, c);
}

SymmetricState ghz(int n_qubits) {
    if (n_qubits < 1) {
        throw DomainError("ghz: N must be positive");
    }
    CVector c = CVector::Zero(n_qubits + 1);
    c[0] = c[n_qubits] = 1.0 / std::sqrt(2.0);
    return SymmetricState(n_qubits, c);
}

SymmetricState w_state(int n_qubits) { return dicke(n_qubits, 1); }

SymmetricDensity::SymmetricDensity(int n_qubits, CMatrix matrix) : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
    const int dim = n_qubits_ + 1;
    if (n_qubits_ < 1 || matrix_.rows() != dim || matrix_.cols() != dim) {
        throw InvalidDensity("expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    }
    if ((matrix_ - matrix_.adjoint()).norm() > kStateNormTol) {
        throw InvalidDensity("matrix is not Hermitian");
    }
    Complex tr = matrix_.trace();
    if (std::abs(tr - 1.0) > kStateNormTol) {
        throw InvalidDensity("trace is " + std::to_string(tr.real()) + ", expected 1");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(matrix_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kStateNormTol) {
        throw InvalidDensity("matrix has negative eigenvalue " + std::to_string(es.eigenvalues().minCoeff()));
    }
}

SymmetricDensity SymmetricDensity::pure(const SymmetricState &state) {
    const CVector &c = state.coeffs();
    return SymmetricDensity(state.n_qubits(), c * c.adjoint());
}

SymmetricDensity SymmetricDensity::maximally_mixed(int n_qubits) {
    if (n_qubits < 1) {
        throw InvalidDensity("N must be positive");
    }
    return SymmetricDensity(n_qubits, CMatrix::Identity(n_qubits + 1, n_qubits + 1) / double(n_qubits + 1));
}

SymmetricDensity noisy_mixture(const SymmetricState &state, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("noisy_mixture: p must lie in [0, 1], got " + std::to_string(p));
    }
    const int n = state.n_qubits();
    CMatrix m = p * SymmetricDensity::pure(state).matrix() +
                (1.0 - p) * SymmetricDensity::maximally_mixed(n).matrix();
    return SymmetricDensity(n, m);
}

SymmetricDensity w_mixture(int n_qubits, double p) { return noisy_mixture(w_state(n_qubits), p); }

}  // namespace symmap
