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

#ifndef SYMMAP_SYMCORE_HPP
#define SYMMAP_SYMCORE_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace symmap {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

inline constexpr double kStateNormTol = 1e-10;
inline constexpr double kScalarTol = 1e-12;
inline constexpr int kMaxBinomialN = 64;

/// base^exponent by repeated multiplication; 0^0 = 1 (std::pow on complex gives NaN there).
inline Complex int_power(Complex base, int exponent) {
    Complex result = 1.0;
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

/// Exact C(n, k). Returns 0 for k < 0 or k > n. Throws OverflowError for n > 64.
std::uint64_t binomial(int n, int k);

/// C(n, k) converted to double after exact evaluation.
double binomial_real(int n, int k);

/// Pure N-qubit permutation-symmetric state in the Dicke basis |D_N^k>, k = 0..N.
class SymmetricState {
   public:
    /// Validates length N+1 and unit norm (within kStateNormTol).
    SymmetricState(int n_qubits, CVector coeffs);

    /// Rescales `coeffs` to unit norm. Throws DomainError on a zero vector.
    static SymmetricState normalized(CVector coeffs);

    int n_qubits() const noexcept { return n_qubits_; }
    const CVector &coeffs() const noexcept { return coeffs_; }
    Complex operator[](int k) const { return coeffs_[k]; }

   private:
    int n_qubits_;
    CVector coeffs_;
};

/// Single-qubit state a0|0> + a1|1>.
class QubitState {
   public:
    QubitState(Complex a0, Complex a1);

    /// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
    static QubitState from_bloch(double theta, double phi);

    Complex a0() const noexcept { return a0_; }
    Complex a1() const noexcept { return a1_; }

   private:
    Complex a0_;
    Complex a1_;
};

/// Single-qudit state sum_i a_i |i>, i = 0..d-1.
class QuditState {
   public:
    explicit QuditState(CVector amps);

    int dim() const noexcept { return static_cast<int>(amps_.size()); }
    const CVector &amps() const noexcept { return amps_; }

   private:
    CVector amps_;
};

/// Mapping factors mu_ij for 0 <= i <= j <= N/2; stored as a full symmetric matrix.
struct MuTable {
    int n_qubits;
    RMatrix values;

    double operator()(int i, int j) const { return values(i, j); }
};

/// Throws UnsupportedParity for odd N and DomainError for N < 2.
MuTable mu_table(int n_qubits);

/// sum over i <= j with i + j = k of mu_ij^2. Equals 1 for every 0 <= k <= N.
double f_norm(int k, int n_qubits);

/// <Phi^{(x)N} | Psi>.
Complex product_overlap(const SymmetricState &state, const QubitState &phi);

/// Dicke-basis coefficients of |Phi>^{(x)N}.
SymmetricState product_state(const QubitState &phi, int n_qubits);

SymmetricState dicke(int n_qubits, int k);
SymmetricState ghz(int n_qubits);
SymmetricState w_state(int n_qubits);

/// Mixed state on the N-qubit symmetric subspace, Hermitian (N+1)x(N+1) in the Dicke basis.
class SymmetricDensity {
   public:
    /// Throws InvalidDensity unless Hermitian, unit trace, and PSD above -1e-10.
    SymmetricDensity(int n_qubits, CMatrix matrix);

    static SymmetricDensity pure(const SymmetricState &state);
    /// Pi_S / (N+1).
    static SymmetricDensity maximally_mixed(int n_qubits);

    int n_qubits() const noexcept { return n_qubits_; }
    const CMatrix &matrix() const noexcept { return matrix_; }

   private:
    int n_qubits_;
    CMatrix matrix_;
};

/// p |Psi><Psi| + (1 - p) Pi_S / (N+1), 0 <= p <= 1.
SymmetricDensity noisy_mixture(const SymmetricState &state, double p);

/// The W-state mixture rho_p = p |W><W| + (1 - p) Pi_S / (N+1).
SymmetricDensity w_mixture(int n_qubits, double p);

}  // namespace symmap

#endif  // SYMMAP_SYMCORE_HPP
