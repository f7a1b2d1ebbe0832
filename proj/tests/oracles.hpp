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

#ifndef SYMMAP_TESTS_ORACLES_HPP
#define SYMMAP_TESTS_ORACLES_HPP

// Reference computations that avoid the library's own formulas: explicit
// 2^N state vectors, log-gamma binomials and brute-force grids.

#include <bit>
#include <cmath>
#include <random>
#include <vector>

#include "symmap/symcore.hpp"

namespace oracle {

using symmap::CMatrix;
using symmap::Complex;
using symmap::CVector;

inline double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

/// Normalized Dicke state of n qubits as a 2^n vector, qubit 0 is the most significant bit.
inline CVector dicke_vector(int n, int k) {
    CVector v = CVector::Zero(std::size_t{1} << n);
    for (std::size_t x = 0; x < v.size(); ++x)
        if (std::popcount(x) == k) v[x] = 1.0;
    return v / v.norm();
}

inline CVector expand(const CVector &dicke_coeffs) {
    const int n = static_cast<int>(dicke_coeffs.size()) - 1;
    CVector v = CVector::Zero(std::size_t{1} << n);
    for (int k = 0; k <= n; ++k) v += dicke_coeffs[k] * dicke_vector(n, k);
    return v;
}

/// Coefficients of a 2^N vector in the product basis D_h^i (x) D_h^j of the
/// two halves (first N/2 qubits, last N/2 qubits).
inline CMatrix half_dicke_coefficients(const CVector &full, int n) {
    const int h = n / 2, d = h + 1;
    CMatrix a(d, d);
    for (int i = 0; i < d; ++i) {
        CVector left = dicke_vector(h, i);
        for (int j = 0; j < d; ++j) {
            CVector right = dicke_vector(h, j);
            Complex s = 0.0;
            for (Eigen::Index x = 0; x < left.size(); ++x) {
                if (left[x] == 0.0) continue;
                for (Eigen::Index y = 0; y < right.size(); ++y) {
                    if (right[y] == 0.0) continue;
                    s += left[x] * right[y] * full[(x << h) | y];
                }
            }
            a(i, j) = s;
        }
    }
    return a;
}

/// |<phi^{(x)n}|psi>|^2 evaluated as an explicit 2^n inner product.
inline double product_overlap_squared(const CVector &full, int n, Complex a0, Complex a1) {
    Complex s = 0.0;
    for (Eigen::Index x = 0; x < full.size(); ++x) {
        int ones = std::popcount(static_cast<std::size_t>(x));
        Complex amp = symmap::int_power(a0, n - ones) * symmap::int_power(a1, ones);
        s += std::conj(amp) * full[x];
    }
    return std::norm(s);
}

/// max over a theta x phi grid followed by successive local grid refinement.
inline double grid_max_overlap(const CVector &dicke_coeffs, int grid = 400, int refinements = 6) {
    const int n = static_cast<int>(dicke_coeffs.size()) - 1;
    std::vector<double> weight(n + 1);
    for (int k = 0; k <= n; ++k) weight[k] = std::exp(0.5 * log_binomial(n, k));
    auto f = [&](double t, double p) {
        Complex c = std::cos(t / 2), s = std::sin(t / 2) * std::exp(Complex(0, p));
        Complex sum = 0.0;
        for (int k = 0; k <= n; ++k)
            sum += weight[k] * std::conj(symmap::int_power(c, n - k) * symmap::int_power(s, k)) * dicke_coeffs[k];
        return std::norm(sum);
    };
    double best = -1, bt = 0, bp = 0;
    for (int a = 0; a <= grid; ++a)
        for (int b = 0; b < grid; ++b) {
            double t = M_PI * a / grid, p = 2 * M_PI * b / grid;
            double v = f(t, p);
            if (v > best) best = v, bt = t, bp = p;
        }
    double ht = M_PI / grid, hp = 2 * M_PI / grid;
    for (int r = 0; r < refinements; ++r) {
        double ct = bt, cp = bp;
        for (int a = -20; a <= 20; ++a)
            for (int b = -20; b <= 20; ++b) {
                double t = ct + ht * a / 10, p = cp + hp * b / 10;
                double v = f(t, p);
                if (v > best) best = v, bt = t, bp = p;
            }
        ht /= 10;
        hp /= 10;
    }
    return best;
}

inline CVector random_complex(std::mt19937_64 &rng, int size) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CVector v(size);
    for (int i = 0; i < size; ++i) v[i] = Complex(normal(rng), normal(rng));
    return v / v.norm();
}

}  // namespace oracle

#endif  // SYMMAP_TESTS_ORACLES_HPP
