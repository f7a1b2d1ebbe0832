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

#ifndef SYMMAP_SEARCH_HPP
#define SYMMAP_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symmap/symcore.hpp"

namespace symmap {

/// Entanglement proxy evaluated on the reduced state of the mapped state.
enum class Proxy { PurityDeficit, Determinant };

std::string to_string(Proxy proxy);
/// Accepts "purity" / "purity_deficit" and "det" / "determinant".
std::optional<Proxy> parse_proxy(const std::string &name);

struct SearchConfig {
    int n_qubits = 4;
    Proxy proxy = Proxy::PurityDeficit;
    int n_restarts = 200;
    std::uint64_t seed = 0;
    int max_iters = 1000;
    double ftol = 1e-13;

    /// Throws DomainError / UnsupportedParity on invalid fields.
    void validate() const;
};

/// 200 restarts up to N = 12, 500 above.
int default_restarts(int n_qubits);

struct SearchRecord {
    SearchConfig config;
    std::vector<double> omega_star;  ///< unit norm, length N + 1
    double proxy_value = 0.0;
    double geometric_value = 0.0;
    double lower_bound = 0.0;  ///< 1 - s_max^2 of the mapped optimum
    int n_converged = 0;       ///< restarts whose local ascent met its stopping rule
    int plateau_size = 0;      ///< restarts tied with the best proxy value
    double wall_time = 0.0;    ///< seconds; not part of the reproducible payload
};

/// Proxy value of the mapped state of sum_k omega_k |D_N^k>, omega normalized internally.
double proxy_value(Proxy proxy, int n_qubits, const std::vector<double> &omega);

/// Multi-restart maximization of the proxy over real unit vectors omega, then
/// rescoring of the optimum with the geometric measure. Restarts that tie the
/// best proxy value within a relative 1e-6 form the plateau; the plateau member
/// with the largest geometric measure is reported.
SearchRecord optimize_proxy(const SearchConfig &config);

struct BothProxiesResult {
    SearchRecord purity;
    SearchRecord determinant;
    const SearchRecord &best() const {
        return determinant.geometric_value > purity.geometric_value ? determinant : purity;
    }
};

/// Runs both proxies with the same restart count and seed.
BothProxiesResult optimize_both_proxies(int n_qubits, int n_restarts, std::uint64_t seed);

/// Published optimal omega vectors for N = 4, 6, ..., 30, renormalized.
std::vector<double> published_omega(int n_qubits);

/// Published geometric measure of the state built from published_omega(N).
double tabulated_omega_measure(int n_qubits);

std::vector<int> omega_tabulated_sizes();

/// Geometric measure of the state built from published_omega(N).
double verify_published(int n_qubits, std::uint64_t seed = 0);

}  // namespace symmap

#endif  // SYMMAP_SEARCH_HPP
