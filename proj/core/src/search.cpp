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

#include "symmap/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>

#include "symmap/errors.hpp"
#include "symmap/geomeasure.hpp"
#include "symmap/mapping.hpp"
#include "symmap/optimize.hpp"
#include "symmap/parallel.hpp"

namespace symmap {

namespace {

constexpr double kGradientStep = 1e-7;
constexpr double kPlateauTol = 1e-6;
constexpr double kTieTol = 1e-12;

// Real symmetric amplitude matrix of M(sum_k omega_k |D_N^k>) for unnormalized omega.
class ProxyEvaluator {
   public:
    explicit ProxyEvaluator(int n_qubits) : n_(n_qubits), d_(n_qubits / 2 + 1), weights_(d_, d_) {
        MappedBasis basis(n_qubits);
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j) weights_(i, j) = basis.isometry()(i * d_ + j, i + j);
    }

    RMatrix amplitudes(const RVector &omega) const {
        RMatrix a(d_, d_);
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j) a(i, j) = weights_(i, j) * omega[i + j];
        return a;
    }

    // rho_A = A A^T = A^2 for the normalized state
    double purity_deficit(const RVector &omega) const {
        const double n2 = omega.squaredNorm();
        RMatrix a = amplitudes(omega);
        RMatrix rho = a * a;
        return 1.0 - rho.squaredNorm() / (n2 * n2);
    }

    double determinant(const RVector &omega) const {
        const double n2 = omega.squaredNorm();
        double det_a = amplitudes(omega).determinant();
        return det_a * det_a / std::pow(n2, d_);
    }

    // Objective actually ascended for the determinant proxy; same maximizers,
    // but stays O(1) where det itself underflows toward 1e-20 at large N.
    double log_determinant(const RVector &omega) const {
        const double n2 = omega.squaredNorm();
        double det_a = std::abs(amplitudes(omega).determinant());
        if (!(det_a > 0.0)) return -1e300;
        return 2.0 * std::log(det_a) - d_ * std::log(n2);
    }

    double value(Proxy proxy, const RVector &omega) const {
        return proxy == Proxy::PurityDeficit ? purity_deficit(omega) : determinant(omega);
    }

    double ascent_objective(Proxy proxy, const RVector &omega) const {
        return proxy == Proxy::PurityDeficit ? purity_deficit(omega) : log_determinant(omega);
    }

   private:
    int n_;
    int d_;
    RMatrix weights_;
};

struct RestartOutcome {
    RVector omega;
    double proxy;
    bool converged;
};

bool lexicographically_less(const std::vector<double> &a, const std::vector<double> &b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// omega and -omega give the same state up to phase; fix the sign of the first
// significant component so equal optima serialize identically.
std::vector<double> canonical_sign(const RVector &omega) {
    RVector w = omega / omega.norm();
    for (Eigen::Index k = 0; k < w.size(); ++k) {
        if (std::abs(w[k]) > 1e-12) {
            if (w[k] < 0) w = -w;
            break;
        }
    }
    return {w.data(), w.data() + w.size()};
}

const std::map<int, std::vector<double>> &published_table() {
    static const std::map<int, std::vector<double>> table = {
        {4, {0.507, -0.343, -0.321, -0.641, 0.332}},
        {6, {-0.433, -0.004, -0.559, 0.020, 0.559, -0.004, 0.433}},
        {8, {-0.035, 0.287, -0.642, -0.310, -0.089, 0.022, -0.230, 0.564, 0.170}},
        {10, {0.203, -0.462, -0.177, -0.237, 0.0324, 0.515, -0.205, 0.226, 0.296, 0.359, -0.285}},
        {12, {-0.009, 0.337, 0.103, 0.389, -0.154, -0.315, 0.076, 0.181, -0.330, 0.126, 0.524, 0.403, 0.033}},
        {14, {0.279, -0.094, 0.337, 0.359, -0.172, 0.035, -0.248, 0.395, 0.248, 0.035, 0.172, 0.359, -0.337, -0.094,
              -0.279}},
        {16, {0.265, -0.017, 0.363, -0.095, -0.322, -0.206, 0.038, -0.349, 0.285, -0.024, -0.266, -0.336, -0.156,
              0.182, -0.237, 0.288, 0.240}},
        {18, {0.101, 0.392, -0.138, -0.015, 0.002, 0.427, 0.113, 0.057, 0.287, -0.332, -0.039, 0.051, 0.380, 0.053,
              0.039, 0.415, -0.130, -0.079, -0.277}},
        {20, {0.007, -0.41, -0.019, -0.051, 0.02, -0.34, 0.143, 0.352, 0.041, 0.318, -0.081, 0.003, 0.076, 0.257,
              -0.391, -0.213, -0.108, -0.138, 0.21, -0.277, -0.194}},
        {22, {-0.22, -0.167, 0.302, 0.024, 0.245, -0.023, 0.201, 0.299, -0.148, -0.283, 0.162, -0.052, 0.293, -0.003,
              0.254, 0.272, -0.074, -0.24, 0.259, 0.011, 0.298, 0.159, -0.203}},
        {24, {0.193, -0.113, 0.296, 0.265, -0.001, -0.149, 0.083, -0.229, 0.205, -0.176, -0.395, -0.145, 0.003, 0.109,
              -0.128, 0.257, -0.201, 0.029, 0.338, 0.242, -0.003, 0.093, -0.208, 0.265, 0.176}},
        {26, {0.193, 0.034, -0.347, -0.08, 0.162, 0.03, -0.057, -0.324, 0.064, -0.362, -0.097, 0.175, 0.084, -0.094,
              0.004, -0.013, 0.476, 0.016, 0.092, 0.156, -0.16, -0.069, -0.014, 0.405, -0.013, 0.056, 0.222}},
        {28, {0.063, -0.325, -0.097, -0.042, 0.123, -0.242, 0.191, 0.338, 0.073, 0.159, -0.147, 0.029, -0.035, 0.249,
              -0.173, 0.04, 0.402, 0.139, 0.022, 0.056, -0.242, -0.01, -0.089, 0.135, -0.362, -0.207, 0.087, -0.037,
              0.234}},
        {30, {-0.122, -0.275, 0.168, -0.066, -0.135, -0.198, -0.103, -0.233, 0.334, 0.051, -0.168, -0.003, -0.097,
              -0.022, -0.28, -0.037, -0.299, 0.099, 0.273, -0.081, -0.172, 0.025, -0.253, -0.021, -0.304, 0.051, 0.18,
              -0.044, -0.266, 0.011, -0.216}},
    };
    return table;
}

}  // namespace

std::string to_string(Proxy proxy) { return proxy == Proxy::PurityDeficit ? "purity_deficit" : "determinant"; }

std::optional<Proxy> parse_proxy(const std::string &name) {
    if (name == "purity" || name == "purity_deficit") return Proxy::PurityDeficit;
    if (name == "det" || name == "determinant") return Proxy::Determinant;
    return std::nullopt;
}

void SearchConfig::validate() const {
    if (n_qubits % 2 != 0) throw UnsupportedParity(n_qubits);
    if (n_qubits < 2 || n_qubits > 40) throw DomainError("search supports even 2 <= N <= 40");
    if (n_restarts < 1) throw DomainError("n_restarts must be at least 1");
    if (max_iters < 1) throw DomainError("max_iters must be at least 1");
    if (!(ftol >= 0.0)) throw DomainError("ftol must be nonnegative");
}

int default_restarts(int n_qubits) { return n_qubits <= 12 ? 200 : 500; }

double proxy_value(Proxy proxy, int n_qubits, const std::vector<double> &omega) {
    if (static_cast<int>(omega.size()) != n_qubits + 1) throw DomainError("omega must have N + 1 entries");
    ProxyEvaluator eval(n_qubits);
    return eval.value(proxy, Eigen::Map<const RVector>(omega.data(), omega.size()));
}

SearchRecord optimize_proxy(const SearchConfig &config) {
    config.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const int n = config.n_qubits;
    const ProxyEvaluator eval(n);
    const Proxy proxy = config.proxy;

    const auto ascent = [&](const RVector &w) { return eval.ascent_objective(proxy, w); };
    const Objective neg_objective = [&](const RVector &x, RVector *grad) {
        if (grad) {
            *grad = -central_difference_gradient(ascent, x, kGradientStep);
        }
        return -ascent(x);
    };
    const Retraction to_sphere = [](RVector &x) { x /= x.norm(); };
    // Numerical gradients are accurate to ~1e-9, so the gradient test is set
    // above that floor and ftol decides most stops.
    const MinimizeOptions opts{config.max_iters, 1e-8, config.ftol};

    auto outcomes = parallel_map(config.n_restarts, [&](int r) {
        auto rng = stream_rng(config.seed, static_cast<std::uint64_t>(r));
        std::normal_distribution<double> normal(0.0, 1.0);
        RVector x0(n + 1);
        for (int k = 0; k <= n; ++k) x0[k] = normal(rng);
        MinimizeResult res = minimize_bfgs(neg_objective, x0, opts, to_sphere);
        RVector w = res.x / res.x.norm();
        return RestartOutcome{w, eval.value(proxy, w), res.converged};
    });

    double best_proxy = -1.0;
    int converged = 0;
    for (const auto &o : outcomes) {
        best_proxy = std::max(best_proxy, o.proxy);
        converged += o.converged ? 1 : 0;
    }

    // plateau members, deduplicated by canonical omega
    std::vector<std::vector<double>> plateau;
    for (const auto &o : outcomes) {
        if (o.proxy >= best_proxy - kPlateauTol * std::abs(best_proxy)) {
            plateau.push_back(canonical_sign(o.omega));
        }
    }
    const int plateau_size = static_cast<int>(plateau.size());
    std::sort(plateau.begin(), plateau.end(), lexicographically_less);

    SearchRecord record;
    record.config = config;
    record.n_converged = converged;
    record.plateau_size = plateau_size;
    record.geometric_value = -1.0;
    for (const auto &omega : plateau) {
        CVector c(n + 1);
        for (int k = 0; k <= n; ++k) c[k] = omega[k];
        SymmetricState state = SymmetricState::normalized(c);
        double e = geometric_measure(state, 64, config.seed).value;
        // sorted order makes the lexicographically smallest omega win ties
        if (e > record.geometric_value + kTieTol) {
            record.geometric_value = e;
            record.omega_star = omega;
        }
    }
    record.proxy_value = proxy_value(proxy, n, record.omega_star);
    {
        CVector c(n + 1);
        for (int k = 0; k <= n; ++k) c[k] = record.omega_star[k];
        record.lower_bound = mapped_lower_bound(SymmetricState::normalized(c));
    }
    record.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return record;
}

BothProxiesResult optimize_both_proxies(int n_qubits, int n_restarts, std::uint64_t seed) {
    SearchConfig config;
    config.n_qubits = n_qubits;
    config.n_restarts = n_restarts;
    config.seed = seed;
    config.proxy = Proxy::PurityDeficit;
    SearchRecord purity = optimize_proxy(config);
    config.proxy = Proxy::Determinant;
    SearchRecord det = optimize_proxy(config);
    return {std::move(purity), std::move(det)};
}

std::vector<double> published_omega(int n_qubits) {
    const auto &table = published_table();
    auto it = table.find(n_qubits);
    if (it == table.end()) throw NotTabulated(n_qubits);
    std::vector<double> w = it->second;
    double norm = 0.0;
    for (double x : w) norm += x * x;
    norm = std::sqrt(norm);
    for (double &x : w) x /= norm;
    return w;
}

double tabulated_omega_measure(int n_qubits) {
    static const std::map<int, double> table = {
        {4, 0.667},  {6, 0.778},  {8, 0.835},  {10, 0.856}, {12, 0.914}, {14, 0.895}, {16, 0.905},
        {18, 0.915}, {20, 0.925}, {22, 0.925}, {24, 0.939}, {26, 0.933}, {28, 0.945}, {30, 0.945},
    };
    auto it = table.find(n_qubits);
    if (it == table.end()) throw NotTabulated(n_qubits);
    return it->second;
}

std::vector<int> omega_tabulated_sizes() {
    std::vector<int> out;
    for (const auto &[n, _] : published_table()) out.push_back(n);
    return out;
}

double verify_published(int n_qubits, std::uint64_t seed) {
    std::vector<double> w = published_omega(n_qubits);
    CVector c(w.size());
    for (size_t k = 0; k < w.size(); ++k) c[static_cast<Eigen::Index>(k)] = w[k];
    return geometric_measure(SymmetricState::normalized(c), 64, seed).value;
}

}  // namespace symmap
