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

#include "symmap/subspace.hpp"

#include <Eigen/Eigenvalues>
#include <charconv>
#include <cmath>
#include <random>

#include "symmap/bipartite.hpp"
#include "symmap/errors.hpp"
#include "symmap/optimize.hpp"
#include "symmap/parallel.hpp"

namespace symmap {

namespace {

constexpr double kTieTol = 1e-12;

void require_dimension(int d) {
    if (d < 2) throw DomainError("qudit dimension must be at least 2, got " + std::to_string(d));
}

// Banded form of the M^(k): weight(i, j) is the only possible nonzero of M^(i+j).
class ImageOverlap {
   public:
    explicit ImageOverlap(int d) : d_(d), weights_(d, d) {
        MappedBasis basis(2 * (d - 1));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) weights_(i, j) = basis.isometry()(i * d + j, i + j);
    }

    // f(z) = sum_k |z^T M_k z|^2 / |z|^4 with z = x + i y, params = (x, y) or x alone.
    double operator()(const RVector &params, RVector *grad, bool real_only) const {
        CVector z(d_);
        for (int i = 0; i < d_; ++i) z[i] = Complex(params[i], real_only ? 0.0 : params[d_ + i]);
        const int n_sectors = 2 * d_ - 1;
        CVector q = CVector::Zero(n_sectors);
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j) q[i + j] += weights_(i, j) * z[i] * z[j];
        const double p = q.squaredNorm();
        const double n = z.squaredNorm();
        if (grad) {
            grad->resize(params.size());
            for (int j = 0; j < d_; ++j) {
                Complex w = 0.0;
                for (int i = 0; i < d_; ++i) w += 4.0 * std::conj(q[i + j]) * weights_(j, i) * z[i];
                const double dpx = w.real(), dpy = -w.imag();
                (*grad)[j] = dpx / (n * n) - 4.0 * p * z[j].real() / (n * n * n);
                if (!real_only) (*grad)[d_ + j] = dpy / (n * n) - 4.0 * p * z[j].imag() / (n * n * n);
            }
        }
        return p / (n * n);
    }

   private:
    int d_;
    RMatrix weights_;
};

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

}  // namespace

std::vector<MKMatrix> mk_matrices(int n_qubits) {
    const MuTable mu = mu_table(n_qubits);
    const int d = n_qubits / 2 + 1;
    std::vector<MKMatrix> out;
    out.reserve(n_qubits + 1);
    for (int k = 0; k <= n_qubits; ++k) {
        RMatrix m = RMatrix::Zero(d, d);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                if (i + j != k) continue;
                m(i, j) = (i == j) ? mu(i, i) : std::sqrt(2.0) / 2.0 * mu(i, j);
            }
        }
        out.push_back({d, k, std::move(m)});
    }
    return out;
}

double image_overlap(const std::vector<MKMatrix> &mk, const CVector &a) {
    double sum = 0.0;
    for (const auto &m : mk) {
        Complex q = a.transpose() * m.matrix.cast<Complex>() * a;
        sum += std::norm(q);
    }
    return sum;
}

double sigma_min_bound(int n_qubits) {
    double sum = 0.0;
    for (const auto &m : mk_matrices(n_qubits)) {
        Eigen::SelfAdjointEigenSolver<RMatrix> es(m.matrix, Eigen::EigenvaluesOnly);
        double smin = es.eigenvalues().cwiseAbs().minCoeff();
        sum += smin * smin;
    }
    return sum;
}

double image_overlap_objective(int d, const RVector &params, RVector *grad) {
    require_dimension(d);
    if (params.size() != 2 * d) throw DomainError("expected 2d real parameters");
    return ImageOverlap(d)(params, grad, false);
}

GdResult g_d(int d, const GdOptions &options) {
    require_dimension(d);
    const ImageOverlap overlap(d);
    const bool real_only = options.real_only;
    const int n_params = real_only ? d : 2 * d;

    const Objective objective = [&](const RVector &x, RVector *grad) { return overlap(x, grad, real_only); };
    // unit norm with a_0 real and >= 0 removes the phase and scale flat directions
    const Retraction gauge = [d, real_only](RVector &x) {
        x /= x.norm();
        if (real_only) {
            if (x[0] < 0) x = -x;
            return;
        }
        Complex z0(x[0], x[d]);
        if (std::abs(z0) == 0.0) return;
        Complex rot = std::conj(z0) / std::abs(z0);
        for (int i = 0; i < d; ++i) {
            Complex zi = Complex(x[i], x[d + i]) * rot;
            x[i] = zi.real();
            x[d + i] = zi.imag();
        }
        x[d] = 0.0;
    };
    const MinimizeOptions opts{options.max_iters, options.grad_tol, 0.0};

    struct Outcome {
        double value;
        RVector x;
        bool converged;
    };
    auto outcomes = parallel_map(options.n_starts, [&](int s) {
        auto rng = stream_rng(options.seed, static_cast<std::uint64_t>(s));
        std::normal_distribution<double> normal(0.0, 1.0);
        RVector x0(n_params);
        for (int i = 0; i < n_params; ++i) x0[i] = normal(rng);
        MinimizeResult r = minimize_bfgs(objective, x0, opts, gauge);
        gauge(r.x);
        return Outcome{overlap(r.x, nullptr, real_only), r.x, r.converged};
    });

    const Outcome *best = nullptr;
    for (const auto &o : outcomes) {
        if (!best || o.value < best->value - kTieTol) best = &o;
    }
    GdResult out;
    out.n_starts = options.n_starts;
    if (best) {
        out.value = best->value;
        out.converged = best->converged;
        out.minimizer.resize(d);
        for (int i = 0; i < d; ++i) out.minimizer[i] = Complex(best->x[i], real_only ? 0.0 : best->x[d + i]);
    }
    return out;
}

GdResult g_d(int d, int n_starts, std::uint64_t seed) {
    GdOptions options;
    options.n_starts = n_starts;
    options.seed = seed;
    return g_d(d, options);
}

int hat_dimension(int d) {
    require_dimension(d);
    return (d - 1) * (d - 2) / 2;
}

CMatrix hat_basis(int d) {
    require_dimension(d);
    SubspaceProjector hat = complement_projector(2 * (d - 1));
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hat.matrix);
    const int dim = hat_dimension(d);
    // eigenvalues ascend; the complement is the top `dim` eigenvectors
    return es.eigenvectors().rightCols(dim);
}

BipartiteSymmetricState random_hat_state(int d, std::uint64_t seed, std::uint64_t stream) {
    if (d < 3) throw DomainError("the complement subspace is empty for d < 3");
    CMatrix basis = hat_basis(d);
    auto rng = stream_rng(seed, stream);
    std::normal_distribution<double> normal(0.0, 1.0);
    CVector coeffs(basis.cols());
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) coeffs[i] = Complex(normal(rng), normal(rng));
    CVector vec = basis * coeffs;
    // symmetrize away eigensolver round-off before the exact symmetry check
    CMatrix a(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a(i, j) = 0.5 * (vec[i * d + j] + vec[j * d + i]);
    return BipartiteSymmetricState(a / a.norm());
}

double hat_state_entanglement(const BipartiteSymmetricState &psi_hat) {
    const int d = psi_hat.dim();
    if (d < 2) throw NotInHatSubspace("qudit dimension must be at least 2");
    SubspaceProjector hat = complement_projector(2 * (d - 1));
    CVector v = psi_hat.to_vector();
    if ((hat.matrix * v - v).norm() > kStateNormTol) {
        throw NotInHatSubspace("state has weight on the image of the mapping");
    }
    return bipartite_geometric_measure(psi_hat);
}

std::vector<GdRow> gd_sweep(int d_max, int n_starts, std::uint64_t seed) {
    if (d_max < 2 || d_max > 20) throw DomainError("gd_sweep supports 2 <= d_max <= 20");
    std::vector<GdRow> rows;
    for (int d = 2; d <= d_max; ++d) {
        GdRow row{d, std::nullopt, hat_dimension(d)};
        if (row.hat_dim > 0) row.g = g_d(d, n_starts, seed).value;
        rows.push_back(row);
    }
    return rows;
}

std::string gd_sweep_csv(const std::vector<GdRow> &rows) {
    std::string out = "d,g_d,hat_dim,antisym_bound\n";
    for (const auto &r : rows) {
        out += std::to_string(r.d);
        out += ',';
        out += r.g ? format_double(*r.g) : "NA";
        out += ',';
        out += std::to_string(r.hat_dim);
        out += ',';
        out += format_double(r.antisym_bound);
        out += '\n';
    }
    return out;
}

}  // namespace symmap
