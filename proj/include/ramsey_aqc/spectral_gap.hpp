// Copyright 2026 The ramsey-aqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Two lowest eigenvalues of H(s) for small instances.
 *
 * Restarted Lanczos with full reorthogonalization on the matrix-free real
 * operator. E1 is found by a second run deflated against the converged
 * ground vector, so a degenerate ground level yields E1 == E0 instead of
 * skipping to the next distinct eigenvalue.
 */
#pragma once

#include "errors.hpp"
#include "hamiltonian.hpp"
#include "ramsey_cost.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace ramsey_aqc {

inline constexpr std::size_t kMaxGapQubits = 15;
inline constexpr std::size_t kMaxDenseQubits = 10;

using RealOperator = std::function<void(std::span<const double>, std::span<double>)>;

struct LanczosOptions {
    std::size_t krylov_dim = 120;
    std::size_t max_restarts = 400;
    double tolerance = 1e-8; ///< on ||H u - theta u||
    std::uint64_t seed = 0x5eed;
};

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;
    double residual = 0.0;
    std::size_t iterations = 0;
};

namespace detail {

inline double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

inline double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] += alpha * x[i];
    }
}

inline void orthogonalize(std::span<double> w, const std::vector<std::vector<double>> &basis,
                          std::size_t count) {
    // Two Gram-Schmidt sweeps.
    for (int sweep = 0; sweep < 2; ++sweep) {
        for (std::size_t i = 0; i < count; ++i) {
            axpy(-dot(basis[i], w), basis[i], w);
        }
    }
}

} // namespace detail

/// Lowest eigenpair of a real symmetric operator on the complement of
/// `deflate` (orthonormal vectors).
[[nodiscard]] inline EigenPair lowest_eigenpair(const RealOperator &op, std::size_t dim,
                                                const std::vector<std::vector<double>> &deflate,
                                                const LanczosOptions &opt = {}) {
    if (deflate.size() >= dim) {
        throw ValidationError("nothing left to search after deflation");
    }
    std::mt19937_64 rng(opt.seed + deflate.size());
    std::normal_distribution<double> gauss;
    std::vector<double> start(dim);
    for (auto &x : start) {
        x = gauss(rng);
    }

    const std::size_t kmax = std::min(opt.krylov_dim, dim - deflate.size());
    std::vector<std::vector<double>> V(kmax + 1, std::vector<double>(dim));
    std::vector<double> w(dim);
    std::vector<double> hu(dim);
    EigenPair best;
    best.residual = INFINITY;

    for (std::size_t restart = 0; restart <= opt.max_restarts; ++restart) {
        detail::orthogonalize(start, deflate, deflate.size());
        const double nrm = detail::norm2(start);
        if (nrm == 0.0) {
            throw ConvergenceError("Lanczos start vector vanished after deflation", INFINITY);
        }
        for (std::size_t i = 0; i < dim; ++i) {
            V[0][i] = start[i] / nrm;
        }
        std::vector<double> alpha;
        std::vector<double> beta;
        std::size_t k = 0;
        for (; k < kmax; ++k) {
            op(V[k], w);
            const double a = detail::dot(V[k], w);
            alpha.push_back(a);
            detail::orthogonalize(w, V, k + 1);
            detail::orthogonalize(w, deflate, deflate.size());
            const double b = detail::norm2(w);
            if (k + 1 == kmax || b <= 1e-12 * std::max(1.0, std::abs(a))) {
                ++k;
                break;
            }
            beta.push_back(b);
            for (std::size_t i = 0; i < dim; ++i) {
                V[k + 1][i] = w[i] / b;
            }
        }
        Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), static_cast<Eigen::Index>(k));
        Eigen::VectorXd sub(std::max<Eigen::Index>(0, static_cast<Eigen::Index>(k) - 1));
        for (Eigen::Index i = 0; i < sub.size(); ++i) {
            sub[i] = beta[static_cast<std::size_t>(i)];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
        tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        const double theta = tri.eigenvalues()[0];
        std::fill(start.begin(), start.end(), 0.0);
        for (std::size_t j = 0; j < k; ++j) {
            detail::axpy(tri.eigenvectors()(static_cast<Eigen::Index>(j), 0), V[j], start);
        }
        detail::orthogonalize(start, deflate, deflate.size());
        const double un = detail::norm2(start);
        for (auto &x : start) {
            x /= un;
        }
        op(start, hu);
        detail::axpy(-theta, start, hu);
        const double residual = detail::norm2(hu);
        if (residual < best.residual) {
            best = {theta, start, residual, restart + 1};
        }
        if (residual < opt.tolerance) {
            return best;
        }
    }
    throw ConvergenceError("Lanczos did not converge: residual " + std::to_string(best.residual),
                           best.residual);
}

struct GapSample {
    double s = 0.0;
    double e0 = 0.0;
    double e1 = 0.0;
    double residual0 = 0.0;
    double residual1 = 0.0;
    [[nodiscard]] double gap() const noexcept { return e1 - e0; }
};

/// E0 and E1 of H(s) at each sample point.
[[nodiscard]] inline std::vector<GapSample> spectral_gap(const CostTable &table,
                                                         const std::vector<double> &s_samples,
                                                         const LanczosOptions &opt = {},
                                                         std::size_t max_qubits = kMaxGapQubits) {
    const std::size_t L = table.num_qubits();
    check_qubit_cap(L, max_qubits);
    if (L < 1) {
        throw ValidationError("spectral gap needs at least one qubit");
    }
    std::vector<GapSample> out;
    out.reserve(s_samples.size());
    for (const double s : s_samples) {
        if (!(s >= 0.0 && s <= 1.0)) {
            throw ValidationError("schedule samples must lie in [0, 1]");
        }
        const RealOperator op = [&](std::span<const double> in, std::span<double> o) {
            apply_h<double>(s, table, in, o);
        };
        EigenPair first = lowest_eigenpair(op, table.size(), {}, opt);
        EigenPair second = lowest_eigenpair(op, table.size(), {first.vector}, opt);
        GapSample g{s, first.value, second.value, first.residual, second.residual};
        if (g.e1 < g.e0) {
            std::swap(g.e0, g.e1);
            std::swap(g.residual0, g.residual1);
        }
        out.push_back(g);
    }
    return out;
}

[[nodiscard]] inline std::vector<GapSample> spectral_gap(const RamseyInstance &inst,
                                                         const std::vector<double> &s_samples,
                                                         const LanczosOptions &opt = {}) {
    check_qubit_cap(inst.num_qubits(), kMaxGapQubits);
    return spectral_gap(build_cost_table(inst, kMaxGapQubits), s_samples, opt);
}

/// Full ascending spectrum of H(s) by dense diagonalization (L <= 10).
[[nodiscard]] inline Eigen::VectorXd dense_spectrum(double s, const CostTable &table) {
    const std::size_t L = table.num_qubits();
    check_qubit_cap(L, kMaxDenseQubits);
    const auto dim = static_cast<Eigen::Index>(table.size());
    Eigen::MatrixXd H(dim, dim);
    std::vector<double> e(table.size());
    std::vector<double> col(table.size());
    for (Eigen::Index j = 0; j < dim; ++j) {
        std::fill(e.begin(), e.end(), 0.0);
        e[static_cast<std::size_t>(j)] = 1.0;
        apply_h<double>(s, table, e, col);
        for (Eigen::Index i = 0; i < dim; ++i) {
            H(i, j) = col[static_cast<std::size_t>(i)];
        }
    }
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(H, Eigen::EigenvaluesOnly).eigenvalues();
}

} // namespace ramsey_aqc
