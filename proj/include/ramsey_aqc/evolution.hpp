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
 * Schrodinger integration of i d|psi>/dt = H(t/T)|psi> (hbar = 1) from the
 * uniform superposition, and the resulting ground-space probability.
 *
 * Two independent integrators are provided:
 *  - RK4: classical Runge-Kutta on the matrix-free H(s) with s evaluated at
 *    the stage times t, t + dt/2, t + dt.
 *  - TROTTER2: symmetric splitting per step,
 *      exp(-i(1-s)H_i dt/2) exp(-i s H_P dt) exp(-i(1-s)H_i dt/2),
 *    s at the step midpoint. The H_i factor is exact in the Hadamard basis,
 *    the H_P factor is a diagonal phase.
 */
#pragma once

#include "errors.hpp"
#include "hamiltonian.hpp"
#include "parallel.hpp"
#include "ramsey_cost.hpp"
#include "walsh_hadamard.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ramsey_aqc {

enum class Integrator { RK4, Trotter2 };

[[nodiscard]] inline std::string_view to_string(Integrator i) noexcept {
    return i == Integrator::RK4 ? "RK4" : "TROTTER2";
}

[[nodiscard]] inline Integrator parse_integrator(std::string_view name) {
    if (name == "RK4" || name == "rk4") {
        return Integrator::RK4;
    }
    if (name == "TROTTER2" || name == "trotter2") {
        return Integrator::Trotter2;
    }
    throw ValidationError("unknown integrator '" + std::string(name) +
                          "' (expected RK4 or TROTTER2)");
}

/// ceil(1000 T): dt = 1e-3.
[[nodiscard]] inline std::size_t default_steps(double T) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(1000.0 * T - 1e-9)));
}

struct EvolutionConfig {
    double T = 5.0;
    std::size_t n_steps = 5000;
    Integrator integrator = Integrator::Trotter2;
    double renorm_check = 1e-6;

    void validate() const {
        if (!(T > 0.0) || !std::isfinite(T)) {
            throw ValidationError("runtime T must be positive and finite");
        }
        if (n_steps < 1) {
            throw ValidationError("n_steps must be >= 1");
        }
        if (!(renorm_check > 0.0)) {
            throw ValidationError("renorm_check must be positive");
        }
    }
    [[nodiscard]] double dt() const noexcept { return T / static_cast<double>(n_steps); }
};

struct EvolutionResult {
    StateVector final_state{0};
    double p_success = 0.0;
    double norm_drift = 0.0;
    EvolutionConfig config;
    std::uint64_t e_gs = 0;
    std::uint64_t degeneracy = 0;
    double wall_time_s = 0.0;
};

struct TracePoint {
    double t;
    double s;
    double overlap_gs;
    double norm;
};

struct EvolveOptions {
    /// Skips the internal ground-state scan when provided.
    const OracleResult *oracle = nullptr;
    /// Replaces the uniform superposition as |psi(0)>.
    const StateVector *initial = nullptr;
    /// Emit a TracePoint every `trace_every` steps (0 = never).
    std::size_t trace_every = 0;
    std::function<void(const TracePoint &)> trace;
};

[[nodiscard]] inline StateVector initial_state(std::size_t n_qubits) {
    StateVector psi(n_qubits);
    const double a = std::pow(2.0, -0.5 * static_cast<double>(n_qubits));
    std::fill(psi.amplitudes().begin(), psi.amplitudes().end(), Amplitude{a, 0.0});
    return psi;
}

/// sum over x with table[x] == energy of |psi(x)|^2.
[[nodiscard]] inline double level_probability(const StateVector &psi, const CostTable &table,
                                              std::uint64_t energy) {
    detail::check_length(psi.size(), table.size(), "level_probability");
    return parallel::reduce_blocks(psi.size(), 0.0, [&](std::size_t begin, std::size_t end) {
        double acc = 0.0;
        for (std::size_t x = begin; x < end; ++x) {
            if (table[x] == energy) {
                acc += std::norm(psi[x]);
            }
        }
        return acc;
    });
}

namespace detail {

/// a * b without the C99 Annex G inf/nan recovery path.
[[nodiscard]] inline Amplitude mul(Amplitude a, Amplitude b) noexcept {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

/// psi <- exp(-i tau H_i) psi via the Hadamard basis. In that basis H_i is
/// diagonal with eigenvalue popcount(p).
inline void apply_hi_exponential(std::span<Amplitude> psi, std::size_t n_qubits, double tau) {
    if (tau == 0.0) {
        return;
    }
    const double scale = std::ldexp(1.0, -static_cast<int>(n_qubits));
    std::vector<Amplitude> phase(n_qubits + 1);
    for (std::size_t w = 0; w <= n_qubits; ++w) {
        phase[w] = scale * std::polar(1.0, -tau * static_cast<double>(w));
    }
    const std::size_t block = std::min(psi.size(), parallel::kBlock);
    std::vector<unsigned char> low_weight(block);
    for (std::size_t p = 0; p < block; ++p) {
        low_weight[p] = static_cast<unsigned char>(std::popcount(p));
    }
    fwht(psi);
    parallel::for_blocks(psi.size(), [&](std::size_t begin, std::size_t end) {
        const Amplitude *ph = phase.data() + std::popcount(begin);
        for (std::size_t p = begin; p < end; ++p) {
            psi[p] = mul(psi[p], ph[low_weight[p - begin]]);
        }
    });
    fwht(psi);
}

/// psi <- exp(-i tau H_P) psi.
inline void apply_hp_exponential(std::span<Amplitude> psi, const CostTable &table, double tau,
                                 std::vector<Amplitude> &phase) {
    for (std::size_t v = 0; v < phase.size(); ++v) {
        phase[v] = std::polar(1.0, -tau * static_cast<double>(v));
    }
    parallel::for_blocks(psi.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t x = begin; x < end; ++x) {
            psi[x] = mul(psi[x], phase[table[x]]);
        }
    });
}

/// One fused RK4 stage: k = -i H(s) in; acc (+)= c_acc k; next = psi + c_next k.
inline void rk4_stage(const CostTable &table, double s, std::span<const Amplitude> in,
                      std::span<const Amplitude> psi, std::span<Amplitude> acc, bool init_acc,
                      double c_acc, std::span<Amplitude> next, double c_next) {
    const bool has_next = !next.empty();
    parallel::for_blocks(in.size(), [&](std::size_t begin, std::size_t end) {
        thread_local std::vector<Amplitude> scratch;
        scratch.resize(end - begin);
        h_block<Amplitude>(s, &table, table.num_qubits(), in, begin, end, scratch.data());
        for (std::size_t x = begin; x < end; ++x) {
            const Amplitude h_in = scratch[x - begin];
            const Amplitude k{h_in.imag(), -h_in.real()}; // -i * h_in
            acc[x] = (init_acc ? psi[x] : acc[x]) + c_acc * k;
            if (has_next) {
                next[x] = psi[x] + c_next * k;
            }
        }
    });
}

class TraceEmitter {
  public:
    TraceEmitter(const EvolveOptions &opt, const CostTable &table, std::uint64_t e_gs,
                 const EvolutionConfig &cfg)
        : opt_(opt), table_(table), e_gs_(e_gs), cfg_(cfg) {}

    [[nodiscard]] bool due(std::size_t step) const noexcept {
        return opt_.trace_every > 0 && opt_.trace &&
               (step % opt_.trace_every == 0 || step == cfg_.n_steps);
    }

    void emit(std::size_t step, const StateVector &psi) const {
        const double t = cfg_.dt() * static_cast<double>(step);
        opt_.trace({t, std::clamp(t / cfg_.T, 0.0, 1.0), level_probability(psi, table_, e_gs_),
                    psi.norm()});
    }

  private:
    const EvolveOptions &opt_;
    const CostTable &table_;
    std::uint64_t e_gs_;
    const EvolutionConfig &cfg_;
};

inline void integrate_trotter2(const CostTable &table, const EvolutionConfig &cfg,
                               StateVector &psi, const TraceEmitter &trace) {
    const std::size_t L = table.num_qubits();
    const double dt = cfg.dt();
    std::vector<Amplitude> hp_phase(static_cast<std::size_t>(table.max_value()) + 1);
    // Adjacent H_i half-steps commute and are merged into one exponential.
    double pending = 0.0;
    for (std::size_t k = 0; k < cfg.n_steps; ++k) {
        const double s = (static_cast<double>(k) + 0.5) / static_cast<double>(cfg.n_steps);
        const double half = 0.5 * (1.0 - s) * dt;
        apply_hi_exponential(psi.amplitudes(), L, pending + half);
        apply_hp_exponential(psi.amplitudes(), table, s * dt, hp_phase);
        pending = half;
        if (k + 1 == cfg.n_steps || trace.due(k + 1)) {
            apply_hi_exponential(psi.amplitudes(), L, pending);
            pending = 0.0;
            if (trace.due(k + 1)) {
                trace.emit(k + 1, psi);
            }
        }
    }
}

inline void integrate_rk4(const CostTable &table, const EvolutionConfig &cfg, StateVector &psi,
                          const TraceEmitter &trace) {
    const std::size_t L = table.num_qubits();
    const double dt = cfg.dt();
    StateVector acc(L);
    StateVector stage_a(L);
    StateVector stage_b(L);
    const std::span<Amplitude> none;
    for (std::size_t k = 0; k < cfg.n_steps; ++k) {
        const double t = dt * static_cast<double>(k);
        const double s0 = std::clamp(t / cfg.T, 0.0, 1.0);
        const double sh = std::clamp((t + 0.5 * dt) / cfg.T, 0.0, 1.0);
        const double s1 = std::clamp((t + dt) / cfg.T, 0.0, 1.0);
        rk4_stage(table, s0, psi.amplitudes(), psi.amplitudes(), acc.amplitudes(), true,
                  dt / 6.0, stage_a.amplitudes(), 0.5 * dt);
        rk4_stage(table, sh, stage_a.amplitudes(), psi.amplitudes(), acc.amplitudes(), false,
                  dt / 3.0, stage_b.amplitudes(), 0.5 * dt);
        rk4_stage(table, sh, stage_b.amplitudes(), psi.amplitudes(), acc.amplitudes(), false,
                  dt / 3.0, stage_a.amplitudes(), dt);
        rk4_stage(table, s1, stage_a.amplitudes(), psi.amplitudes(), acc.amplitudes(), false,
                  dt / 6.0, none, 0.0);
        std::swap(psi, acc);
        if (trace.due(k + 1)) {
            trace.emit(k + 1, psi);
        }
    }
}

} // namespace detail

[[nodiscard]] inline EvolutionResult evolve(const CostTable &table, const EvolutionConfig &cfg,
                                            const EvolveOptions &options = {}) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    const std::size_t L = table.num_qubits();

    OracleResult oracle;
    if (options.oracle != nullptr) {
        oracle = *options.oracle;
    } else {
        oracle = ground_state(table, 0);
    }

    StateVector psi = initial_state(L);
    if (options.initial != nullptr) {
        detail::check_length(options.initial->num_qubits(), L, "initial state qubit count");
        psi = *options.initial;
    }

    const detail::TraceEmitter trace(options, table, oracle.e_gs, cfg);
    if (trace.due(0)) {
        trace.emit(0, psi);
    }
    if (cfg.integrator == Integrator::RK4) {
        detail::integrate_rk4(table, cfg, psi, trace);
    } else {
        detail::integrate_trotter2(table, cfg, psi, trace);
    }

    EvolutionResult r;
    r.norm_drift = std::abs(psi.norm() - 1.0);
    r.p_success = std::clamp(level_probability(psi, table, oracle.e_gs), 0.0, 1.0);
    r.final_state = std::move(psi);
    r.config = cfg;
    r.e_gs = oracle.e_gs;
    r.degeneracy = oracle.degeneracy;
    r.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.norm_drift >= cfg.renorm_check) {
        throw IntegrationError("norm drift " + std::to_string(r.norm_drift) +
                               " exceeds tolerance with " + std::string(to_string(cfg.integrator)) +
                               " at " + std::to_string(cfg.n_steps) + " steps");
    }
    return r;
}

struct ConvergencePoint {
    std::size_t n_steps;
    double p_success;
};

/// p_success for each step count in ascending order.
[[nodiscard]] inline std::vector<ConvergencePoint>
convergence_study(const CostTable &table, double T, const std::vector<std::size_t> &steps_list,
                  Integrator integrator, double renorm_check = 1e-6) {
    if (!std::is_sorted(steps_list.begin(), steps_list.end())) {
        throw ValidationError("steps_list must be ascending");
    }
    const OracleResult oracle = ground_state(table, 0);
    EvolveOptions opt;
    opt.oracle = &oracle;
    std::vector<ConvergencePoint> out;
    out.reserve(steps_list.size());
    for (const std::size_t steps : steps_list) {
        const EvolutionConfig cfg{T, steps, integrator, renorm_check};
        out.push_back({steps, evolve(table, cfg, opt).p_success});
    }
    return out;
}

struct ConvergedEvolution {
    EvolutionResult result;
    bool converged = false;
    double last_delta = 0.0;
    std::vector<ConvergencePoint> history;
};

/// Doubles n_steps from cfg.n_steps until successive p_success values differ
/// by less than `threshold`, or `max_doublings` is reached. If the result is
/// not converged the final run is still returned with converged == false.
[[nodiscard]] inline ConvergedEvolution evolve_converged(const CostTable &table,
                                                         EvolutionConfig cfg,
                                                         double threshold = 1e-4,
                                                         int max_doublings = 8,
                                                         const OracleResult *oracle = nullptr) {
    OracleResult own;
    if (oracle == nullptr) {
        own = ground_state(table, 0);
        oracle = &own;
    }
    EvolveOptions opt;
    opt.oracle = oracle;
    ConvergedEvolution out;
    out.result = evolve(table, cfg, opt);
    out.history.push_back({cfg.n_steps, out.result.p_success});
    for (int d = 0; d < max_doublings; ++d) {
        cfg.n_steps *= 2;
        EvolutionResult next = evolve(table, cfg, opt);
        out.history.push_back({cfg.n_steps, next.p_success});
        out.last_delta = std::abs(next.p_success - out.result.p_success);
        out.result = std::move(next);
        if (out.last_delta < threshold) {
            out.converged = true;
            break;
        }
    }
    return out;
}

/// k independent basis-index draws with probability |psi(x)|^2; reproducible
/// for a fixed seed (mt19937_64 with an explicit 53-bit uniform map).
[[nodiscard]] inline std::vector<std::size_t> sample_indices(const StateVector &psi,
                                                             std::uint64_t seed, std::size_t k) {
    if (k < 1) {
        throw ValidationError("sample count k must be >= 1");
    }
    if (std::abs(psi.norm() - 1.0) > 1e-6) {
        throw ValidationError("cannot sample from an unnormalized state");
    }
    std::vector<double> cdf(psi.size());
    double running = 0.0;
    for (std::size_t x = 0; x < psi.size(); ++x) {
        running += std::norm(psi[x]);
        cdf[x] = running;
    }
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> out(k);
    for (auto &x : out) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * running;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        x = static_cast<std::size_t>(std::min<std::ptrdiff_t>(it - cdf.begin(),
                                                              static_cast<std::ptrdiff_t>(cdf.size()) - 1));
    }
    return out;
}

/// Energies h(x) of k simulated computational-basis measurements.
[[nodiscard]] inline std::vector<std::uint64_t> measure_sample(const StateVector &psi,
                                                               const CostTable &table,
                                                               std::uint64_t seed, std::size_t k) {
    detail::check_length(psi.size(), table.size(), "measure_sample");
    std::vector<std::uint64_t> energies;
    energies.reserve(k);
    for (const std::size_t x : sample_indices(psi, seed, k)) {
        energies.push_back(table[x]);
    }
    return energies;
}

} // namespace ramsey_aqc
