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
 * Incremental-N Ramsey search: start strictly below R(m,n), run one AQE
 * evolution per N, stop at the first N whose final energy is positive.
 */
#pragma once

#include "errors.hpp"
#include "evolution.hpp"
#include "ramsey_cost.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey_aqc {

inline constexpr std::string_view kSchema = "ramsey-aqc/1";

/// Repeat count so that at least one of k runs (each failing with
/// probability epsilon) succeeds with probability >= delta.
[[nodiscard]] inline std::size_t k_repeats(double epsilon, double delta) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw ValidationError("epsilon must lie in (0, 1)");
    }
    if (epsilon >= 0.999) {
        throw ValidationError("epsilon >= 0.999 needs an impractical number of repeats");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw ValidationError("delta must lie in (0, 1)");
    }
    if (delta < 1.0 - epsilon - 1e-12) {
        throw ValidationError("delta must be at least 1 - epsilon");
    }
    const double k = std::log(1.0 - delta) / std::log(epsilon);
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(k - 1e-9)));
}

/// 5.0 up to 15 qubits, 8.0 above.
[[nodiscard]] inline double default_runtime(std::size_t n_qubits) noexcept {
    return n_qubits <= 15 ? 5.0 : 8.0;
}

enum class DecisionMode { Exact, Sample };
enum class Decision { Continue, Threshold };

[[nodiscard]] inline std::string_view to_string(DecisionMode m) noexcept {
    return m == DecisionMode::Exact ? "EXACT" : "SAMPLE";
}
[[nodiscard]] inline std::string_view to_string(Decision d) noexcept {
    return d == Decision::Continue ? "CONTINUE" : "THRESHOLD";
}

[[nodiscard]] inline DecisionMode parse_mode(std::string_view name) {
    if (name == "EXACT" || name == "exact") {
        return DecisionMode::Exact;
    }
    if (name == "SAMPLE" || name == "sample") {
        return DecisionMode::Sample;
    }
    throw ValidationError("unknown mode '" + std::string(name) + "' (expected EXACT or SAMPLE)");
}

struct SampleInfo {
    std::size_t k = 0;
    double epsilon = 0.0;
    double delta = 0.0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> energies;
    std::uint64_t measured_energy = 0; ///< minimum over the draws
    bool mismatch = false;             ///< measured_energy != oracle e_gs
};

struct RunRecord {
    int m = 0;
    int n = 0;
    int N = 0;
    std::size_t L = 0;
    double T = 0.0;
    std::size_t steps = 0;
    Integrator integrator = Integrator::Trotter2;
    std::uint64_t e_gs = 0;
    std::uint64_t degeneracy = 0;
    double p_success = 0.0;
    double norm_drift = 0.0;
    Decision decision = Decision::Continue;
    std::optional<SampleInfo> sample;
    std::optional<double> wall_time_s;
    std::optional<bool> converged;
};

struct SweepReport {
    int m = 0;
    int n = 0;
    DecisionMode mode = DecisionMode::Exact;
    std::vector<RunRecord> records;
    int ramsey_number = 0;

    [[nodiscard]] bool any_sample_mismatch() const noexcept {
        return std::any_of(records.begin(), records.end(), [](const RunRecord &r) {
            return r.sample && r.sample->mismatch;
        });
    }
};

struct SweepConfig {
    std::optional<double> T;            ///< default_runtime(L) per N when unset
    std::optional<std::size_t> steps;   ///< default_steps(T) when unset
    Integrator integrator = Integrator::Trotter2;
    DecisionMode mode = DecisionMode::Exact;
    std::uint64_t seed = 1;
    std::optional<double> epsilon;      ///< 1 - p_success of the run when unset
    double delta = 0.999;
    std::optional<int> start_N;         ///< lower_bound(m, n) when unset
    std::size_t max_qubits = kDefaultMaxQubits;
    double renorm_check = 1e-6;
};

/// Fills a RunRecord from one evolution.
[[nodiscard]] inline RunRecord make_record(const RamseyInstance &inst, const EvolutionResult &r) {
    RunRecord rec;
    rec.m = inst.m;
    rec.n = inst.n;
    rec.N = inst.N;
    rec.L = inst.num_qubits();
    rec.T = r.config.T;
    rec.steps = r.config.n_steps;
    rec.integrator = r.config.integrator;
    rec.e_gs = r.e_gs;
    rec.degeneracy = r.degeneracy;
    rec.p_success = r.p_success;
    rec.norm_drift = r.norm_drift;
    rec.decision = r.e_gs > 0 ? Decision::Threshold : Decision::Continue;
    return rec;
}

/// Seed used for the measurement draws at vertex count N.
[[nodiscard]] constexpr std::uint64_t sample_seed(std::uint64_t seed, int N) noexcept {
    return seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(N + 1));
}

inline void check_start(int m, int n, int start) {
    if (start < 1) {
        throw ValidationError("start N must be >= 1");
    }
    if (const auto r = known_ramsey(m, n); r && start >= *r) {
        throw ValidationError("start N=" + std::to_string(start) + " is not below R(" +
                              std::to_string(m) + "," + std::to_string(n) +
                              ")=" + std::to_string(*r));
    }
}

[[nodiscard]] inline SweepReport find_ramsey(int m, int n, const SweepConfig &cfg = {}) {
    const int start = cfg.start_N.value_or(lower_bound(m, n));
    check_start(m, n, start);
    SweepReport report;
    report.m = m;
    report.n = n;
    report.mode = cfg.mode;
    for (int N = start;; ++N) {
        const RamseyInstance inst(m, n, N);
        check_qubit_cap(inst.num_qubits(), cfg.max_qubits);
        const CostTable table = build_cost_table(inst, cfg.max_qubits);
        const OracleResult oracle = ground_state(table, 0);
        const double T = cfg.T.value_or(default_runtime(inst.num_qubits()));
        const EvolutionConfig ecfg{T, cfg.steps.value_or(default_steps(T)), cfg.integrator,
                                   cfg.renorm_check};
        EvolveOptions opt;
        opt.oracle = &oracle;
        const EvolutionResult evo = evolve(table, ecfg, opt);
        RunRecord rec = make_record(inst, evo);

        std::uint64_t energy = oracle.e_gs;
        if (cfg.mode == DecisionMode::Sample) {
            SampleInfo si;
            si.epsilon = std::clamp(cfg.epsilon.value_or(1.0 - evo.p_success), 1e-12, 1.0);
            si.delta = cfg.delta;
            si.k = (si.delta <= 1.0 - si.epsilon) ? 1 : k_repeats(si.epsilon, si.delta);
            si.seed = sample_seed(cfg.seed, N);
            si.energies = measure_sample(evo.final_state, table, si.seed, si.k);
            si.measured_energy = *std::min_element(si.energies.begin(), si.energies.end());
            si.mismatch = si.measured_energy != oracle.e_gs;
            energy = si.measured_energy;
            rec.sample = std::move(si);
        }
        rec.decision = energy > 0 ? Decision::Threshold : Decision::Continue;
        report.records.push_back(std::move(rec));
        if (energy > 0) {
            report.ramsey_number = N;
            return report;
        }
    }
}

// ---------------------------------------------------------------------------
// Reference values reported for the simulated instances.

struct Table1Row {
    int m;
    int n;
    int N;
    double T;
    std::uint64_t e_gs;
    std::uint64_t degeneracy;
    double p_success;
};

inline constexpr Table1Row kTable1[] = {
    {2, 5, 3, 5.0, 0, 1, 0.591},  {2, 5, 4, 5.0, 0, 1, 0.349},  {2, 5, 5, 5.0, 1, 11, 0.518},
    {2, 6, 4, 5.0, 0, 1, 0.349},  {2, 6, 5, 5.0, 0, 1, 0.173},  {2, 6, 6, 5.0, 1, 16, 0.286},
    {3, 3, 4, 5.0, 0, 18, 0.769}, {3, 3, 5, 5.0, 0, 12, 0.194}, {3, 3, 6, 5.0, 2, 1760, 0.693},
    {2, 7, 5, 8.0, 0, 1, 0.865},  {2, 7, 6, 8.0, 0, 1, 0.805},  {2, 7, 7, 8.0, 1, 22, 0.938},
};

inline constexpr double kTable1Tolerance = 0.01;

struct Table1Check {
    Table1Row expected;
    RunRecord got;
    bool energy_ok = false;
    bool degeneracy_ok = false;
    bool p_success_ok = false;
    [[nodiscard]] bool ok() const noexcept { return energy_ok && degeneracy_ok && p_success_ok; }
};

/// Re-runs every reference row; steps default to default_steps(T).
[[nodiscard]] inline std::vector<Table1Check> run_table1(std::optional<std::size_t> steps,
                                                         Integrator integrator) {
    std::vector<Table1Check> out;
    for (const auto &row : kTable1) {
        const RamseyInstance inst(row.m, row.n, row.N);
        const CostTable table = build_cost_table(inst);
        const OracleResult oracle = ground_state(table, 0);
        const EvolutionConfig cfg{row.T, steps.value_or(default_steps(row.T)), integrator, 1e-6};
        EvolveOptions opt;
        opt.oracle = &oracle;
        Table1Check c{row, make_record(inst, evolve(table, cfg, opt))};
        c.energy_ok = c.got.e_gs == row.e_gs;
        c.degeneracy_ok = c.got.degeneracy == row.degeneracy;
        c.p_success_ok = std::abs(c.got.p_success - row.p_success) <= kTable1Tolerance;
        out.push_back(std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Serialization.

using ordered_json = nlohmann::ordered_json;

[[nodiscard]] inline ordered_json to_json(const RunRecord &r) {
    ordered_json j;
    j["schema"] = kSchema;
    j["m"] = r.m;
    j["n"] = r.n;
    j["N"] = r.N;
    j["L"] = r.L;
    j["T"] = r.T;
    j["steps"] = r.steps;
    j["integrator"] = to_string(r.integrator);
    j["e_gs"] = r.e_gs;
    j["degeneracy"] = r.degeneracy;
    j["p_success"] = r.p_success;
    j["norm_drift"] = r.norm_drift;
    j["decision"] = to_string(r.decision);
    if (r.converged) {
        j["converged"] = *r.converged;
    }
    if (r.sample) {
        const auto &s = *r.sample;
        j["sample"] = {{"k", s.k},
                       {"epsilon", s.epsilon},
                       {"delta", s.delta},
                       {"seed", s.seed},
                       {"measured_energy", s.measured_energy},
                       {"mismatch", s.mismatch},
                       {"energies", s.energies}};
    }
    if (r.wall_time_s) {
        j["wall_time_s"] = *r.wall_time_s;
    }
    return j;
}

[[nodiscard]] inline ordered_json to_json(const SweepReport &s) {
    ordered_json j;
    j["schema"] = kSchema;
    j["m"] = s.m;
    j["n"] = s.n;
    j["mode"] = to_string(s.mode);
    j["ramsey_number"] = s.ramsey_number;
    j["records"] = ordered_json::array();
    for (const auto &r : s.records) {
        j["records"].push_back(to_json(r));
    }
    return j;
}

[[nodiscard]] inline ordered_json oracle_json(const RamseyInstance &inst, const OracleResult &r,
                                              bool with_witnesses) {
    ordered_json j;
    j["schema"] = kSchema;
    j["m"] = inst.m;
    j["n"] = inst.n;
    j["N"] = inst.N;
    j["e_gs"] = r.e_gs;
    j["degeneracy"] = r.degeneracy;
    if (with_witnesses) {
        auto &w = j["witnesses"] = ordered_json::array();
        for (const auto x : r.witnesses) {
            w.push_back(inst.N >= 2 ? from_basis_index(inst.N, x).to_text() : std::string{});
        }
    }
    return j;
}

/// Shortest round-trip decimal form.
[[nodiscard]] inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

inline constexpr std::string_view kCsvHeader =
    "m,n,N,L,T,steps,integrator,e_gs,degeneracy,p_success,decision";

inline void write_csv_row(std::ostream &out, const RunRecord &r) {
    out << r.m << ',' << r.n << ',' << r.N << ',' << r.L << ',' << format_double(r.T) << ','
        << r.steps << ',' << to_string(r.integrator) << ',' << r.e_gs << ',' << r.degeneracy
        << ',' << format_double(r.p_success) << ',' << to_string(r.decision) << '\n';
}

inline void write_csv(std::ostream &out, const std::vector<RunRecord> &records) {
    out << kCsvHeader << '\n';
    for (const auto &r : records) {
        write_csv_row(out, r);
    }
}

} // namespace ramsey_aqc
