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
 * Command-line front end. Subcommands: oracle, evolve, ramsey, export-terms,
 * gap, table1.
 *
 * Exit codes: 0 success, 1 validation or numerical error, 2 qubit-cap
 * rejection, 3 table1 mismatch. Errors go to stderr as one JSON line.
 */
#pragma once

#include "driver.hpp"
#include "errors.hpp"
#include "evolution.hpp"
#include "graph_codec.hpp"
#include "ramsey_cost.hpp"
#include "spectral_gap.hpp"
#include "terms.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace ramsey_aqc::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kResource = 2, kAcceptance = 3 };

namespace detail {

inline void report_error(std::ostream &err, std::string_view kind, std::string_view message) {
    nlohmann::ordered_json j;
    j["schema"] = kSchema;
    j["error"] = kind;
    j["message"] = message;
    err << j.dump() << '\n';
}

/// Writes to --out when given, otherwise to `fallback`.
class Sink {
  public:
    Sink(const std::string &path, std::ostream &fallback) : out_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) {
                throw ValidationError("cannot open output file '" + path + "'");
            }
            out_ = file_.get();
        }
    }
    std::ostream &get() { return *out_; }

  private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream *out_;
};

struct Options {
    int m = 0;
    int n = 0;
    int N = 0;
    std::optional<double> T;
    std::optional<std::size_t> steps;
    std::string integrator = "TROTTER2";
    std::string mode = "EXACT";
    std::uint64_t seed = 1;
    std::optional<double> epsilon;
    double delta = 0.999;
    std::optional<int> start_N;
    std::string out;
    std::string format = "json";
    std::size_t witnesses = 0;
    std::string graph;
    bool converge = false;
    std::string trace;
    std::size_t trace_every = 0;
    std::vector<double> s_samples;
};

inline void check_format(const std::string &f) {
    if (f != "json" && f != "csv") {
        throw ValidationError("--format must be json or csv");
    }
}

inline int run_oracle(const Options &o, std::ostream &out) {
    const RamseyInstance inst(o.m, o.n, o.N);
    check_format(o.format);
    Sink sink(o.out, out);
    const OracleResult r = ground_state(build_cost_table(inst), o.witnesses);
    if (o.format == "csv") {
        sink.get() << "m,n,N,e_gs,degeneracy\n"
                   << inst.m << ',' << inst.n << ',' << inst.N << ',' << r.e_gs << ','
                   << r.degeneracy << '\n';
        return kOk;
    }
    auto j = oracle_json(inst, r, o.witnesses > 0);
    if (!o.graph.empty()) {
        const GraphBits g = GraphBits::from_text(o.graph);
        j["graph"] = g.to_text();
        j["cost"] = cost(g, inst);
    }
    sink.get() << j.dump() << '\n';
    return kOk;
}

inline int run_evolve(const Options &o, std::ostream &out) {
    const RamseyInstance inst(o.m, o.n, o.N);
    check_format(o.format);
    const std::size_t L = inst.num_qubits();
    check_qubit_cap(L, kDefaultMaxQubits);
    const double T = o.T.value_or(default_runtime(L));
    EvolutionConfig cfg{T, o.steps.value_or(default_steps(T)), parse_integrator(o.integrator),
                        1e-6};
    cfg.validate();
    const CostTable table = build_cost_table(inst);
    const OracleResult oracle = ground_state(table, 0);

    std::unique_ptr<std::ofstream> trace_file;
    EvolveOptions opt;
    opt.oracle = &oracle;
    if (!o.trace.empty()) {
        trace_file = std::make_unique<std::ofstream>(o.trace);
        if (!*trace_file) {
            throw ValidationError("cannot open trace file '" + o.trace + "'");
        }
        *trace_file << "t,s,overlap_gs,norm\n";
        opt.trace_every = o.trace_every > 0 ? o.trace_every : std::max<std::size_t>(1, cfg.n_steps / 100);
        opt.trace = [&](const TracePoint &p) {
            *trace_file << format_double(p.t) << ',' << format_double(p.s) << ','
                        << format_double(p.overlap_gs) << ',' << format_double(p.norm) << '\n';
        };
    }

    RunRecord rec;
    if (o.converge) {
        const auto ce = evolve_converged(table, cfg, 1e-4, 8, &oracle);
        rec = make_record(inst, ce.result);
        rec.converged = ce.converged;
        rec.wall_time_s = ce.result.wall_time_s;
    } else {
        const EvolutionResult r = evolve(table, cfg, opt);
        rec = make_record(inst, r);
        rec.wall_time_s = r.wall_time_s;
    }
    Sink sink(o.out, out);
    if (o.format == "csv") {
        write_csv(sink.get(), {rec});
    } else {
        sink.get() << to_json(rec).dump() << '\n';
    }
    return kOk;
}

inline int run_ramsey(const Options &o, std::ostream &out, std::ostream &err) {
    check_format(o.format);
    SweepConfig cfg;
    cfg.T = o.T;
    cfg.steps = o.steps;
    cfg.integrator = parse_integrator(o.integrator);
    cfg.mode = parse_mode(o.mode);
    cfg.seed = o.seed;
    cfg.epsilon = o.epsilon;
    cfg.delta = o.delta;
    cfg.start_N = o.start_N;
    if (o.epsilon) {
        (void)k_repeats(*o.epsilon, o.delta);
    }
    const SweepReport report = find_ramsey(o.m, o.n, cfg);
    Sink sink(o.out, out);
    if (o.format == "csv") {
        write_csv(sink.get(), report.records);
    } else {
        sink.get() << to_json(report).dump() << '\n';
    }
    if (report.any_sample_mismatch()) {
        report_error(err, "sample-mismatch",
                     "sampled minimum energy differs from the exact ground energy for at least "
                     "one N; see records[].sample");
    }
    return kOk;
}

inline int run_export_terms(const Options &o, std::ostream &out) {
    const RamseyInstance inst(o.m, o.n, o.N);
    Sink sink(o.out, out);
    write_terms(sink.get(), emit_terms(inst));
    return kOk;
}

inline int run_gap(const Options &o, std::ostream &out) {
    const RamseyInstance inst(o.m, o.n, o.N);
    check_format(o.format);
    check_qubit_cap(inst.num_qubits(), kMaxGapQubits);
    std::vector<double> s = o.s_samples;
    if (s.empty()) {
        for (int i = 0; i <= 10; ++i) {
            s.push_back(i / 10.0);
        }
    }
    const auto samples = spectral_gap(inst, s);
    Sink sink(o.out, out);
    if (o.format == "csv") {
        sink.get() << "s,e0,e1,gap,residual0,residual1\n";
        for (const auto &g : samples) {
            sink.get() << format_double(g.s) << ',' << format_double(g.e0) << ','
                       << format_double(g.e1) << ',' << format_double(g.gap()) << ','
                       << format_double(g.residual0) << ',' << format_double(g.residual1) << '\n';
        }
        return kOk;
    }
    nlohmann::ordered_json j;
    j["schema"] = kSchema;
    j["m"] = inst.m;
    j["n"] = inst.n;
    j["N"] = inst.N;
    j["L"] = inst.num_qubits();
    double min_gap = INFINITY;
    auto &arr = j["samples"] = nlohmann::ordered_json::array();
    for (const auto &g : samples) {
        min_gap = std::min(min_gap, g.gap());
        arr.push_back({{"s", g.s},
                       {"e0", g.e0},
                       {"e1", g.e1},
                       {"gap", g.gap()},
                       {"residual0", g.residual0},
                       {"residual1", g.residual1}});
    }
    j["min_gap"] = min_gap;
    sink.get() << j.dump() << '\n';
    return kOk;
}

inline int run_table1(const Options &o, std::ostream &out) {
    check_format(o.format);
    const auto checks = run_table1(o.steps, parse_integrator(o.integrator));
    Sink sink(o.out, out);
    bool all_ok = true;
    if (o.format == "csv") {
        sink.get() << "m,n,N,T,e_gs,expected_e_gs,degeneracy,expected_degeneracy,p_success,"
                      "expected_p_success,ok\n";
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto &c : checks) {
        all_ok = all_ok && c.ok();
        if (o.format == "csv") {
            sink.get() << c.expected.m << ',' << c.expected.n << ',' << c.expected.N << ','
                       << format_double(c.expected.T) << ',' << c.got.e_gs << ','
                       << c.expected.e_gs << ',' << c.got.degeneracy << ','
                       << c.expected.degeneracy << ',' << format_double(c.got.p_success) << ','
                       << format_double(c.expected.p_success) << ',' << (c.ok() ? 1 : 0) << '\n';
        } else {
            rows.push_back({{"m", c.expected.m},
                            {"n", c.expected.n},
                            {"N", c.expected.N},
                            {"T", c.expected.T},
                            {"steps", c.got.steps},
                            {"e_gs", c.got.e_gs},
                            {"expected_e_gs", c.expected.e_gs},
                            {"degeneracy", c.got.degeneracy},
                            {"expected_degeneracy", c.expected.degeneracy},
                            {"p_success", c.got.p_success},
                            {"expected_p_success", c.expected.p_success},
                            {"ok", c.ok()}});
        }
    }
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = kSchema;
        j["integrator"] = o.integrator;
        j["tolerance"] = kTable1Tolerance;
        j["rows"] = rows;
        j["all_ok"] = all_ok;
        sink.get() << j.dump() << '\n';
    }
    return all_ok ? kOk : kAcceptance;
}

} // namespace detail

/// Parses argv and runs one subcommand.
inline int cli_main(int argc, const char *const *argv, std::ostream &out = std::cout,
                    std::ostream &err = std::cerr) {
    detail::Options o;
    CLI::App app{"Adiabatic quantum evolution simulator for two-color Ramsey numbers",
                 "ramsey-aqc"};
    app.require_subcommand(1);

    const auto add_instance = [&](CLI::App *sub, bool need_N) {
        sub->add_option("--m", o.m, "clique order m")->required();
        sub->add_option("--n", o.n, "independent-set order n")->required();
        if (need_N) {
            sub->add_option("--N", o.N, "vertex count N")->required();
        }
        sub->add_option("--out", o.out, "write output to this path instead of stdout");
    };
    const auto add_evolution = [&](CLI::App *sub) {
        sub->add_option("--T", o.T, "runtime T (default 5.0 for L<=15, else 8.0)");
        sub->add_option("--steps", o.steps, "integration steps (default ceil(1000 T))");
        sub->add_option("--integrator", o.integrator, "RK4 or TROTTER2")->capture_default_str();
    };
    const auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", o.format, "json or csv")->capture_default_str();
    };

    auto *oracle = app.add_subcommand("oracle", "classical ground-state energy and degeneracy");
    add_instance(oracle, true);
    add_format(oracle);
    oracle->add_option("--witnesses", o.witnesses, "include up to this many minimizing graphs");
    oracle->add_option("--graph", o.graph, "also report the cost of this edge bitstring");

    auto *evolve_cmd = app.add_subcommand("evolve", "one AQE run, prints a RunRecord");
    add_instance(evolve_cmd, true);
    add_evolution(evolve_cmd);
    add_format(evolve_cmd);
    evolve_cmd->add_flag("--converge", o.converge, "double steps until p_success moves < 1e-4");
    evolve_cmd->add_option("--trace", o.trace, "per-step CSV trace t,s,overlap_gs,norm");
    evolve_cmd->add_option("--trace-every", o.trace_every, "trace stride in steps");
    evolve_cmd->add_option("--seed", o.seed, "unused by exact evolution; accepted for symmetry");

    auto *ramsey = app.add_subcommand("ramsey", "incremental-N search for R(m,n)");
    add_instance(ramsey, false);
    add_evolution(ramsey);
    add_format(ramsey);
    ramsey->add_option("--mode", o.mode, "EXACT or SAMPLE")->capture_default_str();
    ramsey->add_option("--seed", o.seed, "measurement RNG seed")->capture_default_str();
    ramsey->add_option("--epsilon", o.epsilon, "per-run failure probability (SAMPLE)");
    ramsey->add_option("--delta", o.delta, "target confidence (SAMPLE)")->capture_default_str();
    ramsey->add_option("--start-N", o.start_N, "first N (must be below R(m,n))");

    auto *terms = app.add_subcommand("export-terms", "write the projector-product term list");
    add_instance(terms, true);

    auto *gap = app.add_subcommand("gap", "two lowest eigenvalues of H(s), L <= 15");
    add_instance(gap, true);
    add_format(gap);
    gap->add_option("--s", o.s_samples, "schedule points in [0,1] (default 0,0.1,..,1)");

    auto *table1 = app.add_subcommand("table1", "re-run all reference rows and diff");
    table1->add_option("--steps", o.steps, "integration steps (default ceil(1000 T))");
    table1->add_option("--integrator", o.integrator, "RK4 or TROTTER2")->capture_default_str();
    table1->add_option("--out", o.out, "write output to this path instead of stdout");
    add_format(table1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        detail::report_error(err, "usage", e.what());
        return kValidation;
    }

    try {
        if (*oracle) {
            return detail::run_oracle(o, out);
        }
        if (*evolve_cmd) {
            return detail::run_evolve(o, out);
        }
        if (*ramsey) {
            return detail::run_ramsey(o, out, err);
        }
        if (*terms) {
            return detail::run_export_terms(o, out);
        }
        if (*gap) {
            return detail::run_gap(o, out);
        }
        return detail::run_table1(o, out);
    } catch (const ResourceLimitError &e) {
        detail::report_error(err, "resource-cap", e.what());
        return kResource;
    } catch (const ValidationError &e) {
        detail::report_error(err, "validation", e.what());
        return kValidation;
    } catch (const ConvergenceError &e) {
        detail::report_error(err, "convergence", e.what());
        return kValidation;
    } catch (const IntegrationError &e) {
        detail::report_error(err, "integration", e.what());
        return kValidation;
    } catch (const std::exception &e) {
        detail::report_error(err, "error", e.what());
        return kValidation;
    }
}

} // namespace ramsey_aqc::cli
