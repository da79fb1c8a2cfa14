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
 * Symbolic problem Hamiltonian as a sum of projector products.
 *
 * Each m-subset contributes prod_e P1^e over its edge slots (fires on an
 * m-clique) and each n-subset contributes prod_e P0^e (fires on an
 * n-independent set), with P1 = (I - Z)/2 selecting bit 1 and
 * P0 = (I + Z)/2 selecting bit 0.
 */
#pragma once

#include "errors.hpp"
#include "graph_codec.hpp"
#include "ramsey_cost.hpp"

#include <algorithm>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace ramsey_aqc {

enum class Projector { P0, P1 };

struct ProjectorFactor {
    std::size_t qubit = 0;
    Projector kind = Projector::P0;
    friend bool operator==(const ProjectorFactor &, const ProjectorFactor &) = default;
};

struct ProjectorTerm {
    std::vector<ProjectorFactor> factors; ///< ascending qubit order, no repeats
    friend bool operator==(const ProjectorTerm &, const ProjectorTerm &) = default;
};

struct TermList {
    RamseyInstance instance;
    std::vector<ProjectorTerm> terms;

    [[nodiscard]] std::size_t num_qubits() const noexcept { return instance.num_qubits(); }

    /// Largest number of qubits touched by one term.
    [[nodiscard]] std::size_t locality() const noexcept {
        std::size_t t = 0;
        for (const auto &term : terms) {
            t = std::max(t, term.factors.size());
        }
        return t;
    }

    friend bool operator==(const TermList &, const TermList &) = default;
};

[[nodiscard]] inline TermList emit_terms(const RamseyInstance &inst) {
    TermList out{inst, {}};
    out.terms.reserve(binomial(static_cast<std::uint64_t>(inst.N), static_cast<std::uint64_t>(inst.m)) +
                      binomial(static_cast<std::uint64_t>(inst.N), static_cast<std::uint64_t>(inst.n)));
    const auto emit = [&](int k, Projector kind) {
        for_each_subset(inst.N, k, [&](const std::vector<int> &s) {
            ProjectorTerm term;
            for (std::size_t a = 0; a < s.size(); ++a) {
                for (std::size_t b = a + 1; b < s.size(); ++b) {
                    term.factors.push_back({edge_index(s[b], s[a], inst.N), kind});
                }
            }
            std::sort(term.factors.begin(), term.factors.end(),
                      [](const auto &x, const auto &y) { return x.qubit < y.qubit; });
            out.terms.push_back(std::move(term));
        });
    };
    emit(inst.m, Projector::P1);
    emit(inst.n, Projector::P0);
    return out;
}

/// <g| sum_terms prod_factors P |g>, i.e. the number of terms whose
/// projectors all accept the bits of g.
[[nodiscard]] inline std::uint64_t eval_terms(const TermList &terms, const GraphBits &g) {
    if (g.length() != terms.num_qubits()) {
        throw ValidationError("graph string length " + std::to_string(g.length()) +
                              " does not match term list L=" +
                              std::to_string(terms.num_qubits()));
    }
    std::uint64_t total = 0;
    for (const auto &term : terms.terms) {
        int product = 1;
        for (const auto &f : term.factors) {
            const int bit = g.test(f.qubit) ? 1 : 0;
            product *= f.kind == Projector::P1 ? bit : 1 - bit;
        }
        total += static_cast<std::uint64_t>(product);
    }
    return total;
}

inline void write_terms(std::ostream &out, const TermList &terms) {
    const auto &inst = terms.instance;
    out << "ramsey-terms v1 L=" << terms.num_qubits() << " m=" << inst.m << " n=" << inst.n
        << " N=" << inst.N << '\n';
    for (const auto &term : terms.terms) {
        out << "+1";
        for (const auto &f : term.factors) {
            out << ' ' << f.qubit << (f.kind == Projector::P1 ? ":P1" : ":P0");
        }
        out << '\n';
    }
}

[[nodiscard]] inline std::string format_terms(const TermList &terms) {
    std::ostringstream out;
    write_terms(out, terms);
    return out.str();
}

[[nodiscard]] inline TermList read_terms(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ValidationError("term file is empty");
    }
    std::istringstream header(line);
    std::string magic;
    std::string version;
    std::string fL;
    std::string fm;
    std::string fn;
    std::string fN;
    header >> magic >> version >> fL >> fm >> fn >> fN;
    const auto field = [](const std::string &tok, const char *key) {
        const std::string prefix = std::string(key) + "=";
        if (tok.rfind(prefix, 0) != 0) {
            throw ValidationError("term header missing " + prefix);
        }
        return std::stoi(tok.substr(prefix.size()));
    };
    if (magic != "ramsey-terms" || version != "v1") {
        throw ValidationError("not a ramsey-terms v1 file");
    }
    TermList out{RamseyInstance(field(fm, "m"), field(fn, "n"), field(fN, "N")), {}};
    if (static_cast<std::size_t>(field(fL, "L")) != out.num_qubits()) {
        throw ValidationError("term header L disagrees with N");
    }
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream fields(line);
        std::string coeff;
        fields >> coeff;
        if (coeff != "+1") {
            throw ValidationError("term coefficient must be +1");
        }
        ProjectorTerm term;
        std::string tok;
        while (fields >> tok) {
            const auto colon = tok.find(':');
            if (colon == std::string::npos) {
                throw ValidationError("malformed factor '" + tok + "'");
            }
            const std::string kind = tok.substr(colon + 1);
            if (kind != "P0" && kind != "P1") {
                throw ValidationError("unknown projector '" + kind + "'");
            }
            const auto qubit = static_cast<std::size_t>(std::stoul(tok.substr(0, colon)));
            if (qubit >= out.num_qubits()) {
                throw ValidationError("factor qubit out of range");
            }
            term.factors.push_back({qubit, kind == "P1" ? Projector::P1 : Projector::P0});
        }
        out.terms.push_back(std::move(term));
    }
    return out;
}

} // namespace ramsey_aqc
