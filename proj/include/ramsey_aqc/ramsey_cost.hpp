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
 * Ramsey cost h(G) = #m-cliques + #n-independent-sets, the full cost table
 * over all 2^L edge strings, and the exact classical ground-state oracle.
 */
#pragma once

#include "errors.hpp"
#include "graph_codec.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace ramsey_aqc {

/// Default qubit cap for anything that allocates 2^L entries.
inline constexpr std::size_t kDefaultMaxQubits = 24;
inline constexpr std::size_t kDefaultWitnessCap = 10000;

[[nodiscard]] constexpr std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

/// Calls fn(subset) for every k-subset of {1..n} in lexicographic order.
template <class Fn> void for_each_subset(int n, int k, Fn &&fn) {
    if (k < 0 || k > n) {
        return;
    }
    std::vector<int> s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        s[static_cast<std::size_t>(i)] = i + 1;
    }
    while (true) {
        fn(static_cast<const std::vector<int> &>(s));
        int i = k - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i + 1) {
            --i;
        }
        if (i < 0) {
            return;
        }
        ++s[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

/// Bit mask of the edge slots joining the vertices of each k-subset, in
/// lexicographic subset order.
[[nodiscard]] inline std::vector<std::uint64_t> subset_edge_masks(int n_vertices, int k) {
    std::vector<std::uint64_t> masks;
    for_each_subset(n_vertices, k, [&](const std::vector<int> &s) {
        std::uint64_t mask = 0;
        for (std::size_t a = 0; a < s.size(); ++a) {
            for (std::size_t b = a + 1; b < s.size(); ++b) {
                mask |= std::uint64_t{1} << edge_index(s[b], s[a], n_vertices);
            }
        }
        masks.push_back(mask);
    });
    return masks;
}

struct RamseyInstance {
    int m = 2; ///< clique order
    int n = 2; ///< independent-set order
    int N = 2; ///< vertex count

    RamseyInstance() = default;
    RamseyInstance(int clique_order, int independent_order, int n_vertices)
        : m(clique_order), n(independent_order), N(n_vertices) {
        if (m < 2 || n < 2) {
            throw ValidationError("clique and independent-set orders must be >= 2");
        }
        if (N < 1) {
            throw ValidationError("vertex count must be >= 1");
        }
    }

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_edge_slots(N); }

    friend bool operator==(const RamseyInstance &, const RamseyInstance &) = default;
};

[[nodiscard]] inline std::uint64_t count_cliques(const GraphBits &g, int m) {
    std::uint64_t total = 0;
    for_each_subset(g.n_vertices(), m, [&](const std::vector<int> &s) {
        for (std::size_t a = 0; a < s.size(); ++a) {
            for (std::size_t b = a + 1; b < s.size(); ++b) {
                if (!g.has_edge(s[b], s[a])) {
                    return;
                }
            }
        }
        ++total;
    });
    return total;
}

[[nodiscard]] inline std::uint64_t count_independent(const GraphBits &g, int n) {
    std::uint64_t total = 0;
    for_each_subset(g.n_vertices(), n, [&](const std::vector<int> &s) {
        for (std::size_t a = 0; a < s.size(); ++a) {
            for (std::size_t b = a + 1; b < s.size(); ++b) {
                if (g.has_edge(s[b], s[a])) {
                    return;
                }
            }
        }
        ++total;
    });
    return total;
}

[[nodiscard]] inline std::uint64_t cost(const GraphBits &g, const RamseyInstance &inst) {
    if (g.n_vertices() != inst.N) {
        throw ValidationError("graph has " + std::to_string(g.n_vertices()) +
                              " vertices, instance expects " + std::to_string(inst.N));
    }
    return count_cliques(g, inst.m) + count_independent(g, inst.n);
}

/// h(G) for every basis index; the diagonal of the problem Hamiltonian.
class CostTable {
  public:
    CostTable(RamseyInstance inst, std::vector<std::uint32_t> values)
        : inst_(inst), values_(std::move(values)) {
        if (values_.size() != (std::size_t{1} << inst_.num_qubits())) {
            throw ValidationError("cost table size must be 2^L");
        }
    }

    [[nodiscard]] const RamseyInstance &instance() const noexcept { return inst_; }
    [[nodiscard]] std::size_t num_qubits() const noexcept { return inst_.num_qubits(); }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] const std::vector<std::uint32_t> &values() const noexcept { return values_; }
    [[nodiscard]] std::uint32_t operator[](std::size_t x) const noexcept { return values_[x]; }
    [[nodiscard]] std::uint32_t max_value() const {
        return *std::max_element(values_.begin(), values_.end());
    }

  private:
    RamseyInstance inst_;
    std::vector<std::uint32_t> values_;
};

inline void check_qubit_cap(std::size_t n_qubits, std::size_t max_qubits) {
    if (n_qubits > max_qubits) {
        throw ResourceLimitError("instance needs " + std::to_string(n_qubits) +
                                 " qubits, cap is " + std::to_string(max_qubits));
    }
}

[[nodiscard]] inline CostTable build_cost_table(const RamseyInstance &inst,
                                                std::size_t max_qubits = kDefaultMaxQubits) {
    const std::size_t L = inst.num_qubits();
    check_qubit_cap(L, max_qubits);
    const auto clique_masks = subset_edge_masks(inst.N, inst.m);
    const auto indep_masks = subset_edge_masks(inst.N, inst.n);
    std::vector<std::uint32_t> values(std::size_t{1} << L);
    parallel::for_blocks(values.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t x = begin; x < end; ++x) {
            std::uint32_t h = 0;
            for (const std::uint64_t mask : clique_masks) {
                h += (x & mask) == mask ? 1U : 0U;
            }
            for (const std::uint64_t mask : indep_masks) {
                h += (x & mask) == 0 ? 1U : 0U;
            }
            values[x] = h;
        }
    });
    return {inst, std::move(values)};
}

struct OracleResult {
    std::uint64_t e_gs = 0;
    std::uint64_t degeneracy = 0;
    std::vector<std::uint64_t> witnesses; ///< basis indices, first `cap` in index order
};

namespace detail {
struct MinCount {
    std::uint64_t min = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t count = 0;

    void add(std::uint64_t v, std::uint64_t c = 1) {
        if (v < min) {
            min = v;
            count = c;
        } else if (v == min) {
            count += c;
        }
    }
};

template <class CostAt>
OracleResult scan_ground_state(std::size_t size, std::size_t witness_cap, CostAt &&cost_at) {
    const std::size_t nblocks = (size + parallel::kBlock - 1) / parallel::kBlock;
    std::vector<MinCount> partial(nblocks);
    parallel::for_blocks(size, [&](std::size_t begin, std::size_t end) {
        MinCount mc;
        for (std::size_t x = begin; x < end; ++x) {
            mc.add(cost_at(x));
        }
        partial[begin / parallel::kBlock] = mc;
    });
    MinCount total;
    for (const auto &p : partial) {
        total.add(p.min, p.count);
    }
    OracleResult r{total.min, total.count, {}};
    for (std::size_t x = 0; x < size && r.witnesses.size() < witness_cap; ++x) {
        if (cost_at(x) == total.min) {
            r.witnesses.push_back(x);
        }
    }
    return r;
}
} // namespace detail

/// Minimum of the table and its multiplicity; deterministic.
[[nodiscard]] inline OracleResult ground_state(const CostTable &table,
                                               std::size_t witness_cap = kDefaultWitnessCap) {
    return detail::scan_ground_state(table.size(), witness_cap,
                                     [&](std::size_t x) -> std::uint64_t { return table[x]; });
}

/// Same answer as ground_state(build_cost_table(inst)) without storing a
/// table; every graph is scored through the adjacency-walk cost().
[[nodiscard]] inline OracleResult
ground_state_streaming(const RamseyInstance &inst, std::size_t witness_cap = kDefaultWitnessCap,
                       std::size_t max_qubits = kDefaultMaxQubits) {
    const std::size_t L = inst.num_qubits();
    check_qubit_cap(L, max_qubits);
    if (inst.N < 2) {
        return {0, 1, {0}};
    }
    return detail::scan_ground_state(std::size_t{1} << L, witness_cap, [&](std::size_t x) {
        return cost(from_basis_index(inst.N, x), inst);
    });
}

/// Smallest N >= N_start whose minimum cost is positive.
[[nodiscard]] inline int classical_ramsey(int m, int n, int N_start,
                                          std::size_t max_qubits = kDefaultMaxQubits) {
    for (int N = std::max(N_start, 1);; ++N) {
        const RamseyInstance inst(m, n, N);
        if (inst.num_qubits() > max_qubits) {
            throw ResourceLimitError("no threshold found below the " +
                                     std::to_string(max_qubits) + "-qubit cap (reached N=" +
                                     std::to_string(N) + ")");
        }
        if (ground_state(build_cost_table(inst, max_qubits), 0).e_gs > 0) {
            return N;
        }
    }
}

/// Exact R(m,n) where known: R(2,s) = s and the classical values with m,n <= 5.
[[nodiscard]] inline std::optional<int> known_ramsey(int m, int n) {
    if (m > n) {
        std::swap(m, n);
    }
    if (m == 2) {
        return n;
    }
    struct Entry {
        int m, n, value;
    };
    static constexpr Entry table[] = {{3, 3, 6}, {3, 4, 9}, {3, 5, 14}, {4, 4, 18}, {4, 5, 25}};
    for (const auto &e : table) {
        if (e.m == m && e.n == n) {
            return e.value;
        }
    }
    return std::nullopt;
}

/// Largest N with C(N,m) 2^{1-C(m,2)} + C(N,n) 2^{1-C(n,2)} < 1.
[[nodiscard]] inline int union_bound(int m, int n) {
    const auto term = [](int N, int k) {
        if (N < k) {
            return 0.0;
        }
        const double log_binom =
            std::lgamma(N + 1.0) - std::lgamma(k + 1.0) - std::lgamma(N - k + 1.0);
        const double pairs = 0.5 * k * (k - 1);
        return std::exp(log_binom + (1.0 - pairs) * std::log(2.0));
    };
    int N = 1;
    while (term(N + 1, m) + term(N + 1, n) < 1.0) {
        ++N;
    }
    return N;
}

/// A strict lower bound for R(m,n).
[[nodiscard]] inline int lower_bound(int m, int n) {
    if (m < 2 || n < 2) {
        throw ValidationError("lower_bound requires m, n >= 2");
    }
    int from_table = 1;
    if (const auto r = known_ramsey(m, n)) {
        from_table = *r - 1;
    } else if (std::min(m, n) == 5 && std::max(m, n) == 5) {
        from_table = 42; // R(5,5) >= 43
    }
    return std::max(from_table, union_bound(m, n));
}

} // namespace ramsey_aqc
