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
 * Bijection between simple graphs on N vertices, length-L edge bitstrings
 * and computational-basis indices.
 *
 * Edge slots are ordered column-wise through the strict lower triangle of
 * the adjacency matrix: (2,1), (3,1), ..., (N,1), (3,2), ..., (N,N-1).
 * Slot l is qubit l and bit l (least significant first) of the basis index.
 * Vertices are 1-based throughout the public API.
 */
#pragma once

#include "errors.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey_aqc {

/// Largest vertex count whose edge string fits a 64-bit word.
inline constexpr int kMaxCodecVertices = 11;

[[nodiscard]] constexpr std::size_t num_edge_slots(int n_vertices) noexcept {
    return n_vertices < 2 ? 0
                          : static_cast<std::size_t>(n_vertices) *
                                static_cast<std::size_t>(n_vertices - 1) / 2;
}

/// Vertex count N with N(N-1)/2 == length, if one exists (N >= 2).
[[nodiscard]] inline std::optional<int> vertices_for_length(std::size_t length) {
    for (int n = 2; num_edge_slots(n) <= length; ++n) {
        if (num_edge_slots(n) == length) {
            return n;
        }
    }
    return std::nullopt;
}

/// Position of vertex pair (i, j), i > j, in the edge string.
[[nodiscard]] inline std::size_t edge_index(int i, int j, int n_vertices) {
    if (j < 1 || i <= j || i > n_vertices) {
        throw ValidationError("invalid vertex pair (" + std::to_string(i) + "," +
                              std::to_string(j) + ") for N=" +
                              std::to_string(n_vertices));
    }
    const auto jj = static_cast<std::size_t>(j - 1);
    const auto nn = static_cast<std::size_t>(n_vertices);
    return jj * nn - jj * (jj + 1) / 2 + static_cast<std::size_t>(i - j - 1);
}

/// Symmetric 0/1 matrix with zero diagonal. Indices are 1-based.
class AdjacencyMatrix {
  public:
    explicit AdjacencyMatrix(int n_vertices)
        : n_(n_vertices), entries_(static_cast<std::size_t>(n_vertices) *
                                       static_cast<std::size_t>(n_vertices),
                                   0) {
        if (n_vertices < 1) {
            throw ValidationError("adjacency matrix needs at least one vertex");
        }
    }

    /// Builds from explicit rows; validated by encode().
    static AdjacencyMatrix from_rows(const std::vector<std::vector<int>> &rows) {
        AdjacencyMatrix a(static_cast<int>(rows.size()));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != rows.size()) {
                throw ValidationError("adjacency matrix must be square");
            }
            for (std::size_t c = 0; c < rows.size(); ++c) {
                if (rows[r][c] != 0 && rows[r][c] != 1) {
                    throw ValidationError("adjacency entries must be 0 or 1");
                }
                a.entries_[r * rows.size() + c] =
                    static_cast<std::uint8_t>(rows[r][c]);
            }
        }
        return a;
    }

    [[nodiscard]] int n_vertices() const noexcept { return n_; }

    [[nodiscard]] int at(int i, int j) const { return entries_[offset(i, j)]; }

    /// Sets both (i,j) and (j,i).
    void set_edge(int i, int j, bool present = true) {
        if (i == j) {
            throw ValidationError("self-loops are not allowed");
        }
        entries_[offset(i, j)] = present ? 1 : 0;
        entries_[offset(j, i)] = present ? 1 : 0;
    }

    [[nodiscard]] bool is_symmetric() const noexcept {
        for (int i = 1; i <= n_; ++i) {
            for (int j = 1; j < i; ++j) {
                if (at(i, j) != at(j, i)) {
                    return false;
                }
            }
        }
        return true;
    }

    [[nodiscard]] bool has_zero_diagonal() const noexcept {
        for (int i = 1; i <= n_; ++i) {
            if (at(i, i) != 0) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const AdjacencyMatrix &, const AdjacencyMatrix &) = default;

  private:
    [[nodiscard]] std::size_t offset(int i, int j) const {
        if (i < 1 || j < 1 || i > n_ || j > n_) {
            throw ValidationError("vertex index out of range");
        }
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j - 1);
    }

    int n_;
    std::vector<std::uint8_t> entries_;
};

/// Edge string of an N-vertex graph, packed LSB-first into one word.
class GraphBits {
  public:
    GraphBits(int n_vertices, std::uint64_t bits) : n_(n_vertices), bits_(bits) {
        if (n_vertices < 2 || n_vertices > kMaxCodecVertices) {
            throw ValidationError("GraphBits supports 2 <= N <= " +
                                  std::to_string(kMaxCodecVertices));
        }
        if (length() < 64 && (bits >> length()) != 0) {
            throw ValidationError("bits set beyond the edge-string length");
        }
    }

    /// Parses "0101..." where character l is the value of slot l.
    static GraphBits from_text(std::string_view text) {
        const auto n = vertices_for_length(text.size());
        if (!n || *n > kMaxCodecVertices) {
            throw ValidationError("bitstring length " + std::to_string(text.size()) +
                                  " is not N(N-1)/2 for a supported N");
        }
        std::uint64_t bits = 0;
        for (std::size_t l = 0; l < text.size(); ++l) {
            if (text[l] == '1') {
                bits |= std::uint64_t{1} << l;
            } else if (text[l] != '0') {
                throw ValidationError("bitstring may contain only '0' and '1'");
            }
        }
        return {*n, bits};
    }

    [[nodiscard]] int n_vertices() const noexcept { return n_; }
    [[nodiscard]] std::size_t length() const noexcept { return num_edge_slots(n_); }
    [[nodiscard]] std::uint64_t word() const noexcept { return bits_; }

    [[nodiscard]] bool test(std::size_t position) const noexcept {
        return ((bits_ >> position) & 1U) != 0;
    }

    [[nodiscard]] bool has_edge(int i, int j) const {
        return i > j ? test(edge_index(i, j, n_)) : test(edge_index(j, i, n_));
    }

    [[nodiscard]] int edge_count() const noexcept { return std::popcount(bits_); }

    [[nodiscard]] std::string to_text() const {
        std::string s(length(), '0');
        for (std::size_t l = 0; l < s.size(); ++l) {
            if (test(l)) {
                s[l] = '1';
            }
        }
        return s;
    }

    friend bool operator==(const GraphBits &, const GraphBits &) = default;

  private:
    int n_;
    std::uint64_t bits_;
};

[[nodiscard]] inline GraphBits encode(const AdjacencyMatrix &a) {
    if (!a.is_symmetric()) {
        throw ValidationError("adjacency matrix is not symmetric");
    }
    if (!a.has_zero_diagonal()) {
        throw ValidationError("adjacency matrix has a nonzero diagonal entry");
    }
    const int n = a.n_vertices();
    std::uint64_t bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = j + 1; i <= n; ++i) {
            if (a.at(i, j) != 0) {
                bits |= std::uint64_t{1} << edge_index(i, j, n);
            }
        }
    }
    return {n, bits};
}

[[nodiscard]] inline AdjacencyMatrix decode(const GraphBits &g) {
    const int n = g.n_vertices();
    AdjacencyMatrix a(n);
    std::size_t l = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = j + 1; i <= n; ++i, ++l) {
            if (g.test(l)) {
                a.set_edge(i, j);
            }
        }
    }
    return a;
}

/// Machine index of the basis state |g>: qubit l is bit l.
[[nodiscard]] inline std::uint64_t basis_index(const GraphBits &g) noexcept {
    return g.word();
}

[[nodiscard]] inline GraphBits from_basis_index(int n_vertices, std::uint64_t index) {
    return {n_vertices, index};
}

[[nodiscard]] inline GraphBits complement(const GraphBits &g) {
    const std::size_t len = g.length();
    const std::uint64_t mask = len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
    return {g.n_vertices(), ~g.word() & mask};
}

/// One "i j" line per edge, i > j, in edge-string order.
[[nodiscard]] inline std::string to_edge_list(const GraphBits &g) {
    std::ostringstream out;
    const int n = g.n_vertices();
    for (int j = 1; j < n; ++j) {
        for (int i = j + 1; i <= n; ++i) {
            if (g.test(edge_index(i, j, n))) {
                out << i << ' ' << j << '\n';
            }
        }
    }
    return out.str();
}

/// Parses "i j" lines (either order, blank lines and '#' comments ignored).
[[nodiscard]] inline GraphBits from_edge_list(std::string_view text, int n_vertices) {
    std::uint64_t bits = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        int a = 0;
        int b = 0;
        if (!(fields >> a)) {
            continue;
        }
        std::string rest;
        if (!(fields >> b) || (fields >> rest)) {
            throw ValidationError("edge-list line must hold exactly two vertices: '" +
                                  line + "'");
        }
        bits |= std::uint64_t{1} << (a > b ? edge_index(a, b, n_vertices)
                                           : edge_index(b, a, n_vertices));
    }
    return {n_vertices, bits};
}

} // namespace ramsey_aqc
