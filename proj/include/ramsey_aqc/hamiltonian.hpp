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
 * State vectors and the matrix-free AQE operators.
 *
 *   H_i  = sum_l (I - X_l) / 2
 *   H_P  = diag(h)                       (from a CostTable)
 *   H(s) = (1 - s) H_i + s H_P,  s = t / T
 *
 * Operators are applied out of place: neighbour reads x ^ 2^l come from the
 * input span only.
 */
#pragma once

#include "errors.hpp"
#include "parallel.hpp"
#include "ramsey_cost.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ramsey_aqc {

using Amplitude = std::complex<double>;

/// 2^L complex amplitudes over the computational basis.
class StateVector {
  public:
    explicit StateVector(std::size_t n_qubits)
        : n_qubits_(n_qubits), amp_(std::size_t{1} << n_qubits) {}

    StateVector(std::size_t n_qubits, std::vector<Amplitude> amplitudes)
        : n_qubits_(n_qubits), amp_(std::move(amplitudes)) {
        if (amp_.size() != (std::size_t{1} << n_qubits)) {
            throw ValidationError("state vector size must be 2^L");
        }
    }

    static StateVector basis_state(std::size_t n_qubits, std::size_t index) {
        StateVector v(n_qubits);
        v.amp_.at(index) = 1.0;
        return v;
    }

    [[nodiscard]] std::size_t num_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amp_.size(); }
    [[nodiscard]] std::span<Amplitude> amplitudes() noexcept { return amp_; }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept { return amp_; }
    [[nodiscard]] Amplitude &operator[](std::size_t x) noexcept { return amp_[x]; }
    [[nodiscard]] const Amplitude &operator[](std::size_t x) const noexcept { return amp_[x]; }

    [[nodiscard]] double norm() const {
        return std::sqrt(parallel::reduce_blocks(
            amp_.size(), 0.0, [&](std::size_t begin, std::size_t end) {
                double acc = 0.0;
                for (std::size_t x = begin; x < end; ++x) {
                    acc += std::norm(amp_[x]);
                }
                return acc;
            }));
    }

  private:
    std::size_t n_qubits_;
    std::vector<Amplitude> amp_;
};

/// <a|b>, conjugate-linear in a.
[[nodiscard]] inline Amplitude inner_product(std::span<const Amplitude> a,
                                             std::span<const Amplitude> b) {
    if (a.size() != b.size()) {
        throw ValidationError("inner product of vectors with different lengths");
    }
    return parallel::reduce_blocks(a.size(), Amplitude{},
                                   [&](std::size_t begin, std::size_t end) {
                                       Amplitude acc{};
                                       for (std::size_t x = begin; x < end; ++x) {
                                           acc += std::conj(a[x]) * b[x];
                                       }
                                       return acc;
                                   });
}

namespace detail {
inline void check_length(std::size_t got, std::size_t want, const char *what) {
    if (got != want) {
        throw ValidationError(std::string(what) + ": length " + std::to_string(got) +
                              " does not match " + std::to_string(want));
    }
}
} // namespace detail

/// out = H_P in.
template <class T>
void apply_hp(const CostTable &table, std::span<const T> in, std::span<T> out) {
    detail::check_length(in.size(), table.size(), "apply_hp input");
    detail::check_length(out.size(), table.size(), "apply_hp output");
    parallel::for_blocks(in.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t x = begin; x < end; ++x) {
            out[x] = static_cast<double>(table[x]) * in[x];
        }
    });
}

namespace detail {

/// dst[x - begin] = (H(s) in)[x] for x in [begin, end), where [begin, end)
/// is an aligned power-of-two block. H_i weight is (1 - s), H_P weight is s;
/// a null table drops the H_P part.
template <class T>
void h_block(double s, const CostTable *table, std::size_t n_qubits, std::span<const T> in,
             std::size_t begin, std::size_t end, T *dst) {
    const std::size_t len = end - begin;
    const double a = 1.0 - s;
    const double diag_i = 0.5 * a * static_cast<double>(n_qubits);
    const double c = -0.5 * a;
    const T *src = in.data() + begin;
    if (table != nullptr) {
        const std::uint32_t *h = table->values().data() + begin;
        for (std::size_t k = 0; k < len; ++k) {
            dst[k] = (diag_i + s * static_cast<double>(h[k])) * src[k];
        }
    } else {
        for (std::size_t k = 0; k < len; ++k) {
            dst[k] = diag_i * src[k];
        }
    }
    if (a == 0.0) {
        return;
    }
    for (std::size_t l = 0; l < n_qubits; ++l) {
        const std::size_t bit = std::size_t{1} << l;
        if (bit < len) {
            for (std::size_t g = 0; g < len; g += 2 * bit) {
                for (std::size_t k = g; k < g + bit; ++k) {
                    dst[k] += c * src[k + bit];
                    dst[k + bit] += c * src[k];
                }
            }
        } else {
            const T *partner = in.data() + (begin ^ bit);
            for (std::size_t k = 0; k < len; ++k) {
                dst[k] += c * partner[k];
            }
        }
    }
}

} // namespace detail

/// out = H_i in, with (H_i v)[x] = (L/2) v[x] - (1/2) sum_l v[x ^ 2^l].
template <class T>
void apply_hi(std::span<const T> in, std::span<T> out, std::size_t n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    detail::check_length(in.size(), dim, "apply_hi input");
    detail::check_length(out.size(), dim, "apply_hi output");
    parallel::for_blocks(dim, [&](std::size_t begin, std::size_t end) {
        detail::h_block<T>(0.0, nullptr, n_qubits, in, begin, end, out.data() + begin);
    });
}

/// out = H(s) in = (1 - s) H_i in + s H_P in.
template <class T>
void apply_h(double s, const CostTable &table, std::span<const T> in, std::span<T> out) {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw ValidationError("schedule parameter s must lie in [0, 1]");
    }
    detail::check_length(in.size(), table.size(), "apply_h input");
    detail::check_length(out.size(), table.size(), "apply_h output");
    parallel::for_blocks(in.size(), [&](std::size_t begin, std::size_t end) {
        detail::h_block<T>(s, &table, table.num_qubits(), in, begin, end, out.data() + begin);
    });
}

// StateVector conveniences.

[[nodiscard]] inline StateVector apply_hp(const CostTable &table, const StateVector &psi) {
    StateVector out(psi.num_qubits());
    apply_hp<Amplitude>(table, psi.amplitudes(), out.amplitudes());
    return out;
}

[[nodiscard]] inline StateVector apply_hi(const StateVector &psi, std::size_t n_qubits) {
    detail::check_length(psi.num_qubits(), n_qubits, "apply_hi qubit count");
    StateVector out(n_qubits);
    apply_hi<Amplitude>(psi.amplitudes(), out.amplitudes(), n_qubits);
    return out;
}

[[nodiscard]] inline StateVector apply_h(double s, const CostTable &table, const StateVector &psi) {
    StateVector out(psi.num_qubits());
    apply_h<Amplitude>(s, table, psi.amplitudes(), out.amplitudes());
    return out;
}

/// Linear interpolation s(t) = t / T.
class Schedule {
  public:
    explicit Schedule(double total_time) : T_(total_time) {
        if (!(total_time > 0.0) || !std::isfinite(total_time)) {
            throw ValidationError("runtime T must be positive and finite");
        }
    }
    [[nodiscard]] double total_time() const noexcept { return T_; }
    [[nodiscard]] double operator()(double t) const noexcept {
        return std::clamp(t / T_, 0.0, 1.0);
    }

  private:
    double T_;
};

} // namespace ramsey_aqc
