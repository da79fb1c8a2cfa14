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
 * In-place unnormalized fast Walsh-Hadamard transform, W W = 2^L I.
 *
 * The index space is viewed as rows of kTile contiguous elements. Strides
 * below kTile are finished one row at a time; larger strides are finished
 * on narrow column strips spanning all rows, so each element is loaded
 * from memory about twice per transform.
 */
#pragma once

#include "errors.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <span>

namespace ramsey_aqc {

namespace detail {

template <class T> inline void butterfly4(T &a, T &b, T &c, T &d) {
    const T s0 = a + b;
    const T s1 = a - b;
    const T t0 = c + d;
    const T t1 = c - d;
    a = s0 + t0;
    b = s1 + t1;
    c = s0 - t0;
    d = s1 - t1;
}

template <class T> inline void butterfly2(T &a, T &b) {
    const T x = a;
    a = x + b;
    b = x - b;
}

/// Full transform of `len` contiguous elements.
template <class T> void fwht_contiguous(T *v, std::size_t len) {
    std::size_t h = 1;
    for (; 4 * h <= len; h *= 4) {
        for (std::size_t g = 0; g < len; g += 4 * h) {
            for (std::size_t j = g; j < g + h; ++j) {
                butterfly4(v[j], v[j + h], v[j + 2 * h], v[j + 3 * h]);
            }
        }
    }
    if (h < len) {
        for (std::size_t j = 0; j < h; ++j) {
            butterfly2(v[j], v[j + h]);
        }
    }
}

/// Transform across `rows` rows (stride `pitch`) for columns [c0, c0 + width).
template <class T>
void fwht_columns(T *v, std::size_t rows, std::size_t pitch, std::size_t c0, std::size_t width) {
    std::size_t h = 1;
    for (; 4 * h <= rows; h *= 4) {
        for (std::size_t g = 0; g < rows; g += 4 * h) {
            for (std::size_t r = g; r < g + h; ++r) {
                T *a = v + r * pitch + c0;
                T *b = a + h * pitch;
                T *c = b + h * pitch;
                T *d = c + h * pitch;
                for (std::size_t k = 0; k < width; ++k) {
                    butterfly4(a[k], b[k], c[k], d[k]);
                }
            }
        }
    }
    if (h < rows) {
        for (std::size_t r = 0; r < h; ++r) {
            T *a = v + r * pitch + c0;
            T *b = a + h * pitch;
            for (std::size_t k = 0; k < width; ++k) {
                butterfly2(a[k], b[k]);
            }
        }
    }
}

} // namespace detail

template <class T> void fwht(std::span<T> v) {
    constexpr std::size_t kTile = std::size_t{1} << 14;
    constexpr std::size_t kStrip = 32;
    const std::size_t n = v.size();
    if (!std::has_single_bit(n)) {
        throw ValidationError("Walsh-Hadamard transform needs a power-of-two length");
    }
    const std::size_t tile = std::min(n, kTile);
    const std::size_t rows = n / tile;
    T *data = v.data();
    parallel::for_each_index(rows, n >= parallel::kSerialBelow, [&](std::size_t r) {
        detail::fwht_contiguous(data + r * tile, tile);
    });
    if (rows > 1) {
        parallel::for_each_index(tile / kStrip, true, [&](std::size_t strip) {
            detail::fwht_columns(data, rows, tile, strip * kStrip, kStrip);
        });
    }
}

} // namespace ramsey_aqc
