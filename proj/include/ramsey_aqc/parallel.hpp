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
 * Minimal fork-join helpers over index ranges.
 *
 * Work is split into fixed-size blocks whose boundaries do not depend on the
 * number of workers, and reductions combine per-block partials in block
 * order. Results are therefore bit-identical for any worker count.
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace ramsey_aqc::parallel {

inline constexpr std::size_t kBlock = std::size_t{1} << 14;
inline constexpr std::size_t kSerialBelow = std::size_t{1} << 16;

namespace detail {
inline std::atomic<unsigned> &worker_override() {
    static std::atomic<unsigned> value{0};
    return value;
}
} // namespace detail

/// Forces the worker count (0 restores the environment default).
inline void set_worker_count(unsigned workers) noexcept { detail::worker_override() = workers; }

/// Worker count from RAMSEY_AQC_THREADS (0 or unset = hardware concurrency).
inline unsigned worker_count() {
    if (const unsigned forced = detail::worker_override(); forced != 0) {
        return forced;
    }
    static const unsigned cached = [] {
        unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        const char *env = std::getenv("RAMSEY_AQC_THREADS");
        if (env == nullptr || *env == '\0') {
            return hw;
        }
        try {
            long v = std::stol(env);
            return v <= 0 ? hw : static_cast<unsigned>(v);
        } catch (...) {
            return hw;
        }
    }();
    return cached;
}

/// Calls fn(begin, end) over [0, n) in blocks of size kBlock.
template <class Fn> void for_blocks(std::size_t n, Fn &&fn) {
    const std::size_t nblocks = (n + kBlock - 1) / kBlock;
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(worker_count(), nblocks));
    if (workers <= 1 || n < kSerialBelow) {
        for (std::size_t b = 0; b < nblocks; ++b) {
            fn(b * kBlock, std::min(n, (b + 1) * kBlock));
        }
        return;
    }
    auto run = [&](unsigned w) {
        for (std::size_t b = w; b < nblocks; b += workers) {
            fn(b * kBlock, std::min(n, (b + 1) * kBlock));
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) {
        pool.emplace_back(run, w);
    }
    run(0);
}

/// Calls fn(i) for i in [0, count), items dealt round-robin to workers.
template <class Fn> void for_each_index(std::size_t count, bool heavy, Fn &&fn) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), count));
    if (!heavy || workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    auto run = [&](unsigned w) {
        for (std::size_t i = w; i < count; i += workers) {
            fn(i);
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) {
        pool.emplace_back(run, w);
    }
    run(0);
}

/// Sums fn(begin, end) over the same block partition, in block order.
template <class T, class Fn> T reduce_blocks(std::size_t n, T init, Fn &&fn) {
    const std::size_t nblocks = (n + kBlock - 1) / kBlock;
    std::vector<T> partial(nblocks, T{});
    for_blocks(n, [&](std::size_t begin, std::size_t end) {
        partial[begin / kBlock] = fn(begin, end);
    });
    for (const T &p : partial) {
        init += p;
    }
    return init;
}

} // namespace ramsey_aqc::parallel
