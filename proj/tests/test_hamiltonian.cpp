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
#include <ramsey_aqc/evolution.hpp>
#include <ramsey_aqc/hamiltonian.hpp>

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <random>

using namespace ramsey_aqc;

namespace {

StateVector random_state(std::size_t L, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    StateVector v(L);
    for (auto &a : v.amplitudes()) {
        a = {g(rng), g(rng)};
    }
    return v;
}

/// Reference: direct sum over single-qubit flips, written independently.
StateVector hi_reference(const StateVector &psi) {
    const std::size_t L = psi.num_qubits();
    StateVector out(L);
    for (std::size_t x = 0; x < psi.size(); ++x) {
        for (std::size_t l = 0; l < L; ++l) {
            // (I - X_l)/2
            out[x] += 0.5 * psi[x] - 0.5 * psi[x ^ (std::size_t{1} << l)];
        }
    }
    return out;
}

double max_diff(const StateVector &a, const StateVector &b) {
    double d = 0.0;
    for (std::size_t x = 0; x < a.size(); ++x) {
        d = std::max(d, std::abs(a[x] - b[x]));
    }
    return d;
}

} // namespace

TEST(ApplyHp, Examples) {
    const CostTable t = build_cost_table({3, 3, 4});
    const std::size_t g = 0b111011;
    const StateVector out = apply_hp(t, StateVector::basis_state(6, g));
    for (std::size_t x = 0; x < out.size(); ++x) {
        EXPECT_EQ(out[x], x == g ? Amplitude(t[g]) : Amplitude{});
    }

    const CostTable zero({3, 3, 3}, std::vector<std::uint32_t>(8, 0));
    const StateVector z = apply_hp(zero, random_state(3, 1));
    EXPECT_EQ(z.norm(), 0.0);

    const CostTable t2 = build_cost_table({2, 2, 2});
    const StateVector u = initial_state(1);
    EXPECT_EQ(max_diff(apply_hp(t2, u), u), 0.0);

    StateVector wrong(2);
    EXPECT_THROW((void)apply_hp(t2, wrong), ValidationError);
}

TEST(ApplyHi, Examples) {
    for (std::size_t L : {1, 3, 6}) {
        EXPECT_LT(apply_hi(initial_state(L), L).norm(), 1e-14);
    }

    const StateVector out = apply_hi(StateVector::basis_state(3, 0), 3);
    EXPECT_DOUBLE_EQ(out[0].real(), 1.5);
    EXPECT_DOUBLE_EQ(out[1].real(), -0.5);
    EXPECT_DOUBLE_EQ(out[2].real(), -0.5);
    EXPECT_DOUBLE_EQ(out[4].real(), -0.5);
    for (std::size_t x : {3, 5, 6, 7}) {
        EXPECT_EQ(out[x], Amplitude{});
    }

    // All-|-> product state: amplitude (-1)^popcount(x) / sqrt(2^L), eigenvalue L.
    const std::size_t L = 5;
    StateVector minus(L);
    for (std::size_t x = 0; x < minus.size(); ++x) {
        minus[x] = (std::popcount(x) % 2 == 0 ? 1.0 : -1.0) / std::sqrt(32.0);
    }
    const StateVector hm = apply_hi(minus, L);
    for (std::size_t x = 0; x < minus.size(); ++x) {
        EXPECT_NEAR(std::abs(hm[x] - 5.0 * minus[x]), 0.0, 1e-14);
    }

    EXPECT_THROW((void)apply_hi(StateVector(3), 4), ValidationError);
}

TEST(ApplyHi, MatchesReferenceAcrossBlockBoundaries) {
    // L = 17 exercises both in-block and cross-block flip paths.
    for (std::size_t L : {4, 9, 17}) {
        const StateVector psi = random_state(L, L);
        EXPECT_LT(max_diff(apply_hi(psi, L), hi_reference(psi)), 1e-11) << L;
    }
}

TEST(ApplyHi, DiagonalElementIsHalfL) {
    const std::size_t L = 6;
    for (std::size_t x : {0, 5, 63}) {
        const StateVector e = StateVector::basis_state(L, x);
        EXPECT_DOUBLE_EQ(inner_product(e.amplitudes(), apply_hi(e, L).amplitudes()).real(), 3.0);
    }
}

TEST(ApplyHi, HadamardPatternsAreEigenvectors) {
    const std::size_t L = 6;
    for (std::size_t p = 0; p < 64; p += 7) {
        StateVector v(L);
        for (std::size_t x = 0; x < v.size(); ++x) {
            v[x] = (std::popcount(x & p) % 2 == 0 ? 1.0 : -1.0) / 8.0;
        }
        const StateVector hv = apply_hi(v, L);
        for (std::size_t x = 0; x < v.size(); ++x) {
            ASSERT_NEAR(std::abs(hv[x] - static_cast<double>(std::popcount(p)) * v[x]), 0.0, 1e-13);
        }
    }
}

TEST(ApplyH, EndpointsAndLinearity) {
    const CostTable t = build_cost_table({3, 3, 5});
    const StateVector psi = random_state(10, 4);
    EXPECT_EQ(max_diff(apply_h(0.0, t, psi), apply_hi(psi, 10)), 0.0);
    EXPECT_LT(max_diff(apply_h(1.0, t, psi), apply_hp(t, psi)), 1e-15);

    const std::size_t g = 123;
    const StateVector e = StateVector::basis_state(10, g);
    const StateVector half = apply_h(0.5, t, e);
    const StateVector hi = apply_hi(e, 10);
    for (std::size_t x = 0; x < e.size(); ++x) {
        const Amplitude want = 0.5 * hi[x] + (x == g ? Amplitude(0.5 * t[g]) : Amplitude{});
        EXPECT_NEAR(std::abs(half[x] - want), 0.0, 1e-15);
    }

    EXPECT_THROW((void)apply_h(1.5, t, psi), ValidationError);
    EXPECT_THROW((void)apply_h(-0.1, t, psi), ValidationError);
}

TEST(Hermiticity, RandomVectorPairs) {
    const CostTable t = build_cost_table({3, 3, 6});
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const StateVector phi = random_state(15, 100 + seed);
        const StateVector psi = random_state(15, 200 + seed);
        const auto check = [&](const StateVector &h_psi, const StateVector &h_phi) {
            const Amplitude a = inner_product(phi.amplitudes(), h_psi.amplitudes());
            const Amplitude b = std::conj(inner_product(psi.amplitudes(), h_phi.amplitudes()));
            EXPECT_LT(std::abs(a - b) / std::max(1.0, std::abs(a)), 1e-10);
        };
        check(apply_hi(psi, 15), apply_hi(phi, 15));
        check(apply_hp(t, psi), apply_hp(t, phi));
        check(apply_h(0.37, t, psi), apply_h(0.37, t, phi));
    }
}

TEST(Schedule, LinearAndClamped) {
    const Schedule s(5.0);
    EXPECT_EQ(s(0.0), 0.0);
    EXPECT_EQ(s(5.0), 1.0);
    EXPECT_DOUBLE_EQ(s(2.5), 0.5);
    double prev = 0.0;
    for (int k = 0; k <= 100; ++k) {
        const double v = s(0.05 * k);
        EXPECT_GE(v, prev);
        prev = v;
    }
    EXPECT_THROW(Schedule(0.0), ValidationError);
}
