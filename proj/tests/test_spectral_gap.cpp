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
#include <ramsey_aqc/spectral_gap.hpp>

#include <gtest/gtest.h>

using namespace ramsey_aqc;

TEST(SpectralGap, InitialHamiltonianSpectrum) {
    const auto g = spectral_gap(RamseyInstance{3, 3, 4}, {0.0});
    ASSERT_EQ(g.size(), 1U);
    EXPECT_NEAR(g[0].e0, 0.0, 1e-9);
    EXPECT_NEAR(g[0].e1, 1.0, 1e-9);
    EXPECT_LT(g[0].residual0, 1e-8);
    EXPECT_LT(g[0].residual1, 1e-8);
}

TEST(SpectralGap, ProblemHamiltonianEndpoint) {
    const auto nondegenerate = spectral_gap(RamseyInstance{2, 5, 5}, {1.0});
    EXPECT_NEAR(nondegenerate[0].e0, 1.0, 1e-9);

    const auto degenerate = spectral_gap(RamseyInstance{3, 3, 4}, {1.0});
    EXPECT_NEAR(degenerate[0].e0, 0.0, 1e-9);
    EXPECT_NEAR(degenerate[0].e1, 0.0, 1e-9);
    EXPECT_NEAR(degenerate[0].gap(), 0.0, 1e-9);
}

TEST(SpectralGap, MatchesDenseDiagonalization) {
    for (const RamseyInstance inst : {RamseyInstance{3, 3, 4}, RamseyInstance{2, 5, 5},
                                      RamseyInstance{3, 3, 5}, RamseyInstance{2, 4, 4}}) {
        const CostTable t = build_cost_table(inst);
        const std::vector<double> s{0.0, 0.25, 0.5, 0.66, 0.9, 1.0};
        const auto lanczos = spectral_gap(t, s);
        for (std::size_t i = 0; i < s.size(); ++i) {
            const Eigen::VectorXd dense = dense_spectrum(s[i], t);
            EXPECT_NEAR(lanczos[i].e0, dense[0], 1e-8) << inst.N << " s=" << s[i];
            EXPECT_NEAR(lanczos[i].e1, dense[1], 1e-8) << inst.N << " s=" << s[i];
            EXPECT_LE(lanczos[i].e0, lanczos[i].e1);
        }
    }
}

TEST(SpectralGap, ZeroGapAtEndExactlyWhenGroundLevelIsDegenerate) {
    std::size_t checked = 0;
    for (int N = 3; num_edge_slots(N) <= kMaxGapQubits; ++N) {
        for (int m = 2; m <= 4; ++m) {
            for (int n = m; n <= 6; ++n) {
                const RamseyInstance inst{m, n, N};
                const CostTable t = build_cost_table(inst);
                const auto oracle = ground_state(t, 0);
                const auto g = spectral_gap(t, {1.0});
                EXPECT_NEAR(g[0].e0, static_cast<double>(oracle.e_gs), 1e-9);
                EXPECT_EQ(g[0].gap() < 1e-8, oracle.degeneracy > 1)
                    << m << "," << n << " N=" << N << " D=" << oracle.degeneracy;
                ++checked;
            }
        }
    }
    EXPECT_GT(checked, 30U);
}

TEST(SpectralGap, FifteenQubitInteriorPoint) {
    const auto g = spectral_gap(RamseyInstance{3, 3, 6}, {0.5});
    EXPECT_LT(g[0].residual0, 1e-8);
    EXPECT_LT(g[0].residual1, 1e-8);
    EXPECT_GT(g[0].gap(), 0.0);
}

TEST(SpectralGap, Guards) {
    EXPECT_THROW((void)spectral_gap(RamseyInstance{3, 3, 7}, {0.5}), ResourceLimitError);
    EXPECT_THROW((void)spectral_gap(RamseyInstance{3, 3, 4}, {1.5}), ValidationError);
    EXPECT_THROW((void)dense_spectrum(0.5, build_cost_table({3, 3, 6})), ResourceLimitError);
}

TEST(SpectralGap, ReportsNonConvergence) {
    LanczosOptions opt;
    opt.krylov_dim = 2;
    opt.max_restarts = 0;
    opt.tolerance = 1e-14;
    try {
        (void)spectral_gap(build_cost_table({3, 3, 5}), {0.5}, opt);
        FAIL() << "expected ConvergenceError";
    } catch (const ConvergenceError &e) {
        EXPECT_GT(e.residual(), 1e-14);
    }
}
