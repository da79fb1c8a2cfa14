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
// Walks the incremental-N search for R(3,3) and prints one line per N.
#include <ramsey_aqc/ramsey_aqc.hpp>

#include <cstdio>

int main() {
    using namespace ramsey_aqc;
    SweepConfig cfg;
    cfg.T = 5.0;
    cfg.steps = 500;
    cfg.start_N = 4;
    const SweepReport report = find_ramsey(3, 3, cfg);
    for (const auto &r : report.records) {
        std::printf("N=%d L=%zu E_gs=%llu D=%llu P_s=%.3f %s\n", r.N, r.L,
                    static_cast<unsigned long long>(r.e_gs),
                    static_cast<unsigned long long>(r.degeneracy), r.p_success,
                    std::string(to_string(r.decision)).c_str());
    }
    std::printf("R(3,3) = %d\n", report.ramsey_number);
    return 0;
}
