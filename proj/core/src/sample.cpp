// Copyright 2026 The davn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "davn/sample.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace davn {

SampleSummary sample_outcomes(const StateVector& s, std::uint64_t runs, std::uint64_t seed) {
    if (runs == 0) throw std::invalid_argument("sample: runs must be positive");
    if (s.empty()) throw std::invalid_argument("sample: zero state");

    std::vector<std::pair<OutcomeTuple, std::uint64_t>> cumulative;
    std::uint64_t acc = 0;
    for (const auto& [ket, amp] : s.amplitudes()) {
        acc += static_cast<std::uint64_t>(amp.norm());
        cumulative.emplace_back(ket, acc);
    }
    const std::uint64_t total = acc;
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = kMax - (kMax % total + 1) % total;  // accept draws <= limit

    SampleSummary summary;
    summary.total_runs = runs;
    summary.seed = seed;
    for (const auto& [ket, c] : cumulative) summary.counts[ket] = 0;

    std::mt19937_64 gen(seed);
    for (std::uint64_t n = 0; n < runs; ++n) {
        std::uint64_t draw;
        do draw = gen();
        while (draw > limit);
        const auto r = draw % total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r,
                                   [](std::uint64_t v, const auto& entry) { return v < entry.second; });
        ++summary.counts[it->first];
    }

    summary.max_abs_deviation = Rational(0);
    for (const auto& [ket, amp] : s.amplitudes()) {
        const Rational expected(static_cast<std::int64_t>(runs) * amp.norm(), s.norm_sq());
        Rational dev = Rational(static_cast<std::int64_t>(summary.counts[ket])) - expected;
        if (dev < 0) dev = -dev;
        summary.max_abs_deviation = std::max(summary.max_abs_deviation, dev);
    }
    return summary;
}

}  // namespace davn
