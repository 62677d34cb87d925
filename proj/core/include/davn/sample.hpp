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

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "davn/gauss.hpp"
#include "davn/state_vector.hpp"

namespace davn {

/// Identifier of the pinned sampling algorithm, recorded in every summary.
/// std::mt19937_64 has a standard-mandated output sequence; each draw maps a
/// 64-bit word to [0, norm_sq) by rejection of the biased tail, then picks the
/// outcome whose cumulative |amp|^2 window (ascending ket order) contains it.
inline constexpr const char* kSamplerAlgorithm = "mt19937_64/reject-mod/cumulative-v1";

struct SampleSummary {
    std::map<OutcomeTuple, std::uint64_t> counts;  // every supported outcome, zero counts included
    std::uint64_t total_runs = 0;
    std::uint64_t seed = 0;
    std::string algorithm = kSamplerAlgorithm;
    /// max over supported outcomes of |count - runs * p|, exact.
    Rational max_abs_deviation;
};

/// Draws `runs` joint Z outcomes from the exact distribution of s.
/// Throws std::invalid_argument when runs == 0 or s is zero.
SampleSummary sample_outcomes(const StateVector& s, std::uint64_t runs, std::uint64_t seed);

}  // namespace davn
