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

// Human- and machine-readable rendering of every report the engine produces.
// JSON follows the versioned schema in docs/report-schema.md; keys are
// emitted in a fixed order so output is byte-stable across runs.

#include <optional>
#include <string>
#include <vector>

#include "davn/fixtures.hpp"
#include "davn/lhv.hpp"
#include "davn/sample.hpp"
#include "davn/states.hpp"

namespace davn {

inline constexpr const char* kReportSchema = "davn-report/1";

enum class Format { text, markdown, json };

std::optional<Format> parse_format(const std::string& name);  // text | markdown | md | json

enum class StateName { psi1234, psi4_qubit, psi4_embedded };

std::optional<StateName> parse_state_name(const std::string& name);  // psi1234 | psi4-qubit | psi4-embedded
std::string to_string(StateName name);
StateVector build_named_state(StateName name);

/// "|00> + i|13> - |22> - i|31>"
std::string format_state(const StateVector& s);

struct StateCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct StateVerification {
    StateName state{};
    std::int64_t norm_sq = 0;
    std::size_t components = 0;
    std::vector<StateCheck> checks;
    std::vector<std::string> notes;
    NonStabilizerVerdict marginals;
    bool passed() const;
};

/// Normalization, stabilizer identity, digit-sum audit and marginal test for
/// one of the named states.
StateVerification verify_state(StateName name);

std::string render_state_verification(const StateVerification& v, Format f);
std::string render_table(const StateVector& s, const std::string& canonical_label, Format f);
std::string render_paradox(const ParadoxReport& r, Format f);
std::string render_davn(const DavnReport& d, const std::string& state_name, Format f);
std::string render_sample(const SampleSummary& s, const std::string& state_name, Format f);
std::string render_fixture_diff(const FixtureDiffReport& r, Format f);

}  // namespace davn
