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

// Golden-table fixtures and the row-by-row diff against derived constraints.
//
// Fixture line format (one row per line, '#' starts a comment):
//
//   table=<I..X> | pair=Z<i>=<i^t>,Z<j>=<i^t> | residual=<ket>:<t>;... |
//   basic=<u>,<v>:<i^t>|none | extended=<u>,<v>:<i^t>|none [| group=<k1k2k3k4>]
//
// Residual amplitudes are i^t with the normalization dropped. The optional
// group field names the four-site outcome the row's block belongs to.

#include <filesystem>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "davn/postselect.hpp"

namespace davn {

class FixtureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct FixtureRow {
    std::string table;  // canonical label
    PairSelection pair;
    std::vector<std::pair<BasisKet, Phase>> residual;
    std::optional<EigenWord> basic;
    std::optional<EigenWord> extended;
    std::optional<OutcomeTuple> group;
    std::string source;  // "file:line" when loaded from disk
};

FixtureRow parse_fixture_line(std::string_view line);
std::string format_fixture_row(const FixtureRow& row);
/// Rows of one file; comments and blank lines skipped.
std::vector<FixtureRow> load_fixture_file(const std::filesystem::path& path);

/// Known discrepancies between the reference tables and the derivation.
/// An entry matches a row with the same table, group and pair, and only
/// excuses exactly the listed reasons.
struct AllowlistEntry {
    std::string table;
    std::optional<OutcomeTuple> group;
    PairSelection pair;
    std::set<std::string> reasons;
    std::string tag;
    std::string note;
};

using Allowlist = std::vector<AllowlistEntry>;

Allowlist parse_allowlist(std::string_view text);
Allowlist load_allowlist(const std::filesystem::path& path);

struct RowVerdict {
    enum class Status { match, known_discrepancy, mismatch };
    Status status = Status::match;
    std::set<std::string> reasons;  // machine-readable, e.g. "residual-differs"
    std::string tag;                // allowlist tag for known discrepancies
};

std::string to_string(RowVerdict::Status s);

/// Compares a fixture row with the row derived for the same pair selection.
/// Residuals match up to a global fourth-root phase; the fixture's basic word
/// must be one of the derived eigenwords and its extended word must equal the
/// derived extended word.
RowVerdict verify_reference_row(const FixtureRow& expected, const ConstraintRow& derived,
                            const Allowlist* allowlist = nullptr);

/// Derives the row from `s` and verifies it; an empty selection yields a
/// mismatch with reason "selection-empty".
RowVerdict verify_fixture_row(const StateVector& s, const FixtureRow& expected, const Allowlist* allowlist = nullptr);

struct FixtureDiffEntry {
    FixtureRow row;
    RowVerdict verdict;
};

struct FixtureDiffReport {
    std::vector<FixtureDiffEntry> entries;
    std::size_t matched = 0;
    std::size_t known = 0;
    std::size_t mismatched = 0;
    std::vector<AllowlistEntry> unused_allowlist;
    bool passed() const { return mismatched == 0; }
};

/// Expected files: table_I.txt .. table_X.txt, plus an optional allowlist.txt.
std::filesystem::path fixture_file_name(const std::string& canonical_label);

/// Runs every fixture file in `dir` against `s`. Throws FixtureError when the
/// directory, a table file, or a line is missing or malformed.
FixtureDiffReport run_fixture_diff(const StateVector& s, const std::filesystem::path& dir);

}  // namespace davn
