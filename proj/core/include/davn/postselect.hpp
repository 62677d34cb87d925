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

// Hardy-like conditions by post-selection: fix the Z outcomes of two sites,
// keep the residual two-site state, and find every X_k^u X_l^v
// (u, v in {1, 2, 3}) that has the residual as an eigenvector.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "davn/gauss.hpp"
#include "davn/pauli.hpp"
#include "davn/state_vector.hpp"

namespace davn {

/// Z_i = i^{m_i}, Z_j = i^{m_j} on two distinct sites (0-based).
struct PairSelection {
    std::size_t site_i = 0;
    std::size_t site_j = 1;
    Phase m_i;
    Phase m_j;

    /// "Z1=1,Z2=-i"
    std::string to_string() const;
    friend bool operator==(const PairSelection&, const PairSelection&) = default;
};

/// The unnormalized state left on the two other sites, listed ascending.
struct ResidualState {
    std::array<std::size_t, 2> sites{};
    StateVector state{2};
};

/// A two-site X word X_k^u X_l^v together with its forced value i^target.
struct EigenWord {
    int u = 0;
    int v = 0;
    Phase target;

    /// The extended (weaker) form: the square when both exponents are odd,
    /// otherwise the word itself (squaring an X^2 X^2 word gives identity).
    EigenWord extended() const;
    friend bool operator==(const EigenWord&, const EigenWord&) = default;
};

/// "X3*X4^3 = -i" for the residual sites k, l (0-based).
std::string format_eigenword(const EigenWord& w, std::array<std::size_t, 2> sites);

struct DerivedConstraints {
    std::optional<EigenWord> basic;
    std::optional<EigenWord> extended;
    std::vector<EigenWord> all_eigenwords;
};

struct ConstraintRow {
    PairSelection pair;
    ResidualState residual;
    std::optional<EigenWord> basic;
    std::optional<EigenWord> extended;
    std::vector<EigenWord> all_eigenwords;
};

/// Projects s onto the pair selection. Throws std::domain_error naming the
/// pair when no component of s is consistent with it.
ResidualState postselect_pair(const StateVector& s, const PairSelection& p);

/// Scans (u, v) in {1, 2, 3}^2 in row-major order. basic is the first
/// eigenword found, extended its weaker form.
DerivedConstraints derive_constraints(const ResidualState& r);

/// postselect_pair followed by derive_constraints.
ConstraintRow derive_row(const StateVector& s, const PairSelection& p);

/// Six rows, one per site pair in the order (1,2), (1,3), (1,4), (2,3), (2,4),
/// (3,4). Throws std::invalid_argument when o has zero probability.
std::vector<ConstraintRow> table_for_outcome(const StateVector& s, const OutcomeTuple& o);

// ---------------------------------------------------------------------------
// Reference table layout.

/// Canonical table labels "I" .. "X".
const std::vector<std::string>& reference_table_labels();

/// Accepts "I".."X" as well as family names such as "III-A" or "VI-B";
/// returns the canonical label or empty.
std::optional<std::string> canonical_table_label(const std::string& label);

/// "I", "II", "III-A", ..., "VI-B" for a canonical label.
std::string table_family(const std::string& canonical);

/// Outcome tuples covered by a table, in block order.
const std::vector<OutcomeTuple>& reference_table_groups(const std::string& canonical);

}  // namespace davn
