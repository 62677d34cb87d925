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

// Local-hidden-variable refutation. A hidden variable assigns X_j = i^{v_j}
// to every site and powers follow classically, so a constraint
// prod_j X_j^{e_j} = i^t holds iff sum_j e_j v_j = t (mod 4). There are only
// 4^4 = 256 assignments, and the exhaustive scan is the proof.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "davn/gauss.hpp"
#include "davn/postselect.hpp"
#include "davn/state_vector.hpp"

namespace davn {

inline constexpr std::size_t kLhvSites = 4;

struct Assignment {
    std::array<int, kLhvSites> values{};  // X_j(lambda) = i^{values[j]}
    std::string to_string() const;        // "(0,1,3,2)"
    friend bool operator==(const Assignment&, const Assignment&) = default;
};

class Constraint {
  public:
    /// Throws std::invalid_argument if every exponent is zero.
    Constraint(std::array<int, kLhvSites> exponents, Phase target);

    /// Lifts a two-site eigenword on residual sites (k, l).
    static Constraint from_eigenword(const EigenWord& w, std::array<std::size_t, 2> sites);

    const std::array<int, kLhvSites>& exponents() const { return exps_; }
    Phase target() const { return target_; }
    bool holds(const Assignment& a) const;

    /// Exponent-wise sum with targets multiplied: the product of both relations.
    Constraint product(const Constraint& other) const;

    /// "X3*X4^3 = -i"
    std::string to_string() const;
    /// "(0,0,1,3):i^3"
    std::string exponent_form() const;

    friend bool operator==(const Constraint&, const Constraint&) = default;

  private:
    std::array<int, kLhvSites> exps_;
    Phase target_;
};

/// First satisfying assignment in lexicographic order (site 1 most
/// significant), or empty when no assignment satisfies every constraint.
std::optional<Assignment> satisfiable(std::span<const Constraint> cs);

/// Smallest unsatisfiable subset, found by enumerating subsets by increasing
/// size in lexicographic index order. Throws std::invalid_argument when the
/// whole list is satisfiable.
std::vector<Constraint> minimal_unsat_core(std::span<const Constraint> cs);

/// Paradox family of an outcome of |Psi>_1234: "I", "II", "III-A", ...,
/// "VI-B". Throws std::invalid_argument for tuples outside that support.
std::string classify_type(const OutcomeTuple& o);

/// The numeral part of a type label ("III-A" -> "III").
std::string base_type(const std::string& label);

struct ParadoxReport {
    OutcomeTuple outcome;
    std::string type_label;
    Rational probability;
    std::vector<ConstraintRow> rows;
    std::vector<Constraint> constraints_basic;
    std::vector<Constraint> constraints_extended;
    /// basic constraints followed by extended ones not already present.
    std::vector<Constraint> constraint_set;
    bool satisfiable = true;
    std::optional<Assignment> witness;
    std::vector<Constraint> minimal_core;
    /// Whether the extended constraints on their own are already unsatisfiable.
    bool extended_only_unsat = false;
};

/// Builds the LHV problem for one outcome from table_for_outcome and decides
/// it. Throws std::invalid_argument for outcomes with probability 0.
ParadoxReport verify_paradox(const StateVector& s, const OutcomeTuple& o);

struct DavnReport {
    std::vector<ParadoxReport> reports;  // ascending outcome order
    std::size_t support_size = 0;
    Rational probability_sum;
    std::vector<std::pair<std::string, std::size_t>> type_counts;  // I..VI
    std::vector<OutcomeTuple> failing_outcomes;
    bool davn = false;
    std::string verdict() const { return davn ? "DAVN" : "NOT-DAVN"; }
};

/// Runs verify_paradox on every supported outcome. `workers` caps the number
/// of threads (0 = hardware default); output order never depends on it.
DavnReport verify_davn(const StateVector& s, unsigned workers = 0);

}  // namespace davn
