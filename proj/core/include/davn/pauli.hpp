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

// Generalized Pauli operators for d = 4:
//   Z|k> = i^k |k>,   X|k> = |k+1 mod 4>,   hence Z X = i X Z.
// A PauliWord is i^t * prod_j X_j^{a_j} Z_j^{b_j}, stored normal-ordered
// (X to the left of Z on every site) with all exponents reduced mod 4.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "davn/gauss.hpp"
#include "davn/state_vector.hpp"

namespace davn {

struct SitePower {
    int x = 0;
    int z = 0;
    friend constexpr bool operator==(SitePower, SitePower) = default;
};

class PauliWord {
  public:
    /// Identity word on `n_sites` sites.
    explicit PauliWord(std::size_t n_sites);
    PauliWord(Phase phase, std::vector<SitePower> sites);

    static PauliWord x_on(std::size_t n_sites, std::size_t site, int power = 1);
    static PauliWord z_on(std::size_t n_sites, std::size_t site, int power = 1);
    /// Z_1^p Z_2^p ... Z_n^p.
    static PauliWord z_all(std::size_t n_sites, int power = 1);
    /// X_k^u X_l^v on an n-site register.
    static PauliWord x_pair(std::size_t n_sites, std::size_t k, int u, std::size_t l, int v);

    /// Parses text such as "X3*X4^3", "Z1*Z2*Z3*Z4" or "i^2*X1^2*Z1".
    /// Factors are multiplied left to right as operators, so "Z1*X1"
    /// normal-orders to "i^1*X1*Z1". Sites are 1-based.
    static PauliWord parse(std::string_view text, std::size_t n_sites);

    std::size_t size() const { return sites_.size(); }
    Phase phase() const { return phase_; }
    const SitePower& site(std::size_t j) const { return sites_.at(j); }
    const std::vector<SitePower>& sites() const { return sites_; }
    bool is_identity() const;

    /// Canonical text form; parse(to_string()) reproduces the word.
    std::string to_string() const;

    friend bool operator==(const PauliWord&, const PauliWord&) = default;

  private:
    Phase phase_;
    std::vector<SitePower> sites_;
};

struct KetImage {
    Phase phase;
    BasisKet ket;
};

/// w|k>: per site X^a Z^b |k> = i^{b k} |k + a>.
KetImage apply_word(const PauliWord& w, const BasisKet& k);

/// Operator product lhs * rhs (rhs acts first).
PauliWord mul_words(const PauliWord& lhs, const PauliWord& rhs);
inline PauliWord operator*(const PauliWord& lhs, const PauliWord& rhs) { return mul_words(lhs, rhs); }

/// Linear extension of apply_word. Throws if the state has fewer levels than
/// the image digits require (X words on qubit-level states).
StateVector apply_to_state(const PauliWord& w, const StateVector& s);

/// Returns c with w s = i^c s exactly, or empty when s is not an eigenvector
/// of w with a fourth-root eigenvalue. Throws on a zero state.
std::optional<Phase> eigenvalue_of(const PauliWord& w, const StateVector& s);

/// Single-site vector sum_k i^{m k} |k>. Its X-eigenvalue is i^{-m}.
StateVector x_eigenstate(int m);

}  // namespace davn
