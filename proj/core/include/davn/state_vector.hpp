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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "davn/gauss.hpp"

namespace davn {

/// Local dimension of every qudit in this library.
inline constexpr int kQuditLevels = 4;

/// Computational-basis ket |k1 k2 ... kn>, each digit in [0, levels).
class BasisKet {
  public:
    BasisKet() = default;
    BasisKet(std::initializer_list<int> digits);
    explicit BasisKet(std::vector<std::uint8_t> digits);

    /// Parses a digit string such as "0233".
    static BasisKet parse(std::string_view digits);

    std::size_t size() const { return digits_.size(); }
    int operator[](std::size_t site) const { return digits_[site]; }
    void set(std::size_t site, int digit);
    const std::vector<std::uint8_t>& digits() const { return digits_; }
    int digit_sum() const;

    std::string to_string() const;

    friend auto operator<=>(const BasisKet&, const BasisKet&) = default;
    friend bool operator==(const BasisKet&, const BasisKet&) = default;

  private:
    std::vector<std::uint8_t> digits_;
};

/// A Z-measurement outcome on every site: digit k means the eigenvalue i^k.
using OutcomeTuple = BasisKet;

/// Unnormalized pure state with exact Gaussian-integer amplitudes. Zero
/// amplitudes are never stored and the squared norm is kept in sync.
class StateVector {
  public:
    using Amplitudes = std::map<BasisKet, GaussScalar>;

    explicit StateVector(std::size_t n_sites, int levels = kQuditLevels);

    std::size_t n_sites() const { return n_sites_; }
    int levels() const { return levels_; }
    /// Number of nonzero components.
    std::size_t size() const { return amps_.size(); }
    bool empty() const { return amps_.empty(); }
    std::int64_t norm_sq() const { return norm_sq_; }
    const Amplitudes& amplitudes() const { return amps_; }

    GaussScalar amplitude(const BasisKet& ket) const;
    /// Adds `value` to the amplitude of `ket`.
    void add(const BasisKet& ket, const GaussScalar& value);
    void set(const BasisKet& ket, const GaussScalar& value);

    StateVector scaled(const GaussScalar& factor) const;

    /// Recomputes the norm from scratch; used to audit the cached value.
    std::int64_t recompute_norm_sq() const;

    friend bool operator==(const StateVector& a, const StateVector& b) {
        return a.n_sites_ == b.n_sites_ && a.levels_ == b.levels_ && a.amps_ == b.amps_;
    }

  private:
    void check_ket(const BasisKet& ket) const;

    std::size_t n_sites_;
    int levels_;
    Amplitudes amps_;
    std::int64_t norm_sq_ = 0;
};

/// Line-oriented dump: a `norm_sq=<N>` header followed by one
/// `<digits> <t>` line per component (amplitude i^t), in ket order.
/// Only states whose amplitudes are all fourth roots of unity can be dumped.
std::string dump_state(const StateVector& s);

/// Inverse of dump_state. Validates the header against the recomputed norm.
StateVector parse_state_dump(std::string_view text, int levels = kQuditLevels);

}  // namespace davn
