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

#include "davn/states.hpp"

#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace davn {
namespace {

struct Component {
    std::string_view ket;
    int phase;  // amplitude i^phase
};

// Components of |Psi>_1234 in their published order.
constexpr std::array<Component, 56> kPsi1234 = {{
    {"0000", 0}, {"2222", 0}, {"0022", 2}, {"0233", 1},
    {"2033", 3}, {"0211", 1}, {"2011", 3}, {"1300", 1},
    {"3100", 3}, {"1322", 3}, {"3122", 1}, {"2002", 2},
    {"3023", 1}, {"3203", 3}, {"1021", 1}, {"1201", 3},
    {"0130", 1}, {"0310", 3}, {"2132", 3}, {"2312", 1},
    {"2200", 2}, {"3302", 1}, {"3320", 3}, {"1102", 1},
    {"1120", 3}, {"0013", 1}, {"0031", 3}, {"2213", 3},
    {"2231", 1}, {"0220", 2}, {"2330", 1}, {"0332", 3},
    {"2110", 1}, {"0112", 3}, {"3001", 1}, {"1003", 3},
    {"3221", 3}, {"1223", 1}, {"0202", 2}, {"0323", 1},
    {"2303", 3}, {"0121", 1}, {"2101", 3}, {"1030", 1},
    {"3010", 3}, {"1232", 3}, {"3212", 1}, {"2020", 2},
    {"3032", 1}, {"3230", 3}, {"1012", 1}, {"1210", 3},
    {"0103", 1}, {"0301", 3}, {"2123", 3}, {"2321", 1},
}};

constexpr std::int64_t table_checksum() {
    std::int64_t cs = 0;
    for (const auto& c : kPsi1234) {
        std::int64_t v = 0;
        for (char d : c.ket) v = v * 4 + (d - '0');
        cs = (cs * 131 + v * 4 + c.phase) % 1000000007;
    }
    return cs;
}

static_assert(table_checksum() == 204147275, "|Psi>_1234 component table was altered");

// The six weight-two qubit kets of |S(2,2)>.
constexpr std::array<std::string_view, 6> kS22 = {"0011", "0101", "0110", "1001", "1010", "1100"};

}  // namespace

StateVector build_psi_1234() {
    StateVector s(4);
    for (const auto& c : kPsi1234) {
        auto ket = BasisKet::parse(c.ket);
        if (!s.amplitude(ket).is_zero()) throw std::logic_error("build_psi_1234: duplicate component");
        s.set(ket, GaussScalar::from_phase(Phase(c.phase)));
    }
    return s;
}

StateVector build_psi4_qubit() {
    StateVector s(4, 2);
    s.set(BasisKet{0, 0, 0, 0}, 1);
    for (auto k : kS22) s.set(BasisKet::parse(k), -1);
    return s;
}

StateVector build_psi4_embedded() { return embed_qubit_state(build_psi4_qubit(), kQuditLevels / 2 - 1); }

StateVector build_qudit_bell_pair() {
    StateVector s(2);
    for (int k = 0; k < kQuditLevels; ++k) s.set(BasisKet{k, k}, 1);
    return s;
}

StateVector build_product_state(const BasisKet& ket) {
    StateVector s(ket.size());
    s.set(ket, 1);
    return s;
}

StateVector embed_qubit_state(const StateVector& s, int target_digit) {
    if (s.levels() != 2) throw std::invalid_argument("embed_qubit_state: input must be a two-level state");
    if (target_digit <= 0 || target_digit >= kQuditLevels)
        throw std::invalid_argument("embed_qubit_state: target digit must be in [1, 3]");
    StateVector out(s.n_sites());
    for (const auto& [ket, amp] : s.amplitudes()) {
        BasisKet mapped = ket;
        for (std::size_t j = 0; j < ket.size(); ++j) mapped.set(j, ket[j] == 0 ? 0 : target_digit);
        out.set(mapped, amp);
    }
    return out;
}

Phase commutation_phase_audit(int d) {
    if (d < 2 || d > 64 || d % 2 != 0) throw std::invalid_argument("commutation_phase_audit: d must be even in [2, 64]");
    const int h = d / 2;
    // Work with omega exponents mod d. X^h Z^h |k> = w^{hk} |k+h>, while
    // Z^h X^h |k> = w^{h(k+h)} |k+h>; the ratio must be k-independent.
    int ratio = -1;
    for (int k = 0; k < d; ++k) {
        const int xz = (h * k) % d;
        const int zx = (h * ((k + h) % d)) % d;
        const int r = ((xz - zx) % d + d) % d;
        if (ratio < 0) ratio = r;
        else if (ratio != r) throw std::logic_error("commutation_phase_audit: non-constant commutator");
    }
    if (ratio == 0) return Phase::one();
    if (2 * ratio == d) return Phase::minus_one();
    throw std::logic_error("commutation_phase_audit: commutator is not +-1");
}

DensityMatrix::DensityMatrix(int dim, std::int64_t denominator)
    : dim_(dim), denom_(denominator), entries_(static_cast<std::size_t>(dim * dim)) {
    if (dim <= 0 || denominator <= 0) throw std::invalid_argument("DensityMatrix: bad shape");
}

Rational DensityMatrix::diagonal(int r) const {
    const auto& v = numerator(r, r);
    if (v.im != 0) throw std::logic_error("DensityMatrix: non-real diagonal");
    return Rational(v.re, denom_);
}

Rational DensityMatrix::trace() const {
    Rational t(0);
    for (int r = 0; r < dim_; ++r) t += diagonal(r);
    return t;
}

bool DensityMatrix::is_hermitian() const {
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            if (numerator(r, c) != numerator(c, r).conj()) return false;
    return true;
}

bool DensityMatrix::is_diagonal() const {
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            if (r != c && !numerator(r, c).is_zero()) return false;
    return true;
}

bool DensityMatrix::is_maximally_mixed() const {
    if (!is_diagonal()) return false;
    for (int r = 0; r < dim_; ++r)
        if (diagonal(r) != Rational(1, dim_)) return false;
    return true;
}

std::string DensityMatrix::to_string() const {
    std::ostringstream os;
    if (is_diagonal()) {
        os << "diag(";
        for (int r = 0; r < dim_; ++r) os << (r ? ", " : "") << davn::to_string(diagonal(r));
        os << ")";
        return os.str();
    }
    os << "(1/" << denom_ << ") [";
    for (int r = 0; r < dim_; ++r) {
        os << (r ? "; " : "");
        for (int c = 0; c < dim_; ++c) os << (c ? " " : "") << davn::to_string(numerator(r, c));
    }
    os << "]";
    return os.str();
}

DensityMatrix reduced_density(const StateVector& s, std::size_t site) {
    if (site >= s.n_sites()) throw std::out_of_range("reduced_density: invalid site " + std::to_string(site));
    if (s.empty()) throw std::invalid_argument("reduced_density: zero state");
    // Group amplitudes by the digits of every other site.
    std::map<BasisKet, std::vector<std::pair<int, GaussScalar>>> by_rest;
    for (const auto& [ket, amp] : s.amplitudes()) {
        std::vector<std::uint8_t> rest;
        for (std::size_t j = 0; j < ket.size(); ++j)
            if (j != site) rest.push_back(static_cast<std::uint8_t>(ket[j]));
        by_rest[BasisKet(std::move(rest))].emplace_back(ket[site], amp);
    }
    DensityMatrix rho(s.levels(), s.norm_sq());
    for (const auto& [rest, entries] : by_rest)
        for (const auto& [a, amp_a] : entries)
            for (const auto& [b, amp_b] : entries) rho.numerator(a, b) += amp_a * amp_b.conj();
    return rho;
}

NonStabilizerVerdict nonstabilizer_test(const StateVector& s) {
    NonStabilizerVerdict v;
    for (std::size_t j = 0; j < s.n_sites(); ++j) {
        v.rho.push_back(reduced_density(s, j));
        v.maximally_mixed.push_back(v.rho.back().is_maximally_mixed());
        if (!v.maximally_mixed.back()) v.non_stabilizer = true;
    }
    return v;
}

PauliWord global_z_word(const StateVector& s) {
    // sigma_z on digits {0, 1} acts as (-1)^k = i^{2k}, i.e. Z^2.
    return PauliWord::z_all(s.n_sites(), kQuditLevels / s.levels());
}

StabilizerAudit check_global_stabilizer(const StateVector& s) {
    const auto word = global_z_word(s);
    StabilizerAudit audit;
    audit.stabilized = apply_to_state(word, s) == s;
    audit.observation_holds = true;
    for (const auto& [ket, amp] : s.amplitudes()) {
        const auto img = apply_word(word, ket);
        const bool fixed = img.ket == ket && img.phase == Phase::one();
        const bool zero_sum = ket.digit_sum() % s.levels() == 0;
        if (zero_sum) ++audit.kets_with_zero_digit_sum;
        if (fixed != zero_sum) audit.observation_holds = false;
        ++audit.kets_checked;
    }
    return audit;
}

Rational joint_z_probability(const StateVector& s, const OutcomeTuple& o) {
    if (s.empty()) throw std::invalid_argument("joint_z_probability: zero state");
    if (o.size() != s.n_sites()) throw std::invalid_argument("joint_z_probability: outcome has wrong number of sites");
    return Rational(s.amplitude(o).norm(), s.norm_sq());
}

std::vector<OutcomeTuple> z_support(const StateVector& s) {
    std::vector<OutcomeTuple> out;
    out.reserve(s.size());
    for (const auto& [ket, amp] : s.amplitudes()) out.push_back(ket);
    return out;
}

}  // namespace davn
