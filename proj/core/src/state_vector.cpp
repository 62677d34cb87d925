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

#include "davn/state_vector.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace davn {

BasisKet::BasisKet(std::initializer_list<int> digits) {
    digits_.reserve(digits.size());
    for (int d : digits) {
        if (d < 0 || d >= kQuditLevels) throw std::invalid_argument("BasisKet: digit out of range");
        digits_.push_back(static_cast<std::uint8_t>(d));
    }
}

BasisKet::BasisKet(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
    for (auto d : digits_)
        if (d >= kQuditLevels) throw std::invalid_argument("BasisKet: digit out of range");
}

BasisKet BasisKet::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("BasisKet: empty digit string");
    std::vector<std::uint8_t> digits;
    for (char c : text) {
        if (c < '0' || c >= '0' + kQuditLevels)
            throw std::invalid_argument("BasisKet: bad digit in '" + std::string(text) + "'");
        digits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BasisKet(std::move(digits));
}

void BasisKet::set(std::size_t site, int digit) {
    if (digit < 0 || digit >= kQuditLevels) throw std::invalid_argument("BasisKet: digit out of range");
    digits_.at(site) = static_cast<std::uint8_t>(digit);
}

int BasisKet::digit_sum() const {
    int sum = 0;
    for (auto d : digits_) sum += d;
    return sum;
}

std::string BasisKet::to_string() const {
    std::string s;
    for (auto d : digits_) s.push_back(static_cast<char>('0' + d));
    return s;
}

StateVector::StateVector(std::size_t n_sites, int levels) : n_sites_(n_sites), levels_(levels) {
    if (n_sites == 0) throw std::invalid_argument("StateVector: need at least one site");
    if (levels < 2 || levels > kQuditLevels) throw std::invalid_argument("StateVector: levels must be in [2, 4]");
}

void StateVector::check_ket(const BasisKet& ket) const {
    if (ket.size() != n_sites_) throw std::invalid_argument("StateVector: ket has wrong number of sites");
    for (auto d : ket.digits())
        if (d >= levels_) throw std::invalid_argument("StateVector: ket digit exceeds local dimension");
}

GaussScalar StateVector::amplitude(const BasisKet& ket) const {
    auto it = amps_.find(ket);
    return it == amps_.end() ? GaussScalar{} : it->second;
}

void StateVector::add(const BasisKet& ket, const GaussScalar& value) { set(ket, amplitude(ket) + value); }

void StateVector::set(const BasisKet& ket, const GaussScalar& value) {
    check_ket(ket);
    auto it = amps_.find(ket);
    if (it != amps_.end()) {
        norm_sq_ -= it->second.norm();
        amps_.erase(it);
    }
    if (!value.is_zero()) {
        amps_.emplace(ket, value);
        norm_sq_ += value.norm();
    }
}

StateVector StateVector::scaled(const GaussScalar& factor) const {
    StateVector out(n_sites_, levels_);
    for (const auto& [ket, amp] : amps_) out.set(ket, amp * factor);
    return out;
}

std::int64_t StateVector::recompute_norm_sq() const {
    std::int64_t n = 0;
    for (const auto& [ket, amp] : amps_) n += amp.norm();
    return n;
}

std::string dump_state(const StateVector& s) {
    std::ostringstream os;
    os << "norm_sq=" << s.norm_sq() << '\n';
    for (const auto& [ket, amp] : s.amplitudes()) {
        auto p = as_phase(amp);
        if (!p) throw std::invalid_argument("dump_state: amplitude " + to_string(amp) + " of |" + ket.to_string() +
                                            "> is not a fourth root of unity");
        os << ket.to_string() << ' ' << p->exponent() << '\n';
    }
    return os.str();
}

StateVector parse_state_dump(std::string_view text, int levels) {
    std::istringstream is{std::string(text)};
    std::string line;
    if (!std::getline(is, line) || !line.starts_with("norm_sq="))
        throw std::invalid_argument("state dump: missing norm_sq header");
    std::int64_t declared = 0;
    {
        std::string_view v(line);
        v.remove_prefix(8);
        auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), declared);
        if (ec != std::errc{} || ptr != v.data() + v.size()) throw std::invalid_argument("state dump: bad norm_sq");
    }
    std::vector<std::pair<BasisKet, Phase>> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto sp = line.find(' ');
        if (sp == std::string::npos || sp + 2 != line.size() || line[sp + 1] < '0' || line[sp + 1] > '3')
            throw std::invalid_argument("state dump: malformed line '" + line + "'");
        rows.emplace_back(BasisKet::parse(std::string_view(line).substr(0, sp)), Phase(line[sp + 1] - '0'));
    }
    if (rows.empty()) throw std::invalid_argument("state dump: no components");
    StateVector s(rows.front().first.size(), levels);
    for (const auto& [ket, phase] : rows) {
        if (!s.amplitude(ket).is_zero()) throw std::invalid_argument("state dump: duplicate ket " + ket.to_string());
        s.set(ket, GaussScalar::from_phase(phase));
    }
    if (s.norm_sq() != declared) throw std::invalid_argument("state dump: norm_sq header does not match components");
    return s;
}

}  // namespace davn
