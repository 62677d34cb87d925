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

#include "davn/pauli.hpp"

#include <charconv>
#include <stdexcept>

namespace davn {
namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": site-count mismatch");
}

int parse_int(std::string_view s, std::string_view token) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("PauliWord: bad factor '" + std::string(token) + "'");
    return v;
}

}  // namespace

PauliWord::PauliWord(std::size_t n_sites) : sites_(n_sites) {
    if (n_sites == 0) throw std::invalid_argument("PauliWord: need at least one site");
}

PauliWord::PauliWord(Phase phase, std::vector<SitePower> sites) : phase_(phase), sites_(std::move(sites)) {
    if (sites_.empty()) throw std::invalid_argument("PauliWord: need at least one site");
    for (auto& s : sites_) {
        s.x = mod4(s.x);
        s.z = mod4(s.z);
    }
}

PauliWord PauliWord::x_on(std::size_t n_sites, std::size_t site, int power) {
    std::vector<SitePower> s(n_sites);
    s.at(site).x = power;
    return PauliWord(Phase::one(), std::move(s));
}

PauliWord PauliWord::z_on(std::size_t n_sites, std::size_t site, int power) {
    std::vector<SitePower> s(n_sites);
    s.at(site).z = power;
    return PauliWord(Phase::one(), std::move(s));
}

PauliWord PauliWord::z_all(std::size_t n_sites, int power) {
    std::vector<SitePower> s(n_sites, SitePower{0, power});
    return PauliWord(Phase::one(), std::move(s));
}

PauliWord PauliWord::x_pair(std::size_t n_sites, std::size_t k, int u, std::size_t l, int v) {
    if (k == l) throw std::invalid_argument("PauliWord::x_pair: sites must differ");
    std::vector<SitePower> s(n_sites);
    s.at(k).x = u;
    s.at(l).x = v;
    return PauliWord(Phase::one(), std::move(s));
}

bool PauliWord::is_identity() const {
    if (phase_ != Phase::one()) return false;
    for (auto s : sites_)
        if (s.x != 0 || s.z != 0) return false;
    return true;
}

std::string PauliWord::to_string() const {
    std::string out;
    auto append = [&](const std::string& factor) {
        if (!out.empty()) out += '*';
        out += factor;
    };
    if (phase_ != Phase::one()) append(exponent_string(phase_));
    for (std::size_t j = 0; j < sites_.size(); ++j) {
        const auto idx = std::to_string(j + 1);
        if (sites_[j].x) append("X" + idx + (sites_[j].x > 1 ? "^" + std::to_string(sites_[j].x) : ""));
        if (sites_[j].z) append("Z" + idx + (sites_[j].z > 1 ? "^" + std::to_string(sites_[j].z) : ""));
    }
    return out.empty() ? "I" : out;
}

PauliWord PauliWord::parse(std::string_view text, std::size_t n_sites) {
    PauliWord result(n_sites);
    if (text.empty()) throw std::invalid_argument("PauliWord: empty text");
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto star = text.find('*', pos);
        if (star == std::string_view::npos) star = text.size();
        const auto token = text.substr(pos, star - pos);
        pos = star + 1;
        if (token.empty()) throw std::invalid_argument("PauliWord: empty factor in '" + std::string(text) + "'");
        if (token == "I") continue;
        if (token == "i") {
            result = PauliWord(result.phase_ * Phase::i(), result.sites_);
            continue;
        }
        if (token.starts_with("i^")) {
            auto p = parse_phase(token);
            if (!p) throw std::invalid_argument("PauliWord: bad phase '" + std::string(token) + "'");
            result = PauliWord(result.phase_ * *p, result.sites_);
            continue;
        }
        const char kind = token.front();
        if (kind != 'X' && kind != 'Z') throw std::invalid_argument("PauliWord: bad factor '" + std::string(token) + "'");
        auto body = token.substr(1);
        int power = 1;
        if (auto caret = body.find('^'); caret != std::string_view::npos) {
            power = parse_int(body.substr(caret + 1), token);
            body = body.substr(0, caret);
        }
        const int site = parse_int(body, token);
        if (site < 1 || static_cast<std::size_t>(site) > n_sites)
            throw std::invalid_argument("PauliWord: site out of range in '" + std::string(token) + "'");
        const auto factor = kind == 'X' ? x_on(n_sites, site - 1, power) : z_on(n_sites, site - 1, power);
        result = result * factor;
    }
    return result;
}

KetImage apply_word(const PauliWord& w, const BasisKet& k) {
    require_same_size(w.size(), k.size(), "apply_word");
    Phase phase = w.phase();
    BasisKet out = k;
    for (std::size_t j = 0; j < k.size(); ++j) {
        const auto& s = w.site(j);
        phase *= Phase(static_cast<std::int64_t>(s.z) * k[j]);
        out.set(j, mod4(k[j] + s.x));
    }
    return {phase, std::move(out)};
}

PauliWord mul_words(const PauliWord& lhs, const PauliWord& rhs) {
    require_same_size(lhs.size(), rhs.size(), "mul_words");
    Phase phase = lhs.phase() * rhs.phase();
    std::vector<SitePower> sites(lhs.size());
    for (std::size_t j = 0; j < lhs.size(); ++j) {
        const auto& a = lhs.site(j);
        const auto& b = rhs.site(j);
        // X^a1 Z^b1 X^a2 Z^b2 = i^{b1 a2} X^{a1+a2} Z^{b1+b2}
        phase *= Phase(static_cast<std::int64_t>(a.z) * b.x);
        sites[j] = {a.x + b.x, a.z + b.z};
    }
    return PauliWord(phase, std::move(sites));
}

StateVector apply_to_state(const PauliWord& w, const StateVector& s) {
    require_same_size(w.size(), s.n_sites(), "apply_to_state");
    StateVector out(s.n_sites(), s.levels());
    for (const auto& [ket, amp] : s.amplitudes()) {
        auto img = apply_word(w, ket);
        for (auto d : img.ket.digits())
            if (d >= s.levels()) throw std::domain_error("apply_to_state: word maps outside the local dimension");
        out.add(img.ket, amp * img.phase);
    }
    return out;
}

std::optional<Phase> eigenvalue_of(const PauliWord& w, const StateVector& s) {
    if (s.empty()) throw std::invalid_argument("eigenvalue_of: zero state");
    require_same_size(w.size(), s.n_sites(), "eigenvalue_of");
    StateVector image(s.n_sites(), kQuditLevels);
    for (const auto& [ket, amp] : s.amplitudes()) {
        auto img = apply_word(w, ket);
        image.add(img.ket, amp * img.phase);
    }
    if (image.size() != s.size()) return std::nullopt;
    const auto& [ket0, amp0] = *s.amplitudes().begin();
    for (int t = 0; t < 4; ++t) {
        if (image.amplitude(ket0) != amp0 * Phase(t)) continue;
        bool all = true;
        for (const auto& [ket, amp] : s.amplitudes()) {
            if (image.amplitude(ket) != amp * Phase(t)) {
                all = false;
                break;
            }
        }
        if (all) return Phase(t);
        return std::nullopt;
    }
    return std::nullopt;
}

StateVector x_eigenstate(int m) {
    StateVector s(1);
    for (int k = 0; k < kQuditLevels; ++k)
        s.set(BasisKet{k}, GaussScalar::from_phase(Phase(static_cast<std::int64_t>(m) * k)));
    return s;
}

}  // namespace davn
