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

#include "davn/gauss.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace davn {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("GaussScalar: integer overflow in add");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("GaussScalar: integer overflow in sub");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("GaussScalar: integer overflow in mul");
    return r;
}

}  // namespace

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(Phase p) {
    static constexpr const char* kNames[] = {"1", "i", "-1", "-i"};
    return kNames[p.exponent()];
}

std::string exponent_string(Phase p) { return "i^" + std::to_string(p.exponent()); }

std::optional<Phase> parse_phase(std::string_view text) {
    if (text == "1" || text == "+1") return Phase::one();
    if (text == "i" || text == "+i") return Phase::i();
    if (text == "-1") return Phase::minus_one();
    if (text == "-i") return Phase::minus_i();
    if (text.starts_with("i^")) {
        text.remove_prefix(2);
        std::int64_t t = 0;
        const auto* end = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(text.data(), end, t);
        if (ec != std::errc{} || ptr != end || text.empty()) return std::nullopt;
        return Phase(t);
    }
    return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, Phase p) { return os << to_string(p); }

GaussScalar GaussScalar::from_phase(Phase p) {
    switch (p.exponent()) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

GaussScalar GaussScalar::conj() const { return {re, checked_sub(0, im)}; }

std::int64_t GaussScalar::norm() const { return checked_add(checked_mul(re, re), checked_mul(im, im)); }

GaussScalar GaussScalar::operator-() const { return {checked_sub(0, re), checked_sub(0, im)}; }

GaussScalar& GaussScalar::operator+=(const GaussScalar& b) {
    re = checked_add(re, b.re);
    im = checked_add(im, b.im);
    return *this;
}

GaussScalar& GaussScalar::operator-=(const GaussScalar& b) {
    re = checked_sub(re, b.re);
    im = checked_sub(im, b.im);
    return *this;
}

GaussScalar& GaussScalar::operator*=(const GaussScalar& b) {
    const auto r = checked_sub(checked_mul(re, b.re), checked_mul(im, b.im));
    const auto i = checked_add(checked_mul(re, b.im), checked_mul(im, b.re));
    re = r;
    im = i;
    return *this;
}

GaussScalar add(const GaussScalar& a, const GaussScalar& b) { return a + b; }
GaussScalar mul(const GaussScalar& a, const GaussScalar& b) { return a * b; }
GaussScalar neg(const GaussScalar& a) { return -a; }
GaussScalar conj(const GaussScalar& a) { return a.conj(); }

std::optional<Phase> as_phase(const GaussScalar& s) {
    if (s.re == 1 && s.im == 0) return Phase(0);
    if (s.re == 0 && s.im == 1) return Phase(1);
    if (s.re == -1 && s.im == 0) return Phase(2);
    if (s.re == 0 && s.im == -1) return Phase(3);
    return std::nullopt;
}

std::string to_string(const GaussScalar& s) {
    if (s.im == 0) return std::to_string(s.re);
    std::ostringstream os;
    if (s.re != 0) os << s.re << (s.im > 0 ? "+" : "-");
    else if (s.im < 0) os << "-";
    const auto mag = s.im < 0 ? -s.im : s.im;
    if (mag != 1) os << mag;
    os << "i";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussScalar& s) { return os << to_string(s); }

}  // namespace davn
