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

// Exact arithmetic over the Gaussian integers Z[i] and the group of fourth
// roots of unity. Nothing in this library ever compares with a tolerance.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace davn {

/// Exact rational used for probabilities and density-matrix entries.
using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

constexpr int mod4(std::int64_t x) {
    const auto r = static_cast<int>(x % 4);
    return r < 0 ? r + 4 : r;
}

/// An element i^t of the cyclic group {1, i, -1, -i}.
class Phase {
  public:
    constexpr Phase() = default;
    constexpr explicit Phase(std::int64_t t) : t_(mod4(t)) {}

    static constexpr Phase one() { return Phase(0); }
    static constexpr Phase i() { return Phase(1); }
    static constexpr Phase minus_one() { return Phase(2); }
    static constexpr Phase minus_i() { return Phase(3); }

    constexpr int exponent() const { return t_; }
    constexpr Phase inverse() const { return Phase(-t_); }
    constexpr Phase pow(std::int64_t u) const { return Phase(static_cast<std::int64_t>(t_) * mod4(u)); }

    friend constexpr Phase operator*(Phase a, Phase b) { return Phase(a.t_ + b.t_); }
    constexpr Phase& operator*=(Phase b) { return *this = *this * b; }
    friend constexpr bool operator==(Phase, Phase) = default;
    friend constexpr auto operator<=>(Phase, Phase) = default;

  private:
    int t_ = 0;
};

/// Eigenvalue notation: "1", "i", "-1", "-i".
std::string to_string(Phase p);
/// Exponent notation: "i^0" .. "i^3".
std::string exponent_string(Phase p);
/// Accepts both notations above, plus a bare "i^t" with any integer t.
std::optional<Phase> parse_phase(std::string_view text);

std::ostream& operator<<(std::ostream& os, Phase p);

/// a + b i with 64-bit integer parts. Every operation checks for overflow and
/// throws std::overflow_error; amplitudes in this library stay tiny, so an
/// overflow always means a bug upstream.
struct GaussScalar {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GaussScalar() = default;
    constexpr GaussScalar(std::int64_t real, std::int64_t imag = 0) : re(real), im(imag) {}

    static GaussScalar from_phase(Phase p);

    bool is_zero() const { return re == 0 && im == 0; }
    GaussScalar conj() const;
    /// |z|^2 = re^2 + im^2.
    std::int64_t norm() const;

    GaussScalar operator-() const;
    GaussScalar& operator+=(const GaussScalar& b);
    GaussScalar& operator-=(const GaussScalar& b);
    GaussScalar& operator*=(const GaussScalar& b);

    friend GaussScalar operator+(GaussScalar a, const GaussScalar& b) { return a += b; }
    friend GaussScalar operator-(GaussScalar a, const GaussScalar& b) { return a -= b; }
    friend GaussScalar operator*(GaussScalar a, const GaussScalar& b) { return a *= b; }
    friend GaussScalar operator*(GaussScalar a, Phase p) { return a *= from_phase(p); }

    friend constexpr bool operator==(const GaussScalar&, const GaussScalar&) = default;
};

inline constexpr GaussScalar kImagUnit{0, 1};

GaussScalar add(const GaussScalar& a, const GaussScalar& b);
GaussScalar mul(const GaussScalar& a, const GaussScalar& b);
GaussScalar neg(const GaussScalar& a);
GaussScalar conj(const GaussScalar& a);

/// Returns t with s == i^t when s is one of {1, i, -1, -i}; empty otherwise.
std::optional<Phase> as_phase(const GaussScalar& s);

/// "0", "1", "-i", "2+3i", "1-i", ...
std::string to_string(const GaussScalar& s);
std::ostream& operator<<(std::ostream& os, const GaussScalar& s);

}  // namespace davn
