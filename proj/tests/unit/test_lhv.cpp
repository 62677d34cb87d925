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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "davn/lhv.hpp"
#include "davn/states.hpp"

using davn::Assignment;
using davn::BasisKet;
using davn::Constraint;
using davn::Phase;

namespace {

Constraint C(int a, int b, int c, int d, int t) { return Constraint({a, b, c, d}, Phase(t)); }

// Oracle: the hidden-variable value of a word is the product of i^{e_j v_j}
// computed as complex phases one factor at a time.
bool holds_by_phase_product(const Constraint& c, const Assignment& a) {
    Phase value = Phase::one();
    for (std::size_t j = 0; j < 4; ++j)
        for (int r = 0; r < c.exponents()[j]; ++r) value *= Phase(a.values[j]);
    return value == c.target();
}

bool oracle_satisfiable(const std::vector<Constraint>& cs) {
    for (int v1 = 0; v1 < 4; ++v1)
        for (int v2 = 0; v2 < 4; ++v2)
            for (int v3 = 0; v3 < 4; ++v3)
                for (int v4 = 0; v4 < 4; ++v4) {
                    const Assignment a{{v1, v2, v3, v4}};
                    bool all = true;
                    for (const auto& c : cs) all = all && holds_by_phase_product(c, a);
                    if (all) return true;
                }
    return false;
}

void check_minimal(const std::vector<Constraint>& core) {
    CHECK_FALSE(davn::satisfiable(core).has_value());
    for (std::size_t drop = 0; drop < core.size(); ++drop) {
        std::vector<Constraint> rest;
        for (std::size_t j = 0; j < core.size(); ++j)
            if (j != drop) rest.push_back(core[j]);
        CHECK(davn::satisfiable(rest).has_value());
    }
}

}  // namespace

TEST_CASE("constraint semantics") {
    const auto c = C(0, 0, 1, 3, 3);
    CHECK(c.to_string() == "X3*X4^3 = -i");
    CHECK(c.exponent_form() == "(0,0,1,3):i^3");
    CHECK(c.holds(Assignment{{0, 0, 3, 0}}));
    CHECK_FALSE(c.holds(Assignment{{0, 0, 1, 0}}));
    CHECK_THROWS_AS(C(0, 0, 0, 4, 1), std::invalid_argument);
    CHECK(C(5, 0, 0, 0, 1) == C(1, 0, 0, 0, 1));
    for (int code = 0; code < 256; ++code) {
        const Assignment a{{code >> 6 & 3, code >> 4 & 3, code >> 2 & 3, code & 3}};
        CHECK(c.holds(a) == holds_by_phase_product(c, a));
    }
}

TEST_CASE("product of constraints is implied by its factors") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> e(0, 3);
    for (int n = 0; n < 2000; ++n) {
        std::array<int, 4> xa{}, xb{};
        for (auto& x : xa) x = e(rng);
        for (auto& x : xb) x = e(rng);
        xa[n % 4] = 1;
        xb[(n + 1) % 4] = 1;
        const Constraint a(xa, Phase(e(rng))), b(xb, Phase(e(rng)));
        const Assignment v{{e(rng), e(rng), e(rng), e(rng)}};
        bool trivial = true;
        for (std::size_t j = 0; j < 4; ++j) trivial = trivial && (xa[j] + xb[j]) % 4 == 0;
        if (trivial) {
            CHECK_THROWS_AS(a.product(b), std::invalid_argument);
            continue;
        }
        const Constraint p = a.product(b);
        for (std::size_t j = 0; j < 4; ++j) CHECK(p.exponents()[j] == (xa[j] + xb[j]) % 4);
        if (a.holds(v) && b.holds(v)) CHECK(p.holds(v));
    }
}

TEST_CASE("satisfiability scan") {
    CHECK(davn::satisfiable({}) == Assignment{{0, 0, 0, 0}});
    const std::vector<Constraint> one = {C(1, 0, 0, 0, 2)};
    CHECK(davn::satisfiable(one) == Assignment{{2, 0, 0, 0}});
    const std::vector<Constraint> clash = {C(1, 0, 0, 0, 0), C(1, 0, 0, 0, 1)};
    CHECK_FALSE(davn::satisfiable(clash).has_value());
    CHECK(davn::minimal_unsat_core(clash).size() == 2);
    CHECK_THROWS_AS(davn::minimal_unsat_core(one), std::invalid_argument);
    // An even word can never equal an odd phase.
    const std::vector<Constraint> parity = {C(2, 2, 0, 0, 1)};
    CHECK(davn::minimal_unsat_core(parity).size() == 1);
}

TEST_CASE("every supported outcome is a paradox, with a sound minimal core") {
    const auto s = davn::build_psi_1234();
    for (const auto& o : davn::z_support(s)) {
        const auto r = davn::verify_paradox(s, o);
        CHECK_FALSE(r.satisfiable);
        CHECK_FALSE(oracle_satisfiable(r.constraint_set));
        CHECK(r.probability == davn::Rational(1, 56));
        check_minimal(r.minimal_core);
        for (const auto& c : r.minimal_core) {
            bool listed = false;
            for (const auto& x : r.constraint_set) listed = listed || x == c;
            CHECK(listed);
        }
        CHECK(r.extended_only_unsat == !oracle_satisfiable(r.constraints_extended));
    }
}

TEST_CASE("type I parity argument") {
    const auto s = davn::build_psi_1234();
    for (const auto* text : {"0000", "2222"}) {
        const auto r = davn::verify_paradox(s, BasisKet::parse(text));
        REQUIRE(r.constraints_basic.size() >= 3);
        const auto& a = r.constraints_basic[0];
        const auto& b = r.constraints_basic[1];
        const auto& c = r.constraints_basic[2];
        // X3X4^3, X2X4^3, X2X3^3: the product is X2^2 X4^2 (up to X^4 = 1)
        // with an odd target, while an even word only takes values +-1.
        const auto p = a.product(b).product(c);
        for (int x : p.exponents()) CHECK(x % 2 == 0);
        CHECK(p.target().exponent() % 2 == 1);
        const std::vector<Constraint> three = {a, b, c};
        check_minimal(three);
        CHECK(r.minimal_core == three);
    }
}

TEST_CASE("type census") {
    const auto s = davn::build_psi_1234();
    std::map<std::string, int> counts, sub;
    for (const auto& o : davn::z_support(s)) {
        const auto label = davn::classify_type(o);
        ++counts[davn::base_type(label)];
        ++sub[label];
    }
    CHECK(counts == std::map<std::string, int>{{"I", 2}, {"II", 6}, {"III", 12}, {"IV", 12}, {"V", 12}, {"VI", 12}});
    for (const auto* l : {"III-A", "III-B", "IV-A", "IV-B", "V-A", "V-B", "VI-A", "VI-B"}) CHECK(sub[l] == 6);
    CHECK(davn::classify_type(BasisKet::parse("0233")) == "III-A");
    CHECK(davn::classify_type(BasisKet::parse("1322")) == "VI-A");
    CHECK_THROWS_AS(davn::classify_type(BasisKet::parse("1111")), std::invalid_argument);
    CHECK_THROWS_AS(davn::classify_type(BasisKet::parse("0001")), std::invalid_argument);
    // Classification agrees with the table each outcome is listed under.
    for (const auto& label : davn::reference_table_labels())
        for (const auto& g : davn::reference_table_groups(label)) CHECK(davn::classify_type(g) == davn::table_family(label));
}

TEST_CASE("worker count does not change the report") {
    const auto s = davn::build_psi_1234();
    const auto one = davn::verify_davn(s, 1);
    const auto many = davn::verify_davn(s, 7);
    CHECK(one.davn);
    CHECK(one.verdict() == "DAVN");
    REQUIRE(one.reports.size() == many.reports.size());
    for (std::size_t j = 0; j < one.reports.size(); ++j) {
        CHECK(one.reports[j].outcome == many.reports[j].outcome);
        CHECK(one.reports[j].minimal_core == many.reports[j].minimal_core);
    }
    CHECK(one.probability_sum == davn::Rational(1));
    CHECK(one.failing_outcomes.empty());
}

TEST_CASE("the embedded qubit state is not a paradox family") {
    const auto d = davn::verify_davn(davn::build_psi4_embedded(), 2);
    CHECK(d.support_size == 7);
    CHECK_FALSE(d.davn);
}
