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

#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "davn/fixtures.hpp"
#include "davn/postselect.hpp"
#include "davn/states.hpp"

using davn::BasisKet;
using davn::EigenWord;
using davn::GaussScalar;
using davn::PairSelection;
using davn::Phase;
using davn::StateVector;

namespace fs = std::filesystem;

namespace {

// Oracle: X^u (x) X^v acting on a dense 4x4 coefficient grid.
std::optional<Phase> dense_x_eigenvalue(const StateVector& two_site, int u, int v) {
    GaussScalar grid[4][4], image[4][4];
    for (const auto& [ket, amp] : two_site.amplitudes()) grid[ket[0]][ket[1]] = amp;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) image[(a + u) % 4][(b + v) % 4] = grid[a][b];
    for (int t = 0; t < 4; ++t) {
        bool ok = true;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) ok = ok && image[a][b] == grid[a][b] * Phase(t);
        if (ok) return Phase(t);
    }
    return std::nullopt;
}

StateVector residual_of(std::initializer_list<std::pair<const char*, int>> terms) {
    StateVector s(2);
    for (const auto& [k, t] : terms) s.set(BasisKet::parse(k), GaussScalar::from_phase(Phase(t)));
    return s;
}

bool equal_up_to_phase(const StateVector& a, const StateVector& b) {
    for (int t = 0; t < 4; ++t)
        if (a.scaled(GaussScalar::from_phase(Phase(t))) == b) return true;
    return false;
}

fs::path fresh_dir(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("davn_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

void copy_fixtures(const fs::path& to, bool with_allowlist) {
    for (const auto& label : davn::reference_table_labels())
        fs::copy_file(fs::path(DAVN_FIXTURE_DIR) / davn::fixture_file_name(label), to / davn::fixture_file_name(label));
    if (with_allowlist) fs::copy_file(fs::path(DAVN_FIXTURE_DIR) / "allowlist.txt", to / "allowlist.txt");
}

}  // namespace

TEST_CASE("post-selection on Z1 = Z2 = 1") {
    const auto s = davn::build_psi_1234();
    const PairSelection p{0, 1, Phase::one(), Phase::one()};
    const auto r = davn::postselect_pair(s, p);
    CHECK(r.sites == std::array<std::size_t, 2>{2, 3});
    CHECK(equal_up_to_phase(r.state, residual_of({{"00", 0}, {"13", 1}, {"22", 2}, {"31", 3}})));
    const auto d = davn::derive_constraints(r);
    REQUIRE(d.basic);
    CHECK(*d.basic == EigenWord{1, 3, Phase::minus_i()});
    CHECK(*d.extended == EigenWord{2, 2, Phase::minus_one()});
    CHECK(davn::format_eigenword(*d.basic, r.sites) == "X3*X4^3 = -i");
    CHECK(p.to_string() == "Z1=1,Z2=1");
}

TEST_CASE("zero-probability selection is an error") {
    const auto s = davn::build_psi_1234();
    // The embedded seed state has no digit 3 anywhere.
    CHECK_THROWS_AS(davn::postselect_pair(davn::build_psi4_embedded(), {0, 1, Phase::minus_i(), Phase::one()}),
                    std::domain_error);
    CHECK_THROWS_AS(davn::table_for_outcome(s, BasisKet{1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("every derived row verifies against the dense oracle") {
    const auto s = davn::build_psi_1234();
    const std::set<std::set<std::pair<int, int>>> patterns = {{{1, 3}, {2, 2}, {3, 1}}, {{2, 2}}, {}};
    for (const auto& o : davn::z_support(s)) {
        const auto rows = davn::table_for_outcome(s, o);
        REQUIRE(rows.size() == 6);
        for (const auto& row : rows) {
            CHECK(row.pair.m_i == Phase(o[row.pair.site_i]));
            CHECK(row.pair.m_j == Phase(o[row.pair.site_j]));
            std::set<std::pair<int, int>> found;
            for (int u = 1; u < 4; ++u)
                for (int v = 1; v < 4; ++v)
                    if (dense_x_eigenvalue(row.residual.state, u, v)) found.insert({u, v});
            CHECK(patterns.count(found) == 1);
            CHECK(found.size() == row.all_eigenwords.size());
            for (const auto& w : row.all_eigenwords) CHECK(dense_x_eigenvalue(row.residual.state, w.u, w.v) == w.target);
            // The outcome's own component survives the selection.
            BasisKet own{o[row.residual.sites[0]], o[row.residual.sites[1]]};
            CHECK_FALSE(row.residual.state.amplitude(own).is_zero());
            if (found.empty()) {
                CHECK_FALSE(row.basic);
                CHECK_FALSE(row.extended);
                continue;
            }
            REQUIRE(row.basic);
            CHECK(row.basic->u == found.begin()->first);
            CHECK(row.basic->v == found.begin()->second);
            const bool both_odd = row.basic->u % 2 == 1 && row.basic->v % 2 == 1;
            const EigenWord expected_ext =
                both_odd ? EigenWord{2 * row.basic->u % 4, 2 * row.basic->v % 4, row.basic->target.pow(2)} : *row.basic;
            CHECK(*row.extended == expected_ext);
            CHECK(dense_x_eigenvalue(row.residual.state, row.extended->u, row.extended->v) == row.extended->target);
        }
    }
}

TEST_CASE("row order follows site pairs") {
    const auto rows = davn::table_for_outcome(davn::build_psi_1234(), BasisKet{3, 0, 2, 3});
    const std::vector<std::pair<std::size_t, std::size_t>> order = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (std::size_t j = 0; j < 6; ++j) {
        CHECK(rows[j].pair.site_i == order[j].first);
        CHECK(rows[j].pair.site_j == order[j].second);
    }
}

TEST_CASE("table labels") {
    CHECK(davn::reference_table_labels().size() == 10);
    CHECK(davn::canonical_table_label("III-A") == "III");
    CHECK(davn::canonical_table_label("VI-B") == "X");
    CHECK(davn::canonical_table_label("VII") == "VII");
    CHECK_FALSE(davn::canonical_table_label("XI").has_value());
    CHECK_FALSE(davn::canonical_table_label("III-C").has_value());
    CHECK(davn::table_family("IX") == "VI-A");
    std::set<BasisKet> all;
    for (const auto& label : davn::reference_table_labels())
        for (const auto& g : davn::reference_table_groups(label)) all.insert(g);
    CHECK(all.size() == 56);
    const auto support = davn::z_support(davn::build_psi_1234());
    CHECK(std::set<BasisKet>(support.begin(), support.end()) == all);
}

TEST_CASE("fixture line round trip") {
    const std::string line =
        "table=I | pair=Z1=i^0,Z2=i^0 | residual=00:0;13:1;22:2;31:3 | basic=1,3:i^3 | extended=2,2:i^2 | group=0000";
    const auto row = davn::parse_fixture_line(line);
    CHECK(row.table == "I");
    CHECK(row.pair == PairSelection{0, 1, Phase::one(), Phase::one()});
    CHECK(row.residual.size() == 4);
    CHECK(row.basic == EigenWord{1, 3, Phase::minus_i()});
    CHECK(row.group == BasisKet{0, 0, 0, 0});
    CHECK(davn::format_fixture_row(row) == line);
    CHECK(davn::parse_fixture_line(davn::format_fixture_row(row)).extended == row.extended);

    const auto none = davn::parse_fixture_line("table=II | pair=Z3=-1,Z4=1 | residual=00:0 | basic=none | extended=none");
    CHECK_FALSE(none.basic);
    CHECK_FALSE(none.group);
}

TEST_CASE("malformed fixture lines") {
    const std::string good = "table=I | pair=Z1=i^0,Z2=i^0 | residual=00:0 | basic=none | extended=none";
    CHECK_NOTHROW(davn::parse_fixture_line(good));
    for (const std::string bad : {
             "pair=Z1=i^0,Z2=i^0 | residual=00:0 | basic=none | extended=none",
             "table=XI | pair=Z1=i^0,Z2=i^0 | residual=00:0 | basic=none | extended=none",
             "table=I | pair=Z1=i^0 | residual=00:0 | basic=none | extended=none",
             "table=I | pair=Z1=i^0,Z1=i^0 | residual=00:0 | basic=none | extended=none",
             "table=I | pair=Z1=2,Z2=i^0 | residual=00:0 | basic=none | extended=none",
             "table=I | pair=Z1=i^0,Z2=i^0 | residual=0:0 | basic=none | extended=none",
             "table=I | pair=Z1=i^0,Z2=i^0 | residual=00:0 | basic=4,1:i^0 | extended=none",
             "table=I | pair=Z1=i^0,Z2=i^0 | residual=00:0 | basic=1:i^0 | extended=none",
             "table=I | pair=Z1=i^0,Z2=i^0 | residual=00:0 | basic=none | extended=none | color=red",
             "table=I | pair=Z1=i^0,Z2=i^0 | residual=00:0 | basic=none",
             "table=I | pair=Z1=i^0,Z2=i^0 | residual=00:0 | basic=none | extended=none | group=01",
             "garbage",
         })
        CHECK_THROWS_AS(davn::parse_fixture_line(bad), davn::FixtureError);
}

TEST_CASE("flipped target is named as an eigenvalue difference") {
    const auto s = davn::build_psi_1234();
    auto row = davn::parse_fixture_line(
        "table=I | pair=Z1=i^0,Z2=i^0 | residual=00:0;13:1;22:2;31:3 | basic=1,3:i^3 | extended=2,2:i^2 | group=0000");
    CHECK(davn::verify_fixture_row(s, row).status == davn::RowVerdict::Status::match);
    row.basic->target = Phase::i();
    const auto v = davn::verify_fixture_row(s, row);
    CHECK(v.status == davn::RowVerdict::Status::mismatch);
    CHECK(v.reasons == std::set<std::string>{"eigenvalue-differs"});

    auto wrong_residual = davn::parse_fixture_line(
        "table=I | pair=Z1=i^0,Z2=i^0 | residual=00:0;13:3;22:2;31:1 | basic=1,3:i^3 | extended=2,2:i^2 | group=0000");
    CHECK(davn::verify_fixture_row(s, wrong_residual).reasons.count("residual-differs") == 1);

    // A residual matching only up to a global phase still matches.
    auto rotated = davn::parse_fixture_line(
        "table=I | pair=Z1=i^0,Z2=i^0 | residual=00:1;13:2;22:3;31:0 | basic=1,3:i^3 | extended=2,2:i^2 | group=0000");
    CHECK(davn::verify_fixture_row(s, rotated).status == davn::RowVerdict::Status::match);

    auto empty = row;
    empty.pair = {0, 1, Phase::minus_i(), Phase::one()};
    CHECK(davn::verify_fixture_row(davn::build_psi4_embedded(), empty).reasons.count("selection-empty") == 1);
}

TEST_CASE("allowlist excuses only the exact reason set") {
    const auto s = davn::build_psi_1234();
    auto row = davn::parse_fixture_line(
        "table=I | pair=Z1=i^0,Z2=i^0 | residual=00:0;13:1;22:2;31:3 | basic=1,3:i^1 | extended=2,2:i^2 | group=0000");
    const auto exact = davn::parse_allowlist(
        "table=I | group=0000 | pair=Z1=1,Z2=1 | reasons=eigenvalue-differs | tag=t1 | note=test\n");
    const auto wider = davn::parse_allowlist(
        "table=I | group=0000 | pair=Z1=1,Z2=1 | reasons=eigenvalue-differs,residual-differs | tag=t1 | note=test\n");
    const auto other_group = davn::parse_allowlist(
        "table=I | group=2222 | pair=Z1=1,Z2=1 | reasons=eigenvalue-differs | tag=t1 | note=test\n");
    CHECK(davn::verify_fixture_row(s, row, &exact).status == davn::RowVerdict::Status::known_discrepancy);
    CHECK(davn::verify_fixture_row(s, row, &exact).tag == "t1");
    CHECK(davn::verify_fixture_row(s, row, &wider).status == davn::RowVerdict::Status::mismatch);
    CHECK(davn::verify_fixture_row(s, row, &other_group).status == davn::RowVerdict::Status::mismatch);
    CHECK_THROWS_AS(davn::parse_allowlist("table=I | pair=Z1=1,Z2=1 | tag=x\n"), davn::FixtureError);
}

TEST_CASE("shipped fixtures diff cleanly") {
    const auto report = davn::run_fixture_diff(davn::build_psi_1234(), DAVN_FIXTURE_DIR);
    CHECK(report.entries.size() == 336);
    CHECK(report.passed());
    CHECK(report.mismatched == 0);
    CHECK(report.known == 6);
    CHECK(report.matched == 330);
    CHECK(report.unused_allowlist.empty());
}

TEST_CASE("fixture directory errors") {
    const auto s = davn::build_psi_1234();
    CHECK_THROWS_AS(davn::run_fixture_diff(s, fresh_dir("empty")), davn::FixtureError);
    CHECK_THROWS_AS(davn::run_fixture_diff(s, fs::temp_directory_path() / "davn_test_missing_dir"), davn::FixtureError);

    const auto dir = fresh_dir("garbled");
    copy_fixtures(dir, true);
    std::ofstream(dir / "table_IV.txt", std::ios::app) << "table=IV | nonsense\n";
    CHECK_THROWS_AS(davn::run_fixture_diff(s, dir), davn::FixtureError);
}

TEST_CASE("without the allowlist the known rows surface as mismatches") {
    const auto dir = fresh_dir("no_allowlist");
    copy_fixtures(dir, false);
    const auto report = davn::run_fixture_diff(davn::build_psi_1234(), dir);
    CHECK_FALSE(report.passed());
    CHECK(report.mismatched == 6);
    std::set<std::string> tables;
    for (const auto& e : report.entries)
        if (e.verdict.status == davn::RowVerdict::Status::mismatch) tables.insert(e.row.table);
    CHECK(tables == std::set<std::string>{"II", "V"});
}
