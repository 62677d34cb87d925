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
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "davn/report.hpp"
#include "davn/sample.hpp"
#include "davn/states.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "davn");
    std::ostringstream out, err;
    const int code = davn::cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("davn_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("verify-state") {
    auto r = run({"verify-state", "--state", "psi1234"});
    CHECK(r.code == 0);
    CHECK(r.out.find("rho_1 = diag(2/7, 3/14, 2/7, 3/14)") != std::string::npos);
    r = run({"verify-state", "--state", "psi4-qubit"});
    CHECK(r.code == 0);
    CHECK(r.out.find("norm_sq=7") != std::string::npos);
    CHECK(r.out.find("diag(4/7, 3/7)") != std::string::npos);
    r = run({"verify-state", "--state", "psi4-embedded"});
    CHECK(r.code == 0);
    CHECK(r.out.find("commutation audit") != std::string::npos);
    CHECK(run({"verify-state", "--state", "psi5"}).code == 2);
}

TEST_CASE("verify-state dump file") {
    const auto path = fresh_dir("dump") / "psi.txt";
    CHECK(run({"verify-state", "--dump", path.string()}).code == 0);
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(davn::parse_state_dump(ss.str()) == davn::build_psi_1234());
}

TEST_CASE("tables") {
    auto r = run({"tables", "--table", "I"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Z1=1,Z2=1") != std::string::npos);
    CHECK(r.out.find("X3*X4^3 = -i") != std::string::npos);
    CHECK(run({"tables", "--table", "XI"}).code == 2);
    CHECK(run({"tables"}).code == 2);

    const auto j = Json::parse(run({"tables", "--table", "III-A", "--format", "json"}).out);
    CHECK(j.begin().key() == "schema");
    CHECK(j["schema"] == davn::kReportSchema);
    CHECK(j["table"] == "III");
    std::size_t rows = 0;
    for (const auto& g : j["groups"]) rows += g["rows"].size();
    CHECK(rows == 36);

    // Markdown carries the same rows as JSON.
    const auto md = run({"tables", "--table", "III-A", "--format", "md"}).out;
    std::size_t md_rows = 0;
    for (std::size_t pos = 0; (pos = md.find("\n| Z", pos)) != std::string::npos; ++pos)
        md_rows += md.compare(pos + 4, 3, "_i,") != 0;
    CHECK(md_rows == 36);
    for (const auto& g : j["groups"])
        for (const auto& row : g["rows"]) {
            CHECK(md.find("| " + row["pair"].get<std::string>() + " |") != std::string::npos);
            if (!row["basic"].is_null()) {
                const std::string word = row["basic"]["word"].get<std::string>() + " = " +
                                         row["basic"]["eigenvalue"].get<std::string>();
                CHECK(md.find(word) != std::string::npos);
            }
        }
}

TEST_CASE("table with no eigenword shows a dash") {
    // Outcome 0233 has rows where only X^2 X^2 words or none survive.
    const auto text = davn::render_table(davn::build_psi_1234(), "III", davn::Format::text);
    CHECK(text.find("---") != std::string::npos);
}

TEST_CASE("paradox") {
    auto r = run({"paradox", "--outcome", "0,0,0,0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("unsatisfiable") != std::string::npos);
    CHECK(r.out.find("minimal core (3)") != std::string::npos);
    r = run({"paradox", "--outcome", "1,1,1,1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("outcome has probability 0") != std::string::npos);
    CHECK(run({"paradox"}).code == 2);
    CHECK(run({"paradox", "--outcome", "0,0,0"}).code == 2);
    CHECK(run({"paradox", "--outcome", "0,0,0,4"}).code == 2);
    CHECK(run({"paradox", "--outcome", "0,0,0,0,"}).code == 2);
    CHECK(run({"paradox", "--outcome", "0,0,0,0", "--state", "psi4-qubit"}).code == 2);

    const auto j = Json::parse(run({"paradox", "--outcome", "0,2,3,3", "--format", "json"}).out);
    CHECK(j["type"] == "III-A");
    CHECK(j["satisfiable"] == false);
    CHECK(j["probability"] == "1/56");
    CHECK(j["outcome"]["eigenvalues"] == Json::array({"1", "-1", "-i", "-i"}));
    for (const auto& c : j["constraint_set"]) {
        CHECK(c.contains("exponents"));
        CHECK(c.contains("eigenvalue"));
    }
}

TEST_CASE("davn") {
    const auto r = run({"davn", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["verdict"] == "DAVN");
    CHECK(j["unsatisfiable"] == 56);
    CHECK(j["type_counts"] == Json::parse(R"({"I":2,"II":6,"III":12,"IV":12,"V":12,"VI":12})"));
    CHECK(r.out == run({"davn", "--format", "json"}).out);
    CHECK(run({"davn", "--seed", "3"}).code == 2);
    CHECK(run({"davn", "--state", "psi4-embedded"}).code == 1);
}

TEST_CASE("davn writes to a file") {
    const auto path = fresh_dir("out") / "report.json";
    const auto r = run({"davn", "--format", "json", "-o", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    CHECK(Json::parse(f)["kind"] == "davn");
    CHECK(run({"davn", "-o", "/nonexistent/dir/report.json"}).code == 2);
}

TEST_CASE("sample") {
    const auto a = davn::sample_outcomes(davn::build_psi_1234(), 5000, 9);
    const auto b = davn::sample_outcomes(davn::build_psi_1234(), 5000, 9);
    CHECK(a.counts == b.counts);
    std::uint64_t total = 0;
    for (const auto& [o, n] : a.counts) total += n;
    CHECK(total == 5000);
    CHECK(a.counts.size() == 56);
    CHECK(a.algorithm == davn::kSamplerAlgorithm);

    const auto one = davn::sample_outcomes(davn::build_psi_1234(), 1, 5);
    std::uint64_t ones = 0, nonzero = 0;
    for (const auto& [o, n] : one.counts) {
        ones += n;
        nonzero += n != 0;
    }
    CHECK(ones == 1);
    CHECK(nonzero == 1);
    CHECK_THROWS(davn::sample_outcomes(davn::build_psi_1234(), 0, 1));

    auto r = run({"sample", "--runs", "100", "--seed", "42", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["seed"] == 42);
    CHECK(r.out == run({"sample", "--runs", "100", "--seed", "42", "--format", "json"}).out);
    CHECK(run({"sample", "--runs", "0", "--seed", "1"}).code == 2);
    CHECK(run({"sample", "--runs", "10"}).code == 2);
    CHECK(run({"sample", "--seed", "10"}).code == 2);
    CHECK(run({"sample", "--runs", "-3", "--seed", "1"}).code == 2);
    CHECK(run({"sample", "--runs", "70", "--seed", "1", "--state", "psi4-qubit"}).code == 0);
}

TEST_CASE("fixtures-diff") {
    auto r = run({"fixtures-diff", "--dir", DAVN_FIXTURE_DIR});
    CHECK(r.code == 0);
    CHECK(r.out.find("6 known discrepancies") != std::string::npos);
    CHECK(r.out.find("tag=oq-table-II-residual-sign") != std::string::npos);
    CHECK(run({"fixtures-diff", "--dir", fresh_dir("empty").string()}).code == 2);

    // Flip one target: the diff fails and names the table and line.
    const auto dir = fresh_dir("flipped");
    for (const auto& e : fs::directory_iterator(DAVN_FIXTURE_DIR)) fs::copy_file(e.path(), dir / e.path().filename());
    {
        std::ifstream in(dir / "table_I.txt");
        std::stringstream ss;
        ss << in.rdbuf();
        auto text = ss.str();
        const auto pos = text.find("basic=1,3:i^3");
        REQUIRE(pos != std::string::npos);
        text.replace(pos, 13, "basic=1,3:i^1");
        std::ofstream(dir / "table_I.txt") << text;
    }
    r = run({"fixtures-diff", "--dir", dir.string()});
    CHECK(r.code == 1);
    CHECK(r.out.find("mismatch  table_I.txt:") != std::string::npos);
    CHECK(r.out.find("eigenvalue-differs") != std::string::npos);
    const auto j = Json::parse(run({"fixtures-diff", "--dir", dir.string(), "--format", "json"}).out);
    CHECK(j["mismatched"] == 1);
    CHECK(j["verdict"] == "FAIL");
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify-state", "--format", "yaml"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("state rendering") {
    davn::StateVector s(2);
    s.set(davn::BasisKet{0, 0}, 1);
    s.set(davn::BasisKet{1, 3}, davn::GaussScalar(0, 1));
    s.set(davn::BasisKet{2, 2}, -1);
    s.set(davn::BasisKet{3, 1}, davn::GaussScalar(0, -1));
    CHECK(davn::format_state(s) == "|00> + i|13> - |22> - i|31>");
    CHECK(davn::parse_format("md") == davn::Format::markdown);
    CHECK_FALSE(davn::parse_format("html").has_value());
    CHECK(davn::parse_state_name("psi4-embedded") == davn::StateName::psi4_embedded);
}
