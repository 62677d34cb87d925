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

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "davn/fixtures.hpp"
#include "davn/lhv.hpp"
#include "davn/postselect.hpp"
#include "davn/report.hpp"
#include "davn/sample.hpp"
#include "davn/states.hpp"

namespace davn::cli {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

OutcomeTuple parse_outcome(const std::string& text) {
    std::vector<std::uint8_t> digits;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.size() != 1 || part[0] < '0' || part[0] > '3')
            throw UsageError("--outcome expects four phase exponents k1,k2,k3,k4 in 0..3, got '" + text + "'");
        digits.push_back(static_cast<std::uint8_t>(part[0] - '0'));
    }
    if (digits.size() != 4 || text.back() == ',')
        throw UsageError("--outcome expects four phase exponents k1,k2,k3,k4 in 0..3, got '" + text + "'");
    return OutcomeTuple(digits);
}

unsigned parallel_workers() {
    const char* env = std::getenv("DAVN_PARALLEL");
    if (!env || !*env) return 0;
    char* end = nullptr;
    const unsigned long n = std::strtoul(env, &end, 10);
    if (*end != '\0' || n == 0 || n > 1024) throw UsageError(std::string("DAVN_PARALLEL must be in 1..1024, got '") + env + "'");
    return static_cast<unsigned>(n);
}

StateName state_or_throw(const std::string& name) {
    auto s = parse_state_name(name);
    if (!s) throw UsageError("unknown state '" + name + "' (expected psi1234, psi4-qubit or psi4-embedded)");
    return *s;
}

StateVector four_qudit_state(const std::string& name) {
    auto s = build_named_state(state_or_throw(name));
    if (s.n_sites() != kLhvSites || s.levels() != kQuditLevels)
        throw UsageError("state '" + name + "' is not a four-qudit (d=4) state");
    return s;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + path + "'");
    f << text;
    if (!f) throw UsageError("failed writing output file '" + path + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"davn: exact verification of the four-qudit all-versus-nothing Bell argument"};
    app.require_subcommand(1);

    std::string format_name = "text";
    std::string output;
    std::string state_name = "psi1234";
    std::string outcome_text;
    std::string table_label;
    std::uint64_t runs = 0;
    std::uint64_t seed = 0;
    std::string fixture_dir = "fixtures";
    std::string dump_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format,-f", format_name, "text | markdown | md | json");
        sub->add_option("-o,--output", output, "write the report to a file");
    };

    auto* verify = app.add_subcommand("verify-state", "normalization, stabilizer, digit-sum audit and marginal test");
    verify->add_option("--state", state_name, "psi1234 | psi4-qubit | psi4-embedded");
    verify->add_option("--dump", dump_path, "also write the state dump to this file");
    add_common(verify);

    auto* tables = app.add_subcommand("tables", "regenerate a table of Hardy-like conditions");
    tables->add_option("--table", table_label, "I..X or a family name such as III-A")->required();
    add_common(tables);

    auto* paradox = app.add_subcommand("paradox", "LHV check for one Z outcome");
    paradox->add_option("--outcome", outcome_text, "phase exponents k1,k2,k3,k4")->required();
    paradox->add_option("--state", state_name, "psi1234 | psi4-embedded");
    add_common(paradox);

    auto* davn_cmd = app.add_subcommand("davn", "LHV check for every supported outcome");
    davn_cmd->add_option("--state", state_name, "psi1234 | psi4-embedded");
    add_common(davn_cmd);

    auto* sample = app.add_subcommand("sample", "seeded sampling of joint Z outcomes");
    sample->add_option("--runs", runs, "number of draws")->required();
    sample->add_option("--seed", seed, "generator seed")->required();
    sample->add_option("--state", state_name, "psi1234 | psi4-qubit | psi4-embedded");
    add_common(sample);

    auto* diff = app.add_subcommand("fixtures-diff", "diff golden tables against the derivation");
    diff->add_option("--dir", fixture_dir, "fixture directory");
    add_common(diff);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        const auto format = parse_format(format_name);
        if (!format) throw UsageError("unknown format '" + format_name + "' (expected text, markdown, md or json)");

        if (verify->parsed()) {
            const auto name = state_or_throw(state_name);
            const auto v = verify_state(name);
            if (!dump_path.empty()) emit(dump_state(build_named_state(name)), dump_path, out);
            emit(render_state_verification(v, *format), output, out);
            return v.passed() ? kExitPass : kExitFail;
        }
        if (tables->parsed()) {
            const auto label = canonical_table_label(table_label);
            if (!label) throw UsageError("unknown table '" + table_label + "' (expected I..X or I, II, III-A .. VI-B)");
            emit(render_table(build_psi_1234(), *label, *format), output, out);
            return kExitPass;
        }
        if (paradox->parsed()) {
            const auto s = four_qudit_state(state_name);
            const auto o = parse_outcome(outcome_text);
            if (joint_z_probability(s, o) == Rational(0)) {
                err << "error: outcome has probability 0: (" << outcome_text
                    << ") lies outside the support of the joint Z distribution of " << state_name << '\n';
                return kExitUsage;
            }
            const auto r = verify_paradox(s, o);
            emit(render_paradox(r, *format), output, out);
            return r.satisfiable ? kExitFail : kExitPass;
        }
        if (davn_cmd->parsed()) {
            const auto s = four_qudit_state(state_name);
            const auto d = verify_davn(s, parallel_workers());
            emit(render_davn(d, state_name, *format), output, out);
            return d.davn ? kExitPass : kExitFail;
        }
        if (sample->parsed()) {
            if (runs == 0) throw UsageError("--runs must be positive");
            const auto s = build_named_state(state_or_throw(state_name));
            emit(render_sample(sample_outcomes(s, runs, seed), state_name, *format), output, out);
            return kExitPass;
        }
        if (diff->parsed()) {
            const auto report = run_fixture_diff(build_psi_1234(), fixture_dir);
            emit(render_fixture_diff(report, *format), output, out);
            return report.passed() ? kExitPass : kExitFail;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const FixtureError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}

}  // namespace davn::cli
