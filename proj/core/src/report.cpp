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

#include "davn/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace davn {
namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json outcome_json(const OutcomeTuple& o) {
    Json exps = Json::array();
    Json eig = Json::array();
    for (std::size_t j = 0; j < o.size(); ++j) {
        exps.push_back(o[j]);
        eig.push_back(to_string(Phase(o[j])));
    }
    return Json{{"ket", o.to_string()}, {"exponents", exps}, {"eigenvalues", eig}};
}

std::string outcome_text(const OutcomeTuple& o) {
    std::string s = "(";
    for (std::size_t j = 0; j < o.size(); ++j) s += (j ? "," : "") + to_string(Phase(o[j]));
    return s + ")";
}

Json constraint_json(const Constraint& c) {
    Json exps = Json::array();
    for (int e : c.exponents()) exps.push_back(e);
    return Json{{"word", c.to_string().substr(0, c.to_string().find(" = "))},
                {"exponents", exps},
                {"target", exponent_string(c.target())},
                {"eigenvalue", to_string(c.target())}};
}

Json constraints_json(const std::vector<Constraint>& cs) {
    Json a = Json::array();
    for (const auto& c : cs) a.push_back(constraint_json(c));
    return a;
}

Json eigenword_json(const std::optional<EigenWord>& w, std::array<std::size_t, 2> sites) {
    if (!w) return nullptr;
    return constraint_json(Constraint::from_eigenword(*w, sites));
}

Json row_json(const ConstraintRow& row) {
    Json words = Json::array();
    for (const auto& w : row.all_eigenwords) words.push_back(eigenword_json(w, row.residual.sites));
    return Json{{"pair", row.pair.to_string()},
                {"residual_sites", Json::array({row.residual.sites[0] + 1, row.residual.sites[1] + 1})},
                {"residual", format_state(row.residual.state)},
                {"basic", eigenword_json(row.basic, row.residual.sites)},
                {"extended", eigenword_json(row.extended, row.residual.sites)},
                {"eigenwords", words}};
}

std::string word_cell(const std::optional<EigenWord>& w, std::array<std::size_t, 2> sites) {
    return w ? format_eigenword(*w, sites) : "---";
}

std::string md_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

std::string residual_cell(const ResidualState& r) {
    return "|psi>_" + std::to_string(r.sites[0] + 1) + std::to_string(r.sites[1] + 1) + " ~ " + format_state(r.state);
}

Json paradox_json(const ParadoxReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) rows.push_back(row_json(row));
    return Json{{"outcome", outcome_json(r.outcome)},
                {"type", r.type_label},
                {"probability", to_string(r.probability)},
                {"rows", rows},
                {"constraints_basic", constraints_json(r.constraints_basic)},
                {"constraints_extended", constraints_json(r.constraints_extended)},
                {"constraint_set", constraints_json(r.constraint_set)},
                {"satisfiable", r.satisfiable},
                {"witness", r.witness ? Json(r.witness->to_string()) : Json(nullptr)},
                {"minimal_core", constraints_json(r.minimal_core)},
                {"extended_only_unsat", r.extended_only_unsat}};
}

void write_constraints(std::ostream& os, const char* title, const std::vector<Constraint>& cs) {
    os << title << " (" << cs.size() << "):\n";
    for (const auto& c : cs) os << "  " << c.to_string() << "    " << c.exponent_form() << '\n';
}

}  // namespace

std::optional<Format> parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "markdown" || name == "md") return Format::markdown;
    if (name == "json") return Format::json;
    return std::nullopt;
}

std::optional<StateName> parse_state_name(const std::string& name) {
    if (name == "psi1234") return StateName::psi1234;
    if (name == "psi4-qubit") return StateName::psi4_qubit;
    if (name == "psi4-embedded") return StateName::psi4_embedded;
    return std::nullopt;
}

std::string to_string(StateName name) {
    switch (name) {
        case StateName::psi1234: return "psi1234";
        case StateName::psi4_qubit: return "psi4-qubit";
        default: return "psi4-embedded";
    }
}

StateVector build_named_state(StateName name) {
    switch (name) {
        case StateName::psi1234: return build_psi_1234();
        case StateName::psi4_qubit: return build_psi4_qubit();
        default: return build_psi4_embedded();
    }
}

std::string format_state(const StateVector& s) {
    std::string out;
    for (const auto& [ket, amp] : s.amplitudes()) {
        std::string coeff;
        bool negative = false;
        if (auto p = as_phase(amp)) {
            negative = p->exponent() >= 2;
            coeff = p->exponent() % 2 == 1 ? "i" : "";
        } else {
            coeff = "(" + to_string(amp) + ")";
        }
        if (out.empty()) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        out += coeff + "|" + ket.to_string() + ">";
    }
    return out.empty() ? "0" : out;
}

bool StateVerification::passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return !checks.empty();
}

StateVerification verify_state(StateName name) {
    const auto s = build_named_state(name);
    StateVerification v;
    v.state = name;
    v.norm_sq = s.norm_sq();
    v.components = s.size();
    auto check = [&](std::string n, bool ok, std::string detail) { v.checks.push_back({std::move(n), ok, std::move(detail)}); };

    const std::size_t expected_components = name == StateName::psi1234 ? 56 : 7;
    check("component-count", s.size() == expected_components,
          std::to_string(s.size()) + " components (expected " + std::to_string(expected_components) + ")");
    check("normalization", s.norm_sq() == static_cast<std::int64_t>(expected_components) && s.recompute_norm_sq() == s.norm_sq(),
          "norm_sq = " + std::to_string(s.norm_sq()));
    bool unit = true;
    for (const auto& [ket, amp] : s.amplitudes()) unit = unit && as_phase(amp).has_value();
    check("unit-amplitudes", unit, unit ? "every amplitude is a fourth root of unity" : "non-unit amplitude present");

    Rational total(0);
    for (const auto& o : z_support(s)) total += joint_z_probability(s, o);
    check("distribution", total == Rational(1), "sum of joint Z probabilities = " + to_string(total));

    const auto audit = check_global_stabilizer(s);
    if (name == StateName::psi4_embedded) {
        // The embedded image of sigma_z on {|0>, |1>} is Z^2.
        const auto z2 = PauliWord::z_all(s.n_sites(), 2);
        check("stabilizer", apply_to_state(z2, s) == s, z2.to_string() + " |s> = |s>");
        v.notes.push_back(std::string("Z1*Z2*Z3*Z4 ") + (audit.stabilized ? "stabilizes" : "does not stabilize") +
                          " the embedded state (" + std::to_string(audit.kets_with_zero_digit_sum) + "/" +
                          std::to_string(audit.kets_checked) + " kets have digit sum 0 mod 4)");
        const auto c4 = commutation_phase_audit(4);
        const auto c2 = commutation_phase_audit(2);
        v.notes.push_back("commutation audit: X^2 Z^2 = " + to_string(c4) + " Z^2 X^2 for d=4, versus sigma_x sigma_z = " +
                          to_string(c2) + " sigma_z sigma_x for d=2");
        const auto q = build_psi4_qubit();
        bool preserved = q.size() == s.size() && q.norm_sq() == s.norm_sq();
        for (const auto& [ket, amp] : q.amplitudes()) {
            BasisKet mapped = ket;
            for (std::size_t j = 0; j < ket.size(); ++j) mapped.set(j, ket[j] == 0 ? 0 : 1);
            preserved = preserved && s.amplitude(mapped) == amp;
        }
        check("embedding", preserved, "amplitudes carried over by up->|0>, down->|1>");
    } else {
        check("stabilizer", audit.stabilized, global_z_word(s).to_string() + " |s> = |s>");
    }
    check("observation", audit.observation_holds,
          std::to_string(audit.kets_checked) + " kets: digit sum = 0 mod d iff fixed by the global Z word");

    v.marginals = nonstabilizer_test(s);
    check("non-stabilizer", v.marginals.non_stabilizer, "some single-site marginal differs from I/d");
    if (name != StateName::psi4_embedded) {
        const auto expected = name == StateName::psi1234
                                  ? std::vector<Rational>{Rational(2, 7), Rational(3, 14), Rational(2, 7), Rational(3, 14)}
                                  : std::vector<Rational>{Rational(4, 7), Rational(3, 7)};
        const auto& rho1 = v.marginals.rho.front();
        bool ok = rho1.is_diagonal() && rho1.dim() == static_cast<int>(expected.size());
        for (int r = 0; ok && r < rho1.dim(); ++r) ok = rho1.diagonal(r) == expected[static_cast<std::size_t>(r)];
        check("rho1", ok, "rho_1 = " + rho1.to_string());
    }
    return v;
}

std::string render_state_verification(const StateVerification& v, Format f) {
    if (f == Format::json) {
        Json checks = Json::array();
        for (const auto& c : v.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        Json rho = Json::array();
        for (std::size_t j = 0; j < v.marginals.rho.size(); ++j)
            rho.push_back(Json{{"site", j + 1},
                               {"matrix", v.marginals.rho[j].to_string()},
                               {"maximally_mixed", static_cast<bool>(v.marginals.maximally_mixed[j])}});
        Json notes = Json::array();
        for (const auto& n : v.notes) notes.push_back(n);
        return dump(Json{{"schema", kReportSchema},
                         {"kind", "verify-state"},
                         {"state", to_string(v.state)},
                         {"norm_sq", v.norm_sq},
                         {"components", v.components},
                         {"checks", checks},
                         {"reduced_density", rho},
                         {"notes", notes},
                         {"verdict", v.passed() ? "PASS" : "FAIL"}});
    }
    std::ostringstream os;
    const bool md = f == Format::markdown;
    os << (md ? "## " : "") << "verify-state " << to_string(v.state) << "\n\n";
    os << "norm_sq=" << v.norm_sq << ", components=" << v.components << "\n\n";
    if (md) os << "| check | result | detail |\n|---|---|---|\n";
    for (const auto& c : v.checks) {
        if (md) os << "| " << c.name << " | " << (c.passed ? "PASS" : "FAIL") << " | " << c.detail << " |\n";
        else os << (c.passed ? "PASS  " : "FAIL  ") << c.name << ": " << c.detail << '\n';
    }
    os << '\n';
    for (std::size_t j = 0; j < v.marginals.rho.size(); ++j)
        os << (md ? "- " : "") << "rho_" << j + 1 << " = " << v.marginals.rho[j].to_string()
           << (v.marginals.maximally_mixed[j] ? "  (= I/d)" : "  (!= I/d)") << '\n';
    for (const auto& n : v.notes) os << (md ? "- " : "") << "note: " << n << '\n';
    os << '\n' << (v.passed() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

std::string render_table(const StateVector& s, const std::string& canonical_label, Format f) {
    const auto family = table_family(canonical_label);
    const auto& groups = reference_table_groups(canonical_label);
    if (f == Format::json) {
        Json blocks = Json::array();
        for (const auto& g : groups) {
            Json rows = Json::array();
            for (const auto& row : table_for_outcome(s, g)) rows.push_back(row_json(row));
            blocks.push_back(Json{{"outcome", outcome_json(g)},
                                  {"component", to_string(s.amplitude(g)) + "|" + g.to_string() + ">"},
                                  {"rows", rows}});
        }
        return dump(Json{{"schema", kReportSchema},
                         {"kind", "table"},
                         {"table", canonical_label},
                         {"family", family},
                         {"groups", blocks}});
    }
    std::ostringstream os;
    const bool md = f == Format::markdown;
    os << (md ? "## " : "") << "Table " << canonical_label << " (type " << family << ")\n";
    for (const auto& g : groups) {
        os << '\n' << (md ? "### " : "") << "Z outcome " << outcome_text(g) << " from component "
           << format_state(build_product_state(g).scaled(s.amplitude(g))) << "\n\n";
        if (md) os << "| Z_i, Z_j | residual | basic | extended |\n|---|---|---|---|\n";
        for (const auto& row : table_for_outcome(s, g)) {
            const auto b = word_cell(row.basic, row.residual.sites);
            const auto e = word_cell(row.extended, row.residual.sites);
            if (md)
                os << "| " << row.pair.to_string() << " | " << md_escape(residual_cell(row.residual)) << " | " << b << " | " << e
                   << " |\n";
            else os << "  " << row.pair.to_string() << "  " << residual_cell(row.residual) << "  basic: " << b << "  extended: " << e << '\n';
        }
    }
    return os.str();
}

std::string render_paradox(const ParadoxReport& r, Format f) {
    if (f == Format::json) {
        Json j{{"schema", kReportSchema}, {"kind", "paradox"}};
        const Json body = paradox_json(r);
        for (const auto& [k, v] : body.items()) j[k] = v;
        return dump(j);
    }
    std::ostringstream os;
    const bool md = f == Format::markdown;
    os << (md ? "## " : "") << "paradox for Z outcome " << outcome_text(r.outcome) << " [" << r.outcome.to_string()
       << "], type " << r.type_label << ", probability " << to_string(r.probability) << "\n\n";
    for (const auto& row : r.rows)
        os << (md ? "- " : "  ") << row.pair.to_string() << " => " << word_cell(row.basic, row.residual.sites) << '\n';
    os << '\n';
    write_constraints(os, "constraint set", r.constraint_set);
    if (r.satisfiable) {
        os << "satisfiable: LHV witness X = i^" << r.witness->to_string() << '\n';
    } else {
        os << "unsatisfiable over all 256 LHV assignments\n";
        write_constraints(os, "minimal core", r.minimal_core);
    }
    os << "extended constraints alone " << (r.extended_only_unsat ? "are" : "are not") << " unsatisfiable\n";
    return os.str();
}

std::string render_davn(const DavnReport& d, const std::string& state_name, Format f) {
    std::size_t unsat = d.reports.size() - d.failing_outcomes.size();
    if (f == Format::json) {
        Json counts = Json::object();
        for (const auto& [label, n] : d.type_counts) counts[label] = n;
        Json failing = Json::array();
        for (const auto& o : d.failing_outcomes) failing.push_back(o.to_string());
        Json paradoxes = Json::array();
        for (const auto& r : d.reports) paradoxes.push_back(paradox_json(r));
        return dump(Json{{"schema", kReportSchema},
                         {"kind", "davn"},
                         {"state", state_name},
                         {"support_size", d.support_size},
                         {"probability_sum", to_string(d.probability_sum)},
                         {"unsatisfiable", unsat},
                         {"type_counts", counts},
                         {"failing_outcomes", failing},
                         {"verdict", d.verdict()},
                         {"paradoxes", paradoxes}});
    }
    std::ostringstream os;
    const bool md = f == Format::markdown;
    os << (md ? "## " : "") << "davn " << state_name << "\n\n";
    os << "support: " << d.support_size << " outcomes, total probability " << to_string(d.probability_sum) << '\n';
    os << "unsatisfiable: " << unsat << "/" << d.reports.size() << '\n';
    os << "type counts:";
    for (const auto& [label, n] : d.type_counts) os << ' ' << label << '=' << n;
    os << "\n\n";
    if (md) os << "| outcome | type | constraints | core | verdict |\n|---|---|---|---|---|\n";
    for (const auto& r : d.reports) {
        const auto verdict = r.satisfiable ? "SATISFIABLE" : "paradox";
        if (md)
            os << "| " << r.outcome.to_string() << " | " << r.type_label << " | " << r.constraint_set.size() << " | "
               << r.minimal_core.size() << " | " << verdict << " |\n";
        else
            os << "  " << r.outcome.to_string() << "  " << r.type_label << "  constraints=" << r.constraint_set.size()
               << "  core=" << r.minimal_core.size() << "  " << verdict << '\n';
    }
    os << '\n' << "verdict: " << d.verdict() << '\n';
    return os.str();
}

std::string render_sample(const SampleSummary& s, const std::string& state_name, Format f) {
    if (f == Format::json) {
        Json counts = Json::object();
        for (const auto& [o, n] : s.counts) counts[o.to_string()] = n;
        return dump(Json{{"schema", kReportSchema},
                         {"kind", "sample"},
                         {"state", state_name},
                         {"algorithm", s.algorithm},
                         {"seed", s.seed},
                         {"runs", s.total_runs},
                         {"max_abs_deviation", to_string(s.max_abs_deviation)},
                         {"counts", counts}});
    }
    std::ostringstream os;
    const bool md = f == Format::markdown;
    os << (md ? "## " : "") << "sample " << state_name << ": runs=" << s.total_runs << " seed=" << s.seed
       << " algorithm=" << s.algorithm << "\n\n";
    if (md) os << "| outcome | count |\n|---|---|\n";
    for (const auto& [o, n] : s.counts) {
        if (md) os << "| " << o.to_string() << " | " << n << " |\n";
        else os << "  " << o.to_string() << "  " << n << '\n';
    }
    const auto& dev = s.max_abs_deviation;
    os << "\nmax |count - expected| = " << to_string(dev) << " (~"
       << static_cast<double>(dev.numerator()) / static_cast<double>(dev.denominator()) << ")\n";
    return os.str();
}

std::string render_fixture_diff(const FixtureDiffReport& r, Format f) {
    auto reasons_text = [](const RowVerdict& v) {
        std::string s;
        for (const auto& x : v.reasons) s += (s.empty() ? "" : ",") + x;
        return s;
    };
    if (f == Format::json) {
        Json rows = Json::array();
        for (const auto& e : r.entries) {
            if (e.verdict.status == RowVerdict::Status::match) continue;
            Json reasons = Json::array();
            for (const auto& x : e.verdict.reasons) reasons.push_back(x);
            rows.push_back(Json{{"source", e.row.source},
                                {"table", e.row.table},
                                {"pair", e.row.pair.to_string()},
                                {"status", to_string(e.verdict.status)},
                                {"reasons", reasons},
                                {"tag", e.verdict.tag}});
        }
        Json unused = Json::array();
        for (const auto& a : r.unused_allowlist) unused.push_back(a.table + " " + a.pair.to_string() + " " + a.tag);
        return dump(Json{{"schema", kReportSchema},
                         {"kind", "fixtures-diff"},
                         {"rows", r.entries.size()},
                         {"matched", r.matched},
                         {"known_discrepancies", r.known},
                         {"mismatched", r.mismatched},
                         {"non_matching", rows},
                         {"unused_allowlist", unused},
                         {"verdict", r.passed() ? "PASS" : "FAIL"}});
    }
    std::ostringstream os;
    const bool md = f == Format::markdown;
    os << (md ? "## " : "") << "fixtures-diff: " << r.entries.size() << " rows, " << r.matched << " match, " << r.known
       << " known discrepancies, " << r.mismatched << " mismatches\n\n";
    for (const auto& e : r.entries) {
        if (e.verdict.status == RowVerdict::Status::match) continue;
        os << (md ? "- " : "  ") << to_string(e.verdict.status) << "  " << e.row.source << "  table " << e.row.table
           << "  " << e.row.pair.to_string() << "  [" << reasons_text(e.verdict) << "]";
        if (!e.verdict.tag.empty()) os << "  tag=" << e.verdict.tag;
        os << '\n';
    }
    for (const auto& a : r.unused_allowlist)
        os << (md ? "- " : "  ") << "warning: allowlist entry not used: table " << a.table << " " << a.pair.to_string()
           << " tag=" << a.tag << '\n';
    os << '\n' << (r.passed() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

}  // namespace davn
