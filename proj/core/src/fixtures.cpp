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

#include "davn/fixtures.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace davn {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        auto next = s.find(sep, pos);
        out.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

int to_int(std::string_view s, std::string_view context) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw FixtureError("bad integer '" + std::string(s) + "' in " + std::string(context));
    return v;
}

Phase to_phase(std::string_view s, std::string_view context) {
    auto p = parse_phase(s);
    if (!p) throw FixtureError("bad phase '" + std::string(s) + "' in " + std::string(context));
    return *p;
}

std::map<std::string, std::string, std::less<>> fields_of(std::string_view line) {
    std::map<std::string, std::string, std::less<>> fields;
    for (auto part : split(line, '|')) {
        part = trim(part);
        if (part.empty()) throw FixtureError("empty field in '" + std::string(line) + "'");
        auto eq = part.find('=');
        if (eq == std::string_view::npos) throw FixtureError("field without '=' in '" + std::string(line) + "'");
        auto key = std::string(trim(part.substr(0, eq)));
        if (!fields.emplace(key, std::string(trim(part.substr(eq + 1)))).second)
            throw FixtureError("duplicate field '" + key + "'");
    }
    return fields;
}

const std::string& required(const std::map<std::string, std::string, std::less<>>& f, const char* key) {
    auto it = f.find(key);
    if (it == f.end()) throw FixtureError(std::string("missing field '") + key + "'");
    return it->second;
}

std::string canonical_or_throw(const std::string& label) {
    auto c = canonical_table_label(label);
    if (!c) throw FixtureError("unknown table label '" + label + "'");
    return *c;
}

PairSelection parse_pair(std::string_view text) {
    auto parts = split(text, ',');
    if (parts.size() != 2) throw FixtureError("pair needs two selections: '" + std::string(text) + "'");
    PairSelection p;
    for (int n = 0; n < 2; ++n) {
        auto part = trim(parts[static_cast<std::size_t>(n)]);
        auto eq = part.find('=');
        if (part.size() < 4 || part.front() != 'Z' || eq == std::string_view::npos)
            throw FixtureError("bad pair selection '" + std::string(part) + "'");
        const int site = to_int(part.substr(1, eq - 1), text);
        if (site < 1 || site > 4) throw FixtureError("pair site out of range in '" + std::string(text) + "'");
        const auto phase = to_phase(part.substr(eq + 1), text);
        if (n == 0) {
            p.site_i = static_cast<std::size_t>(site - 1);
            p.m_i = phase;
        } else {
            p.site_j = static_cast<std::size_t>(site - 1);
            p.m_j = phase;
        }
    }
    if (p.site_i == p.site_j) throw FixtureError("pair sites must differ: '" + std::string(text) + "'");
    return p;
}

std::optional<EigenWord> parse_word(std::string_view text) {
    if (text == "none") return std::nullopt;
    auto colon = text.find(':');
    auto comma = text.find(',');
    if (colon == std::string_view::npos || comma == std::string_view::npos || comma > colon)
        throw FixtureError("bad constraint '" + std::string(text) + "'");
    EigenWord w{to_int(text.substr(0, comma), text), to_int(text.substr(comma + 1, colon - comma - 1), text),
                to_phase(text.substr(colon + 1), text)};
    if (w.u < 0 || w.u > 3 || w.v < 0 || w.v > 3 || (w.u == 0 && w.v == 0))
        throw FixtureError("constraint exponents out of range in '" + std::string(text) + "'");
    return w;
}

std::string format_word(const std::optional<EigenWord>& w) {
    if (!w) return "none";
    return std::to_string(w->u) + "," + std::to_string(w->v) + ":" + exponent_string(w->target);
}

std::string format_pair(const PairSelection& p) {
    return "Z" + std::to_string(p.site_i + 1) + "=" + exponent_string(p.m_i) + ",Z" + std::to_string(p.site_j + 1) +
           "=" + exponent_string(p.m_j);
}

std::vector<std::pair<BasisKet, Phase>> parse_residual(std::string_view text) {
    std::vector<std::pair<BasisKet, Phase>> out;
    for (auto item : split(text, ';')) {
        item = trim(item);
        auto colon = item.find(':');
        if (colon == std::string_view::npos) throw FixtureError("bad residual term '" + std::string(item) + "'");
        BasisKet ket;
        try {
            ket = BasisKet::parse(item.substr(0, colon));
        } catch (const std::invalid_argument& e) {
            throw FixtureError(std::string("bad residual ket: ") + e.what());
        }
        if (ket.size() != 2) throw FixtureError("residual kets must have two digits: '" + std::string(item) + "'");
        out.emplace_back(std::move(ket), Phase(to_int(item.substr(colon + 1), text)));
    }
    return out;
}

std::optional<OutcomeTuple> parse_group(const std::map<std::string, std::string, std::less<>>& f) {
    auto it = f.find("group");
    if (it == f.end()) return std::nullopt;
    try {
        auto g = BasisKet::parse(it->second);
        if (g.size() != 4) throw FixtureError("group must have four digits");
        return g;
    } catch (const std::invalid_argument& e) {
        throw FixtureError(std::string("bad group: ") + e.what());
    }
}

// True if the residual states agree up to a global phase i^c.
bool residual_matches(const std::vector<std::pair<BasisKet, Phase>>& expected, const StateVector& derived) {
    if (expected.size() != derived.size()) return false;
    StateVector e(2);
    for (const auto& [ket, phase] : expected) {
        if (!e.amplitude(ket).is_zero()) return false;
        e.set(ket, GaussScalar::from_phase(phase));
    }
    for (int c = 0; c < 4; ++c)
        if (e.scaled(GaussScalar::from_phase(Phase(c))) == derived) return true;
    return false;
}

}  // namespace

FixtureRow parse_fixture_line(std::string_view line) {
    const auto f = fields_of(trim(line));
    for (const auto& [key, value] : f)
        if (key != "table" && key != "pair" && key != "residual" && key != "basic" && key != "extended" &&
            key != "group")
            throw FixtureError("unknown field '" + key + "'");
    FixtureRow row;
    row.table = canonical_or_throw(required(f, "table"));
    row.pair = parse_pair(required(f, "pair"));
    row.residual = parse_residual(required(f, "residual"));
    row.basic = parse_word(required(f, "basic"));
    row.extended = parse_word(required(f, "extended"));
    row.group = parse_group(f);
    return row;
}

std::string format_fixture_row(const FixtureRow& row) {
    std::ostringstream os;
    os << "table=" << row.table << " | pair=" << format_pair(row.pair) << " | residual=";
    for (std::size_t n = 0; n < row.residual.size(); ++n)
        os << (n ? ";" : "") << row.residual[n].first.to_string() << ':' << row.residual[n].second.exponent();
    os << " | basic=" << format_word(row.basic) << " | extended=" << format_word(row.extended);
    if (row.group) os << " | group=" << row.group->to_string();
    return os.str();
}

std::vector<FixtureRow> load_fixture_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot open fixture file " + path.string());
    std::vector<FixtureRow> rows;
    std::string line;
    for (int n = 1; std::getline(in, line); ++n) {
        auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        try {
            rows.push_back(parse_fixture_line(t));
        } catch (const FixtureError& e) {
            throw FixtureError(path.filename().string() + ":" + std::to_string(n) + ": " + e.what());
        }
        rows.back().source = path.filename().string() + ":" + std::to_string(n);
    }
    return rows;
}

Allowlist parse_allowlist(std::string_view text) {
    Allowlist list;
    std::istringstream is{std::string(text)};
    std::string line;
    for (int n = 1; std::getline(is, line); ++n) {
        auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        try {
            const auto f = fields_of(t);
            AllowlistEntry e;
            e.table = canonical_or_throw(required(f, "table"));
            e.pair = parse_pair(required(f, "pair"));
            e.group = parse_group(f);
            for (auto r : split(required(f, "reasons"), ',')) e.reasons.emplace(trim(r));
            e.tag = required(f, "tag");
            if (auto it = f.find("note"); it != f.end()) e.note = it->second;
            list.push_back(std::move(e));
        } catch (const FixtureError& e) {
            throw FixtureError("allowlist line " + std::to_string(n) + ": " + e.what());
        }
    }
    return list;
}

Allowlist load_allowlist(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot open allowlist " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_allowlist(ss.str());
}

std::string to_string(RowVerdict::Status s) {
    switch (s) {
        case RowVerdict::Status::match: return "match";
        case RowVerdict::Status::known_discrepancy: return "known-discrepancy";
        default: return "mismatch";
    }
}

namespace {

RowVerdict finish(const FixtureRow& expected, std::set<std::string> reasons, const Allowlist* allowlist) {
    RowVerdict v;
    v.reasons = std::move(reasons);
    if (v.reasons.empty()) return v;
    v.status = RowVerdict::Status::mismatch;
    if (allowlist) {
        for (const auto& e : *allowlist) {
            if (e.table == expected.table && e.group == expected.group && e.pair == expected.pair &&
                e.reasons == v.reasons) {
                v.status = RowVerdict::Status::known_discrepancy;
                v.tag = e.tag;
                break;
            }
        }
    }
    return v;
}

std::set<std::string> group_reasons(const FixtureRow& expected) {
    std::set<std::string> reasons;
    if (expected.group) {
        const auto& g = *expected.group;
        if (g[expected.pair.site_i] != expected.pair.m_i.exponent() ||
            g[expected.pair.site_j] != expected.pair.m_j.exponent())
            reasons.insert("pair-not-in-group");
    }
    return reasons;
}

}  // namespace

RowVerdict verify_reference_row(const FixtureRow& expected, const ConstraintRow& derived, const Allowlist* allowlist) {
    auto reasons = group_reasons(expected);
    if (!(expected.pair == derived.pair)) reasons.insert("pair-differs");
    if (!residual_matches(expected.residual, derived.residual.state)) reasons.insert("residual-differs");

    const auto& all = derived.all_eigenwords;
    if (expected.basic) {
        const auto& b = *expected.basic;
        if (std::find(all.begin(), all.end(), b) == all.end()) {
            const bool same_word =
                std::any_of(all.begin(), all.end(), [&](const EigenWord& w) { return w.u == b.u && w.v == b.v; });
            reasons.insert(same_word ? "eigenvalue-differs" : "not-an-eigenword");
        }
    } else if (derived.basic) {
        reasons.insert("basic-missing");
    }
    if (expected.extended != derived.extended) {
        const bool same_word = expected.extended && derived.extended && expected.extended->u == derived.extended->u &&
                               expected.extended->v == derived.extended->v;
        reasons.insert(same_word ? "extended-eigenvalue-differs" : "extended-differs");
    }
    return finish(expected, std::move(reasons), allowlist);
}

RowVerdict verify_fixture_row(const StateVector& s, const FixtureRow& expected, const Allowlist* allowlist) {
    try {
        return verify_reference_row(expected, derive_row(s, expected.pair), allowlist);
    } catch (const std::domain_error&) {
        auto reasons = group_reasons(expected);
        reasons.insert("selection-empty");
        return finish(expected, std::move(reasons), allowlist);
    }
}

std::filesystem::path fixture_file_name(const std::string& canonical_label) {
    return "table_" + canonical_label + ".txt";
}

FixtureDiffReport run_fixture_diff(const StateVector& s, const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw FixtureError("fixture directory " + dir.string() + " does not exist");
    Allowlist allowlist;
    if (fs::exists(dir / "allowlist.txt")) allowlist = load_allowlist(dir / "allowlist.txt");

    FixtureDiffReport report;
    std::vector<bool> used(allowlist.size(), false);
    for (const auto& label : reference_table_labels()) {
        const auto path = dir / fixture_file_name(label);
        if (!fs::exists(path)) throw FixtureError("missing fixture file " + path.string());
        const auto rows = load_fixture_file(path);
        if (rows.empty()) throw FixtureError("fixture file " + path.string() + " has no rows");
        for (const auto& row : rows) {
            if (row.table != label)
                throw FixtureError(row.source + ": row belongs to table " + row.table + ", not " + label);
            auto verdict = verify_fixture_row(s, row, &allowlist);
            switch (verdict.status) {
                case RowVerdict::Status::match: ++report.matched; break;
                case RowVerdict::Status::known_discrepancy:
                    ++report.known;
                    for (std::size_t n = 0; n < allowlist.size(); ++n)
                        if (allowlist[n].tag == verdict.tag && allowlist[n].table == row.table &&
                            allowlist[n].pair == row.pair && allowlist[n].group == row.group)
                            used[n] = true;
                    break;
                case RowVerdict::Status::mismatch: ++report.mismatched; break;
            }
            report.entries.push_back({row, std::move(verdict)});
        }
    }
    for (std::size_t n = 0; n < allowlist.size(); ++n)
        if (!used[n]) report.unused_allowlist.push_back(allowlist[n]);
    return report;
}

}  // namespace davn
