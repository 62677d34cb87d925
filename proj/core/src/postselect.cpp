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

#include "davn/postselect.hpp"

#include <map>
#include <stdexcept>

namespace davn {
namespace {

std::string site_power(std::size_t site, int power) {
    auto s = "X" + std::to_string(site + 1);
    if (power > 1) s += "^" + std::to_string(power);
    return s;
}

struct TableInfo {
    std::string label;
    std::string family;
    std::vector<OutcomeTuple> groups;
};

const std::vector<TableInfo>& table_info() {
    static const std::vector<TableInfo> info = [] {
        const std::vector<std::pair<std::string, std::vector<const char*>>> raw = {
            {"I", {"0000", "2222"}},
            {"II", {"0022", "2002", "2200", "0220", "0202", "2020"}},
            {"III-A", {"0233", "3023", "3302", "2330", "0323", "3032"}},
            {"III-B", {"2033", "3203", "3320", "0332", "2303", "3230"}},
            {"IV-A", {"0211", "1021", "1102", "2110", "0121", "1012"}},
            {"IV-B", {"2011", "1201", "1120", "0112", "2101", "1210"}},
            {"V-A", {"1300", "0130", "0013", "3001", "1030", "0103"}},
            {"V-B", {"3100", "0310", "0031", "1003", "3010", "0301"}},
            {"VI-A", {"1322", "2132", "2213", "3221", "1232", "2123"}},
            {"VI-B", {"3122", "2312", "2231", "1223", "3212", "2321"}},
        };
        static const char* kRoman[] = {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X"};
        std::vector<TableInfo> out;
        for (std::size_t t = 0; t < raw.size(); ++t) {
            TableInfo ti{kRoman[t], raw[t].first, {}};
            for (const char* g : raw[t].second) ti.groups.push_back(BasisKet::parse(g));
            out.push_back(std::move(ti));
        }
        return out;
    }();
    return info;
}

const TableInfo& info_for(const std::string& canonical) {
    for (const auto& t : table_info())
        if (t.label == canonical) return t;
    throw std::invalid_argument("unknown table label '" + canonical + "'");
}

}  // namespace

std::string PairSelection::to_string() const {
    return "Z" + std::to_string(site_i + 1) + "=" + davn::to_string(m_i) + ",Z" + std::to_string(site_j + 1) + "=" +
           davn::to_string(m_j);
}

EigenWord EigenWord::extended() const {
    if (u % 2 == 1 && v % 2 == 1) return {mod4(2 * u), mod4(2 * v), target.pow(2)};
    return *this;
}

std::string format_eigenword(const EigenWord& w, std::array<std::size_t, 2> sites) {
    std::string s;
    if (w.u) s += site_power(sites[0], w.u);
    if (w.v) s += (s.empty() ? "" : "*") + site_power(sites[1], w.v);
    return s + " = " + to_string(w.target);
}

ResidualState postselect_pair(const StateVector& s, const PairSelection& p) {
    if (s.n_sites() != 4) throw std::invalid_argument("postselect_pair: expects a four-site state");
    if (p.site_i == p.site_j || p.site_i >= 4 || p.site_j >= 4)
        throw std::invalid_argument("postselect_pair: invalid site pair " + p.to_string());
    ResidualState r;
    std::size_t n = 0;
    for (std::size_t j = 0; j < 4; ++j)
        if (j != p.site_i && j != p.site_j) r.sites[n++] = j;
    for (const auto& [ket, amp] : s.amplitudes()) {
        if (ket[p.site_i] != p.m_i.exponent() || ket[p.site_j] != p.m_j.exponent()) continue;
        r.state.set(BasisKet{ket[r.sites[0]], ket[r.sites[1]]}, amp);
    }
    if (r.state.empty()) throw std::domain_error("postselect_pair: selection " + p.to_string() + " has zero probability");
    return r;
}

DerivedConstraints derive_constraints(const ResidualState& r) {
    DerivedConstraints d;
    for (int u = 1; u <= 3; ++u) {
        for (int v = 1; v <= 3; ++v) {
            const auto word = PauliWord::x_pair(2, 0, u, 1, v);
            if (auto c = eigenvalue_of(word, r.state)) d.all_eigenwords.push_back({u, v, *c});
        }
    }
    if (!d.all_eigenwords.empty()) {
        d.basic = d.all_eigenwords.front();
        d.extended = d.basic->extended();
    }
    return d;
}

ConstraintRow derive_row(const StateVector& s, const PairSelection& p) {
    auto residual = postselect_pair(s, p);
    auto d = derive_constraints(residual);
    return {p, std::move(residual), d.basic, d.extended, std::move(d.all_eigenwords)};
}

std::vector<ConstraintRow> table_for_outcome(const StateVector& s, const OutcomeTuple& o) {
    if (o.size() != 4 || s.n_sites() != 4) throw std::invalid_argument("table_for_outcome: expects four sites");
    if (s.amplitude(o).is_zero())
        throw std::invalid_argument("table_for_outcome: outcome " + o.to_string() + " has probability 0");
    std::vector<ConstraintRow> rows;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) rows.push_back(derive_row(s, {i, j, Phase(o[i]), Phase(o[j])}));
    return rows;
}

const std::vector<std::string>& reference_table_labels() {
    static const std::vector<std::string> labels = [] {
        std::vector<std::string> v;
        for (const auto& t : table_info()) v.push_back(t.label);
        return v;
    }();
    return labels;
}

std::optional<std::string> canonical_table_label(const std::string& label) {
    for (const auto& t : table_info())
        if (t.label == label || t.family == label) return t.label;
    return std::nullopt;
}

std::string table_family(const std::string& canonical) { return info_for(canonical).family; }

const std::vector<OutcomeTuple>& reference_table_groups(const std::string& canonical) {
    return info_for(canonical).groups;
}

}  // namespace davn
