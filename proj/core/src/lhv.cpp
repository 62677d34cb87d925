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

#include "davn/lhv.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

#include "davn/states.hpp"

namespace davn {

std::string Assignment::to_string() const {
    std::string s = "(";
    for (std::size_t j = 0; j < values.size(); ++j) s += (j ? "," : "") + std::to_string(values[j]);
    return s + ")";
}

Constraint::Constraint(std::array<int, kLhvSites> exponents, Phase target) : exps_(exponents), target_(target) {
    bool any = false;
    for (auto& e : exps_) {
        e = mod4(e);
        any = any || e != 0;
    }
    if (!any) throw std::invalid_argument("Constraint: word must involve at least one site");
}

Constraint Constraint::from_eigenword(const EigenWord& w, std::array<std::size_t, 2> sites) {
    std::array<int, kLhvSites> e{};
    e.at(sites[0]) = w.u;
    e.at(sites[1]) = w.v;
    return Constraint(e, w.target);
}

bool Constraint::holds(const Assignment& a) const {
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < kLhvSites; ++j) sum += static_cast<std::int64_t>(exps_[j]) * a.values[j];
    return mod4(sum) == target_.exponent();
}

Constraint Constraint::product(const Constraint& other) const {
    std::array<int, kLhvSites> e{};
    for (std::size_t j = 0; j < kLhvSites; ++j) e[j] = exps_[j] + other.exps_[j];
    return Constraint(e, target_ * other.target_);
}

std::string Constraint::to_string() const {
    std::string s;
    for (std::size_t j = 0; j < kLhvSites; ++j) {
        if (!exps_[j]) continue;
        if (!s.empty()) s += '*';
        s += "X" + std::to_string(j + 1);
        if (exps_[j] > 1) s += "^" + std::to_string(exps_[j]);
    }
    return s + " = " + davn::to_string(target_);
}

std::string Constraint::exponent_form() const {
    std::string s = "(";
    for (std::size_t j = 0; j < kLhvSites; ++j) s += (j ? "," : "") + std::to_string(exps_[j]);
    return s + "):" + exponent_string(target_);
}

std::optional<Assignment> satisfiable(std::span<const Constraint> cs) {
    Assignment a;
    for (int code = 0; code < 256; ++code) {
        for (std::size_t j = 0; j < kLhvSites; ++j) a.values[j] = (code >> (2 * (kLhvSites - 1 - j))) & 3;
        if (std::all_of(cs.begin(), cs.end(), [&](const Constraint& c) { return c.holds(a); })) return a;
    }
    return std::nullopt;
}

std::vector<Constraint> minimal_unsat_core(std::span<const Constraint> cs) {
    if (satisfiable(cs)) throw std::invalid_argument("minimal_unsat_core: constraint set is satisfiable");
    const std::size_t n = cs.size();
    std::vector<std::size_t> idx;
    std::vector<Constraint> subset;
    for (std::size_t k = 1; k <= n; ++k) {
        // Lexicographic k-combinations of [0, n).
        idx.resize(k);
        for (std::size_t j = 0; j < k; ++j) idx[j] = j;
        while (true) {
            subset.clear();
            for (auto j : idx) subset.push_back(cs[j]);
            if (!satisfiable(subset)) return subset;
            std::size_t pos = k;
            while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw std::logic_error("minimal_unsat_core: unreachable");
}

std::string classify_type(const OutcomeTuple& o) {
    static const StateVector psi = build_psi_1234();
    if (o.size() != 4 || psi.amplitude(o).is_zero())
        throw std::invalid_argument("classify_type: " + o.to_string() + " is not a supported outcome");
    auto digits = o.digits();
    std::sort(digits.begin(), digits.end());
    const std::string key = BasisKet(digits).to_string();
    std::string base;
    if (key == "0000" || key == "2222") return "I";
    if (key == "0022") return "II";
    if (key == "0233") base = "III";
    else if (key == "0112") base = "IV";
    else if (key == "0013") base = "V";
    else if (key == "1223") base = "VI";
    else throw std::logic_error("classify_type: unexpected digit multiset " + key);
    // Sub-families follow the reference tables: +i components are A for
    // types III-V, while type VI lists its -i components first.
    const bool plus_i = *as_phase(psi.amplitude(o)) == Phase::i();
    const bool family_a = base == "VI" ? !plus_i : plus_i;
    return base + (family_a ? "-A" : "-B");
}

std::string base_type(const std::string& label) { return label.substr(0, label.find('-')); }

ParadoxReport verify_paradox(const StateVector& s, const OutcomeTuple& o) {
    if (s.n_sites() != kLhvSites) throw std::invalid_argument("verify_paradox: expects a four-site state");
    ParadoxReport r;
    r.outcome = o;
    r.rows = table_for_outcome(s, o);
    r.probability = joint_z_probability(s, o);
    try {
        r.type_label = classify_type(o);
    } catch (const std::invalid_argument&) {
        r.type_label = "unclassified";
    }
    for (const auto& row : r.rows) {
        if (row.basic) r.constraints_basic.push_back(Constraint::from_eigenword(*row.basic, row.residual.sites));
        if (row.extended)
            r.constraints_extended.push_back(Constraint::from_eigenword(*row.extended, row.residual.sites));
    }
    r.constraint_set = r.constraints_basic;
    for (const auto& c : r.constraints_extended)
        if (std::find(r.constraint_set.begin(), r.constraint_set.end(), c) == r.constraint_set.end())
            r.constraint_set.push_back(c);
    r.witness = satisfiable(r.constraint_set);
    r.satisfiable = r.witness.has_value();
    if (!r.satisfiable) r.minimal_core = minimal_unsat_core(r.constraint_set);
    r.extended_only_unsat = !satisfiable(r.constraints_extended).has_value();
    return r;
}

DavnReport verify_davn(const StateVector& s, unsigned workers) {
    DavnReport d;
    const auto support = z_support(s);
    d.support_size = support.size();
    d.reports.resize(support.size());

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, support.size())));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(support.size());
    auto work = [&] {
        for (std::size_t n; (n = next.fetch_add(1)) < support.size();) {
            try {
                d.reports[n] = verify_paradox(s, support[n]);
            } catch (...) {
                errors[n] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    d.probability_sum = Rational(0);
    std::vector<std::pair<std::string, std::size_t>> counts = {{"I", 0},  {"II", 0}, {"III", 0},
                                                               {"IV", 0}, {"V", 0},  {"VI", 0}};
    for (const auto& r : d.reports) {
        d.probability_sum += r.probability;
        if (r.satisfiable) d.failing_outcomes.push_back(r.outcome);
        for (auto& [label, count] : counts)
            if (label == base_type(r.type_label)) ++count;
    }
    d.type_counts = std::move(counts);
    d.davn = d.probability_sum == Rational(1) && d.failing_outcomes.empty() && !d.reports.empty();
    return d;
}

}  // namespace davn
