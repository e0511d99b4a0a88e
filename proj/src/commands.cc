// Copyright 2026 The Veldkamp Authors
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

#include "veldkamp/commands.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "veldkamp/config.h"
#include "veldkamp/pauli.h"

namespace veldkamp {

const char *to_string(OutputFormat format) {
    switch (format) {
        case OutputFormat::kText:
            return "text";
        case OutputFormat::kJson:
            return "json";
        case OutputFormat::kCsv:
            return "csv";
        case OutputFormat::kDot:
            return "dot";
    }
    return "?";
}

OutputFormat parse_output_format(std::string_view text) {
    for (OutputFormat f : {OutputFormat::kText, OutputFormat::kJson, OutputFormat::kCsv, OutputFormat::kDot}) {
        if (text == to_string(f)) {
            return f;
        }
    }
    fail(ErrorCode::kInvalidArgument, "unknown format '" + std::string(text) + "' (expected text, json, csv or dot)");
}

int exit_code_for(ErrorCode code) {
    return code == ErrorCode::kInternal ? 1 : 2;
}

namespace {

using Clock = std::chrono::steady_clock;

QubitCount require_qubits(const CommandOptions &opts, int lo, int hi) {
    if (opts.qubits == 0) {
        fail(ErrorCode::kInvalidArgument, opts.verb + " needs --qubits");
    }
    hi = std::min(hi, max_qubits());
    if (opts.qubits < lo || opts.qubits > hi) {
        fail(ErrorCode::kOutOfRange, opts.verb + " supports " + std::to_string(lo) + " <= n <= " +
                                         std::to_string(hi) + ", got n = " + std::to_string(opts.qubits));
    }
    return QubitCount(opts.qubits);
}

// Formats each verb can be rendered in; checked before any work is done.
std::vector<OutputFormat> allowed_formats(const CommandOptions &opts) {
    using F = OutputFormat;
    if (opts.verb == "census" || opts.verb == "hyperplanes") {
        return {F::kText, F::kJson, F::kCsv};
    }
    if (opts.verb == "export") {
        if (opts.what == "graph") {
            return {F::kText, F::kJson, F::kDot};
        }
        return {F::kText, F::kJson, F::kCsv};
    }
    return {F::kText, F::kJson};
}

// Table-1 style rows measured from an enumerated catalog.
Json hyperplane_table(const HyperplaneCatalog &catalog, bool &ok) {
    QubitCount n = catalog.n;
    std::map<HyperplaneType, std::uint64_t> count, size_misses;
    std::set<std::vector<std::uint64_t>> distinct;
    for (const auto &h : catalog.hyperplanes) {
        HyperplaneType t = h.kind().type();
        count[t]++;
        if (h.size() != hyperplane_size_formula(n, t)) {
            size_misses[t]++;
        }
        auto words = h.points().words();
        distinct.emplace(words.begin(), words.end());
    }
    Json rows = Json::array();
    ok = distinct.size() == catalog.hyperplanes.size();
    for (HyperplaneType t : {HyperplaneType::kPerp, HyperplaneType::kQuadricArf0, HyperplaneType::kQuadricArf1}) {
        bool match = count[t] == hyperplane_copies_formula(n, t) && size_misses[t] == 0;
        ok = ok && match;
        rows.push_back(Json{{"type", to_string(t)},
                            {"size", hyperplane_size_formula(n, t)},
                            {"count", count[t]},
                            {"formula_value", hyperplane_copies_formula(n, t)},
                            {"size_mismatches", size_misses[t]},
                            {"match", match}});
    }
    return Json{{"rows", rows},
                {"total", catalog.hyperplanes.size()},
                {"distinct_point_sets", distinct.size()},
                {"match", ok}};
}

Json geometry_counts(const Geometry &g, bool &ok) {
    QubitCount n = g.qubits();
    std::vector<std::uint64_t> degree(n.space_size(), 0);
    std::uint64_t lines = 0;
    g.for_each_line([&](const Line &l) {
        lines++;
        for (std::uint64_t v : l.points) {
            degree[v]++;
        }
    });
    bool regular = std::all_of(degree.begin() + 1, degree.end(),
                               [&](std::uint64_t d) { return d == g.lines_per_point(); });
    ok = lines == g.line_count() && regular;
    return Json{{"points", g.point_count()},
                {"lines", lines},
                {"line_formula", g.line_count()},
                {"lines_per_point", g.lines_per_point()},
                {"every_point_on_that_many_lines", regular}};
}

// Exhaustive (H1) search over all subsets of P, each result matched
// against the catalog.
Json exhaustive_discovery(const Geometry &g, const HyperplaneCatalog &catalog, bool &ok) {
    QubitCount n = g.qubits();
    std::vector<PointSet> sets = exhaustive_h1_sets(g, true);
    PointSet all = PointSet::all_points(n);
    std::uint64_t classified = 0;
    bool includes_all = false;
    std::set<std::uint64_t> seen;
    for (const auto &s : sets) {
        if (s == all) {
            includes_all = true;
            continue;
        }
        HyperplaneKind k = classify(s, g);
        if (catalog.at(k).points() == s) {
            classified++;
            seen.insert(k.index());
        }
    }
    ok = includes_all && sets.size() == catalog.hyperplanes.size() + 1 && classified + 1 == sets.size() &&
         seen.size() == catalog.hyperplanes.size();
    return Json{{"subsets_checked", std::uint64_t{1} << n.point_count()},
                {"h1_sets", sets.size()},
                {"includes_all_points", includes_all},
                {"classified", classified},
                {"distinct_hyperplanes", seen.size()},
                {"match", ok}};
}

// ---- individual verbs -------------------------------------------------------

struct Outcome {
    Json results;
    bool passed = true;
    std::optional<std::uint64_t> seed;
};

Outcome run_census(const CommandOptions &opts) {
    QubitCount n = require_qubits(opts, 1, census_max_qubits());
    Outcome out;
    Geometry g(n);
    bool counts_ok = false, table_ok = false;
    out.results["geometry"] = geometry_counts(g, counts_ok);
    out.results["hyperplanes"] = hyperplane_table(enumerate_hyperplanes(n), table_ok);
    out.passed = counts_ok && table_ok;
    if (n.value() >= 2) {
        CensusTable table = census(n);
        out.results["veldkamp"] = census_json(table);
        out.passed = out.passed && table.all_match() && table.total_lines == veldkamp_line_total(n);
    } else {
        out.results["veldkamp"] = nullptr;
    }
    return out;
}

Outcome run_hyperplanes(const CommandOptions &opts) {
    QubitCount n = require_qubits(opts, 1, kMaxCatalogQubits);
    if (opts.exhaustive && n.value() > 2) {
        fail(ErrorCode::kPrecondition, "--exhaustive subset search is limited to n <= 2");
    }
    Outcome out;
    HyperplaneCatalog catalog = enumerate_hyperplanes(n);
    bool table_ok = false;
    out.results["summary"] = hyperplane_table(catalog, table_ok);
    out.passed = table_ok;
    if (opts.exhaustive) {
        bool ok = false;
        out.results["exhaustive"] = exhaustive_discovery(Geometry(n), catalog, ok);
        out.passed = out.passed && ok;
    }
    Json list = Json::array();
    for (const auto &h : catalog.hyperplanes) {
        list.push_back(hyperplane_json(h));
    }
    out.results["hyperplanes"] = list;
    return out;
}

HyperplaneKind parse_key_for(const CommandOptions &opts, const std::string &key, const char *flag) {
    if (key.empty()) {
        fail(ErrorCode::kInvalidArgument, opts.verb + " needs " + flag);
    }
    HyperplaneKind k = HyperplaneKind::parse(key);
    if (opts.qubits != 0 && k.qubits().value() != opts.qubits) {
        fail(ErrorCode::kDimensionMismatch, std::string(flag) + " " + key + " is not a hyperplane of G_" +
                                                std::to_string(opts.qubits));
    }
    return k;
}

Outcome run_veldkamp(const CommandOptions &opts) {
    HyperplaneKind a = parse_key_for(opts, opts.a, "--a");
    HyperplaneKind b = parse_key_for(opts, opts.b, "--b");
    if (a.qubits() != b.qubits()) {
        fail(ErrorCode::kDimensionMismatch, "--a and --b live in different spaces");
    }
    CommandOptions checked = opts;
    checked.qubits = a.qubits().value();
    QubitCount n = require_qubits(checked, 2, kAbsoluteMaxQubits);
    if (a == b) {
        fail(ErrorCode::kInvalidArgument, "--a and --b must be different hyperplanes");
    }
    Outcome out;
    VeldkampLine line = veldkamp_line(Hyperplane(a), Hyperplane(b));
    out.results["line"] = veldkamp_line_json(line);
    HyperplaneKind c = boxplus(a, b);
    PointSet set_level = boxplus(a.points(), b.points());
    bool closure = set_level == c.points() && boxplus(a, c) == b && boxplus(b, c) == a;
    out.results["third_member"] = c.key();
    out.results["set_level_boxplus_agrees"] = closure;
    out.results["qubits"] = n.value();
    out.passed = closure;
    return out;
}

Json orbit_json(const std::vector<HyperplaneKind> &orbit, bool &ok) {
    HyperplaneType t = orbit.front().type();
    std::uint64_t expected = hyperplane_copies_formula(orbit.front().qubits(), t);
    bool uniform = std::all_of(orbit.begin(), orbit.end(), [&](const HyperplaneKind &k) { return k.type() == t; });
    ok = uniform && orbit.size() == expected;
    Json members = Json::array();
    for (const auto &k : orbit) {
        members.push_back(k.key());
    }
    return Json{{"type", to_string(t)},
                {"size", orbit.size()},
                {"formula_value", expected},
                {"single_type", uniform},
                {"match", ok},
                {"members", members}};
}

Outcome run_orbits(const CommandOptions &opts) {
    QubitCount n = require_qubits(opts, 1, kMaxGraphQubits);
    Outcome out;
    Json orbits = Json::array();
    if (!opts.hyperplane.empty()) {
        bool ok = false;
        orbits.push_back(orbit_json(orbit_hyperplanes(parse_key_for(opts, opts.hyperplane, "--hyperplane")), ok));
        out.passed = ok;
    } else {
        auto all = hyperplane_orbits(n);
        for (const auto &orbit : all) {
            bool ok = false;
            orbits.push_back(orbit_json(orbit, ok));
            out.passed = out.passed && ok;
        }
        out.passed = out.passed && all.size() == 3;
    }
    out.results["orbits"] = orbits;
    return out;
}

PauliVector parse_label_for(const CommandOptions &opts, QubitCount n, const std::string &text, const char *flag) {
    if (text.empty()) {
        fail(ErrorCode::kInvalidArgument, opts.verb + " needs " + flag);
    }
    return encode(text, n);
}

Outcome run_swap(const CommandOptions &opts) {
    QubitCount n = require_qubits(opts, 3, kAbsoluteMaxQubits);
    PauliVector a = parse_label_for(opts, n, opts.a, "--a");
    PauliVector b = parse_label_for(opts, n, opts.b, "--b");
    PauliVector f = parse_label_for(opts, n, opts.f, "--f");
    SymplecticMap m = find_swap(a, b, f);
    Outcome out;
    out.results["a"] = HyperplaneKind::quadric(a).key();
    out.results["b"] = HyperplaneKind::quadric(b).key();
    out.results["f"] = HyperplaneKind::quadric(f).key();
    out.results["case"] = m.word().size() == 1 ? "single transvection" : "two transvections";
    out.results["map"] = swap_json(m);
    bool symplectic = is_symplectic(m.matrix());
    out.results["symplectic"] = symplectic;
    out.passed = symplectic;
    return out;
}

Outcome run_mermin(const CommandOptions &opts) {
    require_qubits(opts, 2, 2);
    QubitCount n(2);
    std::vector<HyperplaneKind> grids;
    for (std::uint64_t i = 0; i < hyperplane_count(n); i++) {
        HyperplaneKind k = HyperplaneKind::from_index(n, i);
        if (k.type() == HyperplaneType::kQuadricArf0) {
            grids.push_back(k);
        }
    }
    if (opts.index && (*opts.index < 0 || *opts.index >= static_cast<int>(grids.size()))) {
        fail(ErrorCode::kOutOfRange, "--index must lie in [0, " + std::to_string(grids.size() - 1) + "]");
    }
    Outcome out;
    Json squares = Json::array();
    for (size_t i = 0; i < grids.size(); i++) {
        if (opts.index && static_cast<int>(i) != *opts.index) {
            continue;
        }
        MerminSquare square = extract_grid(Hyperplane(grids[i]));
        Json j = mermin_json(square);
        j["index"] = i;
        out.passed = out.passed && square.negative_line_count % 2 == 1;
        squares.push_back(j);
    }
    out.results["squares"] = squares;
    return out;
}

Json quadric_gq_json(const Hyperplane &h, const Geometry &g, GQParameters expected, bool &ok) {
    std::vector<Line> lines = g.lines_within(h.points());
    auto result = try_check_gq(h.points(), lines);
    Json j{{"key", h.kind().key()}, {"points", h.size()}, {"lines", lines.size()}};
    if (auto *p = std::get_if<GQParameters>(&result)) {
        j["gq"] = gq_parameters_json(*p);
        ok = *p == expected;
    } else {
        j["gq"] = nullptr;
        j["failure"] = std::get<GqWitness>(result).reason;
        ok = false;
    }
    return j;
}

Outcome run_gq(const CommandOptions &opts) {
    QubitCount n = require_qubits(opts, 2, 3);
    Geometry g(n);
    Outcome out;
    if (n.value() == 2) {
        auto whole = try_check_gq(PointSet::all_points(n), g.lines());
        bool whole_ok = std::holds_alternative<GQParameters>(whole) &&
                        std::get<GQParameters>(whole) == GQParameters{2, 2};
        out.results["geometry"] = whole_ok ? gq_parameters_json(std::get<GQParameters>(whole)) : Json(nullptr);
        out.passed = whole_ok;
        Json grids = Json::array(), ovoids = Json::array();
        for (std::uint64_t i = 0; i < hyperplane_count(n); i++) {
            Hyperplane h(HyperplaneKind::from_index(n, i));
            if (h.kind().type() == HyperplaneType::kQuadricArf0) {
                bool ok = false;
                grids.push_back(quadric_gq_json(h, g, {2, 1}, ok));
                out.passed = out.passed && ok;
            } else if (h.kind().type() == HyperplaneType::kQuadricArf1) {
                auto ops = extract_ovoid(h);
                size_t contained = g.lines_within(h.points()).size();
                bool maximal = is_maximal_anticommuting_set(ops);
                Json points = Json::array();
                for (const auto &op : ops) {
                    points.push_back(op.to_string());
                }
                ovoids.push_back(Json{{"key", h.kind().key()},
                                      {"points", points},
                                      {"contained_lines", contained},
                                      {"pairwise_anticommuting", true},
                                      {"maximal", maximal}});
                out.passed = out.passed && ops.size() == 5 && contained == 0 && maximal;
            }
        }
        out.results["grids"] = grids;
        out.results["ovoids"] = ovoids;
        return out;
    }

    Json quadrics = Json::array();
    for (std::uint64_t i = 0; i < hyperplane_count(n); i++) {
        Hyperplane h(HyperplaneKind::from_index(n, i));
        if (h.kind().type() == HyperplaneType::kQuadricArf1) {
            bool ok = false;
            quadrics.push_back(quadric_gq_json(h, g, {2, 4}, ok));
            out.passed = out.passed && ok && h.size() == 27 && quadrics.back()["lines"] == 45;
        }
    }
    out.results["quadrics"] = quadrics;
    HyperplaneKind base = opts.hyperplane.empty() ? wootters_selfdual(n).kind()
                                                  : parse_key_for(opts, opts.hyperplane, "--hyperplane");
    SectionSummary summary = gq24_sections(Hyperplane(base));
    out.results["sections"] = section_summary_json(summary, opts.all);
    out.passed = out.passed && summary.only_expected_shapes();
    return out;
}

Outcome run_wootters(const CommandOptions &opts) {
    QubitCount n = require_qubits(opts, 1, kMaxCatalogQubits);
    Hyperplane h = wootters_selfdual(n);
    bool match = h.points() == even_weight_points(n);
    Outcome out;
    out.results["hyperplane"] = hyperplane_json(h);
    out.results["even_weight_match"] = match;
    out.passed = match;
    if (n.value() == 3) {
        bool ok = false;
        out.results["gq"] = quadric_gq_json(h, Geometry(n), {2, 4}, ok);
        out.passed = out.passed && ok;
    }
    return out;
}

Outcome run_export(const CommandOptions &opts) {
    Outcome out;
    if (opts.what == "graph") {
        QubitCount n = require_qubits(opts, 1, kMaxGraphQubits);
        out.results = collinearity_json(Geometry(n));
    } else if (opts.what == "lines") {
        QubitCount n = require_qubits(opts, 1, kMaxGraphQubits);
        Json lines = Json::array();
        Geometry(n).for_each_line([&](const Line &l) { lines.push_back(line_json(n, l)); });
        out.results = Json{{"n", n.value()}, {"lines", lines}};
    } else if (opts.what == "hyperplanes") {
        QubitCount n = require_qubits(opts, 1, kMaxCatalogQubits);
        Json list = Json::array();
        for (const auto &h : enumerate_hyperplanes(n).hyperplanes) {
            list.push_back(hyperplane_json(h));
        }
        out.results = Json{{"n", n.value()}, {"hyperplanes", list}};
    } else {
        fail(ErrorCode::kInvalidArgument, "export needs --what graph, lines or hyperplanes");
    }
    return out;
}

// ---- verify ----------------------------------------------------------------

class Scoreboard {
   public:
    void add(const std::string &id, const std::string &statement, bool pass, Json detail) {
        claims_.push_back(Json{{"id", id}, {"statement", statement}, {"status", pass ? "pass" : "fail"},
                               {"detail", std::move(detail)}});
        passed_ = passed_ && pass;
    }
    void skip(const std::string &id, const std::string &statement, const std::string &reason) {
        claims_.push_back(
            Json{{"id", id}, {"statement", statement}, {"status", "skip"}, {"detail", Json{{"reason", reason}}}});
    }
    // Records the claim as failed if the check throws an internal error.
    void guarded(const std::string &id, const std::string &statement, const std::function<void()> &check) {
        try {
            check();
        } catch (const Error &e) {
            if (e.code() != ErrorCode::kInternal) {
                throw;
            }
            add(id, statement, false, Json{{"error", e.what()}});
        }
    }
    Json claims() const {
        return claims_;
    }
    bool passed() const {
        return passed_;
    }

   private:
    Json claims_ = Json::array();
    bool passed_ = true;
};

Outcome run_verify(const CommandOptions &opts) {
    QubitCount n = require_qubits(opts, 1, census_max_qubits());
    const int nv = n.value();
    const std::uint64_t limit = opts.limit;
    std::mt19937_64 rng(opts.seed);
    bool sampled = false;
    Scoreboard board;

    Geometry g(n);
    HyperplaneCatalog catalog = enumerate_hyperplanes(n);
    const auto &hs = catalog.hyperplanes;
    const std::uint64_t total = hs.size();

    board.guarded("geometry-counts", "G_n has 4^n-1 points and (4^n-1)(4^(n-1)-1)/3 lines, 4^(n-1)-1 through each point",
                  [&] {
                      bool ok = false;
                      Json detail = geometry_counts(g, ok);
                      board.add("geometry-counts",
                                "G_n has 4^n-1 points and (4^n-1)(4^(n-1)-1)/3 lines, 4^(n-1)-1 through each point",
                                ok, detail);
                  });

    board.guarded("hyperplane-census", "hyperplane types, sizes and counts follow the closed forms", [&] {
        bool ok = false;
        Json detail = hyperplane_table(catalog, ok);
        board.add("hyperplane-census", "hyperplane types, sizes and counts follow the closed forms", ok, detail);
    });

    {
        const std::string id = "h1-and-contained-lines";
        const std::string statement =
            "every C_p and H_p meets each line in 1 or 3 points, contains (4^(n-1)-1)(3|H|-|P|)/6 lines, "
            "and has |H| >= |P|/3";
        std::uint64_t h1_failures = 0, count_failures = 0, bound_failures = 0;
        for (const auto &h : hs) {
            std::uint64_t inside = 0;
            bool h1 = true;
            const PointSet &s = h.points();
            g.for_each_line([&](const Line &l) {
                int hits = s.contains(l.points[0]) + s.contains(l.points[1]) + s.contains(l.points[2]);
                h1 = h1 && (hits == 1 || hits == 3);
                inside += hits == 3;
            });
            h1_failures += !h1;
            // G_1 has no lines, so only (H1) says anything there.
            if (nv >= 2) {
                auto formula = contained_line_formula(n, h.size());
                count_failures += !formula || *formula != inside;
                bound_failures += 3 * h.size() < n.point_count();
            }
        }
        board.add(id, statement, h1_failures == 0 && count_failures == 0 && bound_failures == 0,
                  Json{{"hyperplanes_checked", total},
                       {"h1_failures", h1_failures},
                       {"contained_line_mismatches", count_failures},
                       {"size_bound_failures", bound_failures}});
    }

    if (nv >= 2) {
        std::uint64_t tight = 0;
        for (const auto &h : hs) {
            tight += 3 * h.size() == n.point_count();
        }
        if (nv == 2) {
            board.add("size-bound-attained", "the six ovoids of G_2 have exactly |P|/3 = 5 points", tight == 6,
                      Json{{"hyperplanes_of_size_P_over_3", tight}});
        }
    }

    {
        std::uint64_t containments = 0;
        for (std::uint64_t i = 0; i < total; i++) {
            for (std::uint64_t j = 0; j < total; j++) {
                if (i != j && hs[i].points().is_subset_of(hs[j].points())) {
                    containments++;
                }
            }
        }
        bool applicable = nv >= 2;
        if (applicable) {
            board.add("antichain", "no hyperplane is contained in another", containments == 0,
                      Json{{"pairs_checked", total * (total - 1)}, {"containments", containments}});
        } else {
            board.skip("antichain", "no hyperplane is contained in another",
                       "G_1 has no lines, so the empty set is a hyperplane inside every other");
        }
    }

    {
        std::uint64_t failures = 0;
        for (const auto &h : hs) {
            failures += !(classify(h.points(), g) == h.kind());
        }
        board.add("classification-round-trip", "classify recovers C_p or H_p from every hyperplane's point set",
                  failures == 0, Json{{"hyperplanes_checked", total}, {"failures", failures}});
        const std::string statement =
            "brute force over all subsets of P finds exactly the C_p, the H_p and P itself";
        if (nv == 1 || (nv == 2 && opts.exhaustive)) {
            board.guarded("exhaustive-classification", statement, [&] {
                bool ok = false;
                Json detail = exhaustive_discovery(g, catalog, ok);
                board.add("exhaustive-classification", statement, ok, detail);
            });
        } else if (nv == 2) {
            board.skip("exhaustive-classification", statement, "pass --exhaustive to search all 2^15 subsets");
        } else {
            board.skip("exhaustive-classification", statement, "subset search is limited to n <= 2");
        }
    }

    if (nv >= 2) {
        const std::string statement =
            "A boxplus B is the third hyperplane of the formula, A ∩ (A boxplus B) = A ∩ B and "
            "A boxplus (A boxplus B) = B";
        std::uint64_t failures = 0, checked = 0;
        auto check = [&](std::uint64_t i, std::uint64_t j) {
            checked++;
            HyperplaneKind c = boxplus(hs[i].kind(), hs[j].kind());
            const PointSet &cp = hs[c.index()].points();
            bool ok = boxplus(hs[i].points(), hs[j].points()) == cp &&
                      (hs[i].points() & cp) == (hs[i].points() & hs[j].points()) &&
                      boxplus(hs[i].kind(), c) == hs[j].kind();
            failures += !ok;
        };
        bool exhaustive = nv <= 4;
        if (exhaustive) {
            for (std::uint64_t i = 0; i < total; i++) {
                for (std::uint64_t j = i + 1; j < total; j++) {
                    check(i, j);
                }
            }
        } else {
            sampled = true;
            for (std::uint64_t s = 0; s < limit; s++) {
                std::uint64_t i = rng() % total, j = rng() % (total - 1);
                check(i, j >= i ? j + 1 : j);
            }
        }
        board.add("boxplus-algebra", statement, failures == 0,
                  Json{{"mode", exhaustive ? "exhaustive" : "sampled"}, {"pairs_checked", checked},
                       {"failures", failures}});

        board.guarded("veldkamp-census", "the five Veldkamp line types occur with the closed-form counts and core sizes",
                      [&] {
                          CensusTable table = census(n);
                          board.add("veldkamp-census",
                                    "the five Veldkamp line types occur with the closed-form counts and core sizes",
                                    table.all_match() && table.total_lines == veldkamp_line_total(n),
                                    census_json(table));
                      });

        {
            VeldkampLine line = veldkamp_line(hs[HyperplaneKind::perp(PauliVector(n, std::uint64_t{2} << (2 * nv - 2))).index()],
                                              hs[HyperplaneKind::perp(PauliVector(n, std::uint64_t{1} << (2 * nv - 2))).index()]);
            CoreEmbedding e = hyperbolic_core_embedding(line);
            board.add("hyperbolic-core", "the core of a CCC-hyperbolic line is a copy of G_(n-1)", e.is_isomorphism(),
                      Json{{"line", veldkamp_line_json(line)["members"]},
                           {"image_points", e.image_points},
                           {"lines_mapped", e.lines_mapped},
                           {"core_lines", e.core_lines}});
        }

        if (nv == 2) {
            V2Report r = verify_v2(n, V2Mode::kExhaustive);
            bool pentad = r.perp_pair_witness && r.perp_pair_witness->c_cap_a == 5 && r.perp_pair_witness->c_cap_b == 5;
            board.add("v2-fails-for-two-qubits",
                      "for n = 2 two commuting perp-sets share a core that also lies in a grid meeting each of "
                      "them in a pentad",
                      !r.holds() && pentad, v2_report_json(r));
        } else {
            V2Mode mode = nv <= kMaxExhaustiveV2Qubits ? V2Mode::kExhaustive : V2Mode::kSampled;
            sampled = sampled || mode == V2Mode::kSampled;
            V2Report r = verify_v2(n, mode, opts.seed, limit);
            board.add("v2", "for n >= 3 the only hyperplanes containing A ∩ B are A, B and A boxplus B", r.holds(),
                      v2_report_json(r));
        }
    } else {
        board.skip("boxplus-algebra", "boxplus algebra", "needs n >= 2");
    }

    {
        const std::string statement = "t_p C_a = C_(t_p a) and t_p H_a = H_(a + (1 + Q_a(p)) p) agree with elementwise images";
        std::uint64_t checked = 0, failures = 0;
        auto check = [&](std::uint64_t p, std::uint64_t i) {
            checked++;
            Transvection t(PauliVector(n, p));
            HyperplaneKind formula = t.apply(hs[i].kind());
            failures += !(hs[formula.index()].points() == image(t, hs[i].points()));
        };
        std::uint64_t cases = n.point_count() * total;
        if (cases <= 100000) {
            for (std::uint64_t p = 1; p < n.space_size(); p++) {
                for (std::uint64_t i = 0; i < total; i++) {
                    check(p, i);
                }
            }
        }
        if (nv >= 3) {
            sampled = true;
            for (std::uint64_t s = 0; s < limit; s++) {
                check(1 + rng() % n.point_count(), rng() % total);
            }
        }
        board.add("transvection-action", statement, failures == 0,
                  Json{{"exhaustive_cases", cases <= 100000 ? cases : 0}, {"cases_checked", checked},
                       {"failures", failures}});

        std::uint64_t non_symplectic = 0;
        for (std::uint64_t p = 1; p < n.space_size(); p++) {
            non_symplectic += !is_symplectic(transvection_matrix(PauliVector(n, p)));
        }
        board.add("transvections-symplectic", "every transvection matrix preserves the symplectic form",
                  non_symplectic == 0, Json{{"transvections", n.point_count()}, {"failures", non_symplectic}});
    }

    board.guarded("orbits", "the hyperplanes split into three orbits: perp-sets, arf-0 quadrics, arf-1 quadrics", [&] {
        auto orbits = hyperplane_orbits(n);
        bool ok = orbits.size() == 3;
        Json detail = Json::array();
        for (const auto &orbit : orbits) {
            bool orbit_ok = false;
            Json j = orbit_json(orbit, orbit_ok);
            j.erase("members");
            detail.push_back(j);
            ok = ok && orbit_ok;
        }
        board.add("orbits", "the hyperplanes split into three orbits: perp-sets, arf-0 quadrics, arf-1 quadrics", ok,
                  Json{{"orbits", detail}});
    });

    if (nv >= 3) {
        const std::string statement =
            "find_swap yields a verified involution swapping H_a and H_b and fixing H_f for every valid triple";
        std::uint64_t checked = 0, failures = 0;
        auto check = [&](std::uint64_t a, std::uint64_t b, std::uint64_t f) {
            checked++;
            try {
                SymplecticMap m = find_swap(PauliVector(n, a), PauliVector(n, b), PauliVector(n, f));
                failures += !is_symplectic(m.matrix());
            } catch (const Error &e) {
                if (e.code() != ErrorCode::kInternal) {
                    throw;
                }
                failures++;
            }
        };
        bool exhaustive = nv == 3;
        const std::uint64_t size = n.space_size();
        if (exhaustive) {
            for (std::uint64_t a = 0; a < size; a++) {
                for (std::uint64_t b = 0; b < size; b++) {
                    if (a == b || gf2::q0(a) != gf2::q0(b)) {
                        continue;
                    }
                    for (std::uint64_t f = 0; f < size; f++) {
                        if (f != a && f != b) {
                            check(a, b, f);
                        }
                    }
                }
            }
        } else {
            sampled = true;
            while (checked < limit) {
                std::uint64_t a = rng() % size, b = rng() % size, f = rng() % size;
                if (a != b && f != a && f != b && gf2::q0(a) == gf2::q0(b)) {
                    check(a, b, f);
                }
            }
        }
        board.add("find-swap", statement, failures == 0,
                  Json{{"mode", exhaustive ? "exhaustive" : "sampled"}, {"triples_checked", checked},
                       {"failures", failures}});

        if (nv <= 4) {
            const std::string tt = "Sp(2n,2) acts 2-transitively on each Arf class of quadrics";
            Json detail = Json::array();
            bool ok = true;
            for (int arf = 0; arf <= 1; arf++) {
                std::vector<std::uint64_t> cls;
                for (std::uint64_t p = 0; p < size; p++) {
                    if (gf2::q0(p) == arf) {
                        cls.push_back(p);
                    }
                }
                std::uint64_t m = cls.size();
                std::uint64_t orbit = ordered_pair_orbit_size(PauliVector(n, cls[0]), PauliVector(n, cls[1]));
                std::uint64_t constructed = 0, construction_failures = 0;
                for (std::uint64_t s = 0; s < std::min<std::uint64_t>(limit, 1000); s++) {
                    std::uint64_t i1 = rng() % m, j1 = rng() % (m - 1), i2 = rng() % m, j2 = rng() % (m - 1);
                    j1 += j1 >= i1;
                    j2 += j2 >= i2;
                    constructed++;
                    try {
                        map_ordered_pair(PauliVector(n, cls[i1]), PauliVector(n, cls[j1]), PauliVector(n, cls[i2]),
                                         PauliVector(n, cls[j2]));
                    } catch (const Error &e) {
                        if (e.code() != ErrorCode::kInternal) {
                            throw;
                        }
                        construction_failures++;
                    }
                }
                sampled = true;
                bool class_ok = orbit == m * (m - 1) && construction_failures == 0;
                ok = ok && class_ok;
                detail.push_back(Json{{"arf", arf},
                                      {"quadrics", m},
                                      {"ordered_pair_orbit", orbit},
                                      {"ordered_pairs", m * (m - 1)},
                                      {"constructed_maps", constructed},
                                      {"construction_failures", construction_failures}});
            }
            board.add("two-transitivity", tt, ok, Json{{"classes", detail}});
        }
    }

    if (nv == 2) {
        std::uint64_t aut = count_graph_automorphisms(collinearity_graph(g));
        board.add("automorphisms", "the collinearity graph of G_2 has |Sp(4,2)| = 720 automorphisms", aut == 720,
                  Json{{"automorphisms", aut}});

        CommandOptions sub = opts;
        sub.index.reset();
        Outcome mermin = run_mermin(sub);
        board.add("mermin-squares", "all 10 grids of G_2 are Mermin squares with an odd number of negative lines",
                  mermin.passed && mermin.results["squares"].size() == 10,
                  Json{{"squares", mermin.results["squares"].size()}});

        Outcome gq = run_gq(sub);
        board.add("quadrangles-two-qubits",
                  "G_2 is a GQ(2,2), its arf-0 quadrics are GQ(2,1) grids and its arf-1 quadrics are maximal "
                  "ovoids of five anticommuting operators",
                  gq.passed, Json{{"grids", gq.results["grids"].size()}, {"ovoids", gq.results["ovoids"].size()}});
    }

    if (nv == 3) {
        const std::string statement =
            "each of the 28 arf-1 quadrics of G_3 is a GQ(2,4) whose hyperplane sections are GQ(2,2)s or "
            "point-perps";
        std::uint64_t quadrics = 0, failures = 0;
        Json histogram = Json::object();
        for (const auto &h : hs) {
            if (h.kind().type() != HyperplaneType::kQuadricArf1) {
                continue;
            }
            quadrics++;
            bool ok = false;
            Json j = quadric_gq_json(h, g, {2, 4}, ok);
            SectionSummary summary = gq24_sections(h);
            ok = ok && h.size() == 27 && j["lines"] == 45 && summary.only_expected_shapes();
            failures += !ok;
            if (quadrics == 1) {
                histogram = section_summary_json(summary, false)["histogram"];
            }
        }
        board.add("gq24", statement, quadrics == 28 && failures == 0,
                  Json{{"quadrics", quadrics}, {"failures", failures}, {"sections_of_first", histogram}});
    }

    {
        Hyperplane w = wootters_selfdual(n);
        bool ok = w.points() == even_weight_points(n);
        Json detail{{"key", w.kind().key()}, {"size", w.size()}};
        if (nv == 3) {
            bool gq_ok = false;
            detail["gq"] = quadric_gq_json(w, g, {2, 4}, gq_ok);
            ok = ok && gq_ok;
        }
        board.add("wootters", "H_(Y...Y) consists of the operators with an even number of non-identity factors", ok,
                  detail);
    }

    Outcome out;
    out.results["claims"] = board.claims();
    std::uint64_t pass = 0, fail_count = 0, skip = 0;
    for (const auto &c : board.claims()) {
        const std::string &status = c["status"].get_ref<const std::string &>();
        pass += status == "pass";
        fail_count += status == "fail";
        skip += status == "skip";
    }
    out.results["summary"] = Json{{"pass", pass}, {"fail", fail_count}, {"skip", skip}};
    out.passed = board.passed();
    if (sampled) {
        out.seed = opts.seed;
    }
    return out;
}

// ---- text rendering ----------------------------------------------------------

std::string scalar_text(const Json &j) {
    if (j.is_string()) {
        return j.get<std::string>();
    }
    if (j.is_null()) {
        return "-";
    }
    return j.dump();
}

bool all_scalars(const Json &j) {
    return std::all_of(j.begin(), j.end(), [](const Json &e) { return e.is_primitive(); });
}

void generic_text(std::ostringstream &out, const Json &j, int indent) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto &[key, value] : j.items()) {
            if (value.is_primitive() || (value.is_array() && all_scalars(value))) {
                out << pad << key << ":";
                if (value.is_array()) {
                    for (const auto &e : value) {
                        out << ' ' << scalar_text(e);
                    }
                } else {
                    out << ' ' << scalar_text(value);
                }
                out << '\n';
            } else {
                out << pad << key << ":\n";
                generic_text(out, value, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto &e : j) {
            if (e.is_primitive() || (e.is_array() && all_scalars(e))) {
                out << pad << "-";
                if (e.is_array()) {
                    for (const auto &x : e) {
                        out << ' ' << scalar_text(x);
                    }
                } else {
                    out << ' ' << scalar_text(e);
                }
                out << '\n';
            } else {
                out << pad << "-\n";
                generic_text(out, e, indent + 2);
            }
        }
    } else {
        out << pad << scalar_text(j) << '\n';
    }
}

std::string pad_right(const std::string &s, size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string sign_text(const Json &j) {
    return j.get<int>() < 0 ? "-" : "+";
}

void census_text(std::ostringstream &out, const Json &r) {
    const Json &g = r["geometry"];
    out << "points " << g["points"] << ", lines " << g["lines"] << ", lines per point " << g["lines_per_point"]
        << "\n\nhyperplanes\n";
    out << pad_right("type", 16) << pad_right("size", 10) << pad_right("count", 10) << pad_right("formula", 10)
        << "match\n";
    for (const auto &row : r["hyperplanes"]["rows"]) {
        out << pad_right(scalar_text(row["type"]), 16) << pad_right(scalar_text(row["size"]), 10)
            << pad_right(scalar_text(row["count"]), 10) << pad_right(scalar_text(row["formula_value"]), 10)
            << (row["match"].get<bool>() ? "yes" : "NO") << '\n';
    }
    out << "total " << r["hyperplanes"]["total"] << ", distinct point sets " << r["hyperplanes"]["distinct_point_sets"]
        << '\n';
    if (r["veldkamp"].is_null()) {
        out << "\nveldkamp lines: none (n = 1)\n";
        return;
    }
    const Json &v = r["veldkamp"];
    out << "\nveldkamp lines\n";
    out << pad_right("type", 16) << pad_right("C/H0/H1", 10) << pad_right("core", 8) << pad_right("count", 10)
        << pad_right("formula", 10) << pad_right("pairs", 10) << "match\n";
    for (const auto &row : v["rows"]) {
        out << pad_right(scalar_text(row["type"]), 16) << pad_right(scalar_text(row["composition"]), 10)
            << pad_right(scalar_text(row["core_size"]), 8) << pad_right(scalar_text(row["count"]), 10)
            << pad_right(scalar_text(row["formula_value"]), 10) << pad_right(scalar_text(row["pair_count"]), 10)
            << (row["match"].get<bool>() ? "yes" : "NO") << '\n';
    }
    out << "total " << v["total_lines"] << " of " << v["expected_total"] << ", closure violations "
        << v["closure_violations"] << '\n';
}

void hyperplanes_text(std::ostringstream &out, const Json &r) {
    for (const auto &row : r["summary"]["rows"]) {
        out << pad_right(scalar_text(row["type"]), 14) << " size " << row["size"] << "  count " << row["count"]
            << " (formula " << row["formula_value"] << ")\n";
    }
    if (r.contains("exhaustive")) {
        out << "\nexhaustive search:\n";
        generic_text(out, r["exhaustive"], 2);
    }
    out << '\n';
    for (const auto &h : r["hyperplanes"]) {
        out << pad_right(scalar_text(h["key"]), 4 + 2 * h["p"].get<std::string>().size())
            << pad_right(scalar_text(h["type"]), 14) << pad_right(scalar_text(h["size"]), 6);
        for (const auto &p : h["points"]) {
            out << ' ' << scalar_text(p);
        }
        out << '\n';
    }
}

void mermin_text(std::ostringstream &out, const Json &r) {
    bool first = true;
    for (const auto &sq : r["squares"]) {
        if (!first) {
            out << '\n';
        }
        first = false;
        out << "square " << sq["index"] << " from " << scalar_text(sq["source"]) << ", negative lines "
            << sq["negative_lines"] << (sq["odd"].get<bool>() ? " (odd)" : " (EVEN)") << '\n';
        for (int row = 0; row < 3; row++) {
            out << "  ";
            for (int col = 0; col < 3; col++) {
                out << pad_right(scalar_text(sq["cells"][row][col]), 4);
            }
            out << "| " << sign_text(sq["row_signs"][row]) << "I\n";
        }
        out << "  ";
        for (int col = 0; col < 3; col++) {
            out << pad_right(sign_text(sq["column_signs"][col]) + "I", 4);
        }
        out << '\n';
    }
}

void verify_text(std::ostringstream &out, const Json &r) {
    for (const auto &c : r["claims"]) {
        std::string status = c["status"].get<std::string>();
        for (auto &ch : status) {
            ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        }
        out << '[' << status << "] " << scalar_text(c["id"]) << ": " << scalar_text(c["statement"]) << '\n';
        generic_text(out, c["detail"], 8);
    }
    out << "\n" << r["summary"]["pass"] << " passed, " << r["summary"]["fail"] << " failed, " << r["summary"]["skip"]
        << " skipped\n";
}

std::string graph_dot(const Json &r) {
    std::ostringstream out;
    out << "graph G" << r["n"].get<int>() << " {\n";
    for (const auto &v : r["vertices"]) {
        out << "  " << v.get<std::string>() << ";\n";
    }
    for (const auto &e : r["edges"]) {
        out << "  " << e[0].get<std::string>() << " -- " << e[1].get<std::string>() << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string census_csv_from(const Report &report) {
    std::ostringstream out;
    out << "n,type,composition,core_size,count\n";
    const Json &v = report.body["results"]["veldkamp"];
    if (v.is_null()) {
        return out.str();
    }
    for (const auto &row : v["rows"]) {
        out << report.qubits << ',' << row["type"].get<std::string>() << ',' << row["composition"].get<std::string>()
            << ',' << row["core_size"] << ',' << row["count"] << '\n';
    }
    return out.str();
}

std::string hyperplanes_csv_from(const Json &list, int n) {
    std::ostringstream out;
    out << "n,kind,p,arf,size\n";
    for (const auto &h : list) {
        out << n << ',' << h["kind"].get<std::string>() << ',' << h["p"].get<std::string>() << ','
            << (h["arf"].is_null() ? "" : h["arf"].dump()) << ',' << h["size"] << '\n';
    }
    return out.str();
}

std::string lines_csv_from(const Json &lines) {
    std::ostringstream out;
    out << "a,b,c\n";
    for (const auto &l : lines) {
        out << l[0].get<std::string>() << ',' << l[1].get<std::string>() << ',' << l[2].get<std::string>() << '\n';
    }
    return out.str();
}

}  // namespace

Report run_command(const CommandOptions &opts) {
    const auto &verbs = command_verbs();
    if (std::find(verbs.begin(), verbs.end(), opts.verb) == verbs.end()) {
        fail(ErrorCode::kInvalidArgument, "unknown verb '" + opts.verb + "'");
    }
    auto formats = allowed_formats(opts);
    if (std::find(formats.begin(), formats.end(), opts.format) == formats.end()) {
        fail(ErrorCode::kInvalidArgument,
             std::string("format ") + to_string(opts.format) + " is not available for " + opts.verb);
    }
    if (opts.limit == 0) {
        fail(ErrorCode::kInvalidArgument, "--limit must be positive");
    }

    auto start = Clock::now();
    Outcome outcome;
    if (opts.verb == "census") {
        outcome = run_census(opts);
    } else if (opts.verb == "hyperplanes") {
        outcome = run_hyperplanes(opts);
    } else if (opts.verb == "veldkamp") {
        outcome = run_veldkamp(opts);
    } else if (opts.verb == "orbits") {
        outcome = run_orbits(opts);
    } else if (opts.verb == "swap") {
        outcome = run_swap(opts);
    } else if (opts.verb == "mermin") {
        outcome = run_mermin(opts);
    } else if (opts.verb == "gq") {
        outcome = run_gq(opts);
    } else if (opts.verb == "wootters") {
        outcome = run_wootters(opts);
    } else if (opts.verb == "verify") {
        outcome = run_verify(opts);
    } else {
        outcome = run_export(opts);
    }

    Report report;
    report.verb = opts.verb;
    report.qubits = opts.qubits;
    if (report.qubits == 0 && opts.verb == "veldkamp") {
        report.qubits = outcome.results["qubits"].get<int>();
    }
    Json command{{"verb", opts.verb}, {"qubits", report.qubits}};
    if (opts.exhaustive) {
        command["exhaustive"] = true;
    }
    for (const auto &[flag, value] : {std::pair{"a", &opts.a}, std::pair{"b", &opts.b}, std::pair{"f", &opts.f},
                                      std::pair{"hyperplane", &opts.hyperplane}, std::pair{"what", &opts.what}}) {
        if (!value->empty()) {
            command[flag] = *value;
        }
    }
    if (opts.index) {
        command["index"] = *opts.index;
    }
    if (outcome.seed) {
        command["limit"] = opts.limit;
    }
    report.body["command"] = command;
    report.body["n"] = report.qubits;
    report.body["seed"] = outcome.seed ? Json(*outcome.seed) : Json(nullptr);
    report.body["results"] = std::move(outcome.results);
    report.body["passed"] = outcome.passed;
    report.passed = outcome.passed;
    report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

std::string render(const Report &report, OutputFormat format) {
    const Json &r = report.body["results"];
    switch (format) {
        case OutputFormat::kJson:
            return report.body.dump(2) + "\n";
        case OutputFormat::kDot:
            if (report.verb == "export" && r.contains("edges")) {
                return graph_dot(r);
            }
            break;
        case OutputFormat::kCsv:
            if (report.verb == "census") {
                return census_csv_from(report);
            }
            if (report.verb == "hyperplanes" || (report.verb == "export" && r.contains("hyperplanes"))) {
                return hyperplanes_csv_from(r["hyperplanes"], report.qubits);
            }
            if (report.verb == "export" && r.contains("lines")) {
                return lines_csv_from(r["lines"]);
            }
            break;
        case OutputFormat::kText: {
            std::ostringstream out;
            out << report.verb << " n=" << report.qubits;
            if (!report.body["seed"].is_null()) {
                out << " seed=" << report.body["seed"];
            }
            out << "\n\n";
            if (report.verb == "census") {
                census_text(out, r);
            } else if (report.verb == "hyperplanes") {
                hyperplanes_text(out, r);
            } else if (report.verb == "mermin") {
                mermin_text(out, r);
            } else if (report.verb == "verify") {
                verify_text(out, r);
            } else {
                generic_text(out, r, 0);
            }
            out << "\nresult: " << (report.passed ? "pass" : "FAIL") << '\n';
            return out.str();
        }
    }
    fail(ErrorCode::kInvalidArgument,
         std::string("format ") + to_string(format) + " is not available for " + report.verb);
}

}  // namespace veldkamp
