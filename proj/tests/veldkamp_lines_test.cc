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

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "doctest.h"
#include "veldkamp/pauli.h"
#include "veldkamp/veldkamp_lines.h"

using namespace veldkamp;

namespace {

// Brute-force census from materialized point sets: for every unordered pair,
// the third member is found by searching the catalog for the set-level
// complement of the symmetric difference.
struct NaiveCensus {
    std::map<VeldkampLineType, std::uint64_t> lines;
    std::map<VeldkampLineType, std::set<std::uint64_t>> core_sizes;
};

NaiveCensus naive_census(QubitCount n) {
    HyperplaneCatalog catalog = enumerate_hyperplanes(n);
    const auto &hs = catalog.hyperplanes;
    std::map<std::vector<std::uint64_t>, size_t> by_points;
    for (size_t i = 0; i < hs.size(); i++) {
        auto w = hs[i].points().words();
        by_points[{w.begin(), w.end()}] = i;
    }
    NaiveCensus out;
    std::set<std::array<size_t, 3>> seen;
    for (size_t i = 0; i < hs.size(); i++) {
        for (size_t j = i + 1; j < hs.size(); j++) {
            PointSet third = (hs[i].points() ^ hs[j].points()).complement();
            auto w = third.words();
            auto it = by_points.find({w.begin(), w.end()});
            REQUIRE(it != by_points.end());
            std::array<size_t, 3> key{i, j, it->second};
            std::sort(key.begin(), key.end());
            if (!seen.insert(key).second) {
                continue;
            }
            VeldkampLineType t = line_type(hs[key[0]].kind(), hs[key[1]].kind(), hs[key[2]].kind());
            out.lines[t]++;
            out.core_sizes[t].insert((hs[i].points() & hs[j].points()).size());
        }
    }
    return out;
}

}  // namespace

TEST_SUITE("veldkamp_lines") {
    TEST_CASE("census at two and three qubits") {
        struct Expected {
            int n;
            std::uint64_t counts[5];
            std::uint64_t cores[5];
        };
        const Expected rows[] = {{2, {15, 20, 45, 60, 15}, {3, 3, 5, 3, 1}},
                                 {3, {315, 336, 630, 1008, 378}, {15, 15, 19, 15, 11}}};
        for (const auto &e : rows) {
            QubitCount n(e.n);
            CensusTable table = census(n);
            CHECK(table.all_match());
            CHECK(table.closure_violations == 0);
            for (int t = 0; t < 5; t++) {
                const CensusRow &row = table.rows[t];
                CHECK(row.line_count == e.counts[t]);
                CHECK(row.core_size == e.cores[t]);
                CHECK(row.pair_count == 3 * e.counts[t]);
                CHECK(row.core_size_violations == 0);
            }
            CHECK(table.total_lines == veldkamp_line_total(n));
        }
    }

    TEST_CASE("census agrees with a set-level brute force") {
        for (int n = 2; n <= 3; n++) {
            QubitCount q(n);
            NaiveCensus naive = naive_census(q);
            CensusTable table = census(q);
            for (VeldkampLineType t : kAllVeldkampLineTypes) {
                CHECK(naive.lines[t] == table.row(t).line_count);
                CHECK(naive.core_sizes[t] == std::set<std::uint64_t>{core_size_formula(q, t)});
            }
        }
    }

    TEST_CASE("census at four qubits follows the formulas") {
        QubitCount n(4);
        CensusTable table = census(n, {2, 0});
        CHECK(table.all_match());
        const std::uint64_t expected[] = {5355, 5440, 9180, 16320, 7140};
        for (int t = 0; t < 5; t++) {
            CHECK(table.rows[t].line_count == expected[t]);
        }
    }

    TEST_CASE("census limits") {
        CHECK_THROWS_AS(census(QubitCount(1)), Error);
        CHECK_THROWS_AS(census(QubitCount(6)), Error);
        CHECK_THROWS_AS(census(QubitCount(4), {1, 3}), Error);
    }

    TEST_CASE("type names and compositions") {
        for (VeldkampLineType t : kAllVeldkampLineTypes) {
            CHECK(parse_veldkamp_line_type(to_string(t)) == t);
            auto c = composition(t);
            CHECK(c[0] + c[1] + c[2] == 3);
        }
        CHECK(composition_string(VeldkampLineType::kCH0H1) == "1/1/1");
        CHECK_THROWS_AS(parse_veldkamp_line_type("CHH"), Error);
    }

    TEST_CASE("individual lines") {
        QubitCount n(2);
        Hyperplane a(HyperplaneKind::parse("C_XI"));
        Hyperplane b(HyperplaneKind::parse("C_IX"));
        VeldkampLine line = veldkamp_line(a, b);
        CHECK(classify_line(line) == VeldkampLineType::kCccIsotropic);
        CHECK(line.members()[2] == HyperplaneKind::parse("C_XX"));
        CHECK(line.core().size() == 3);
        CHECK(core_span_dimension(line) == 2);

        VeldkampLine hyp = veldkamp_line(Hyperplane(HyperplaneKind::parse("C_ZI")), Hyperplane(HyperplaneKind::parse("C_XI")));
        CHECK(classify_line(hyp) == VeldkampLineType::kCccHyperbolic);
        CHECK_THROWS_AS(veldkamp_line(a, a), Error);
        CHECK_THROWS_AS(veldkamp_line(Hyperplane(HyperplaneKind::parse("C_X")), Hyperplane(HyperplaneKind::parse("C_Z"))),
                        Error);
    }

    TEST_CASE("hyperbolic cores are copies of the smaller geometry") {
        for (int n = 2; n <= 4; n++) {
            std::string z = "Z" + std::string(n - 1, 'I'), x = "X" + std::string(n - 1, 'I');
            VeldkampLine line = veldkamp_line(Hyperplane(HyperplaneKind::perp(encode(z))),
                                              Hyperplane(HyperplaneKind::perp(encode(x))));
            CoreEmbedding e = hyperbolic_core_embedding(line);
            CHECK(e.is_isomorphism());
            CHECK(e.image_points == QubitCount(n).space_size() / 4 - 1);
            CHECK(core_span_dimension(line) == 2 * (n - 1));
        }
        VeldkampLine iso = veldkamp_line(Hyperplane(HyperplaneKind::parse("C_XI")), Hyperplane(HyperplaneKind::parse("C_IX")));
        CHECK_THROWS_AS(hyperbolic_core_embedding(iso), Error);
    }

    TEST_CASE("(V2) fails at two qubits with a pentad in a grid") {
        V2Report r = verify_v2(QubitCount(2), V2Mode::kExhaustive);
        CHECK_FALSE(r.holds());
        CHECK(r.pairs_checked == 31 * 30 / 2);
        REQUIRE(r.perp_pair_witness.has_value());
        const V2Witness &w = *r.perp_pair_witness;
        CHECK(w.a.is_perp());
        CHECK(w.b.is_perp());
        CHECK(symplectic_form(w.a.p(), w.b.p()) == 0);
        CHECK(w.c.type() == HyperplaneType::kQuadricArf0);
        CHECK(w.core.size() == 3);
        CHECK(w.c_cap_a == 5);
        CHECK(w.c_cap_b == 5);
        // The core really is inside the grid.
        for (std::uint64_t v : w.core) {
            CHECK(w.c.contains(v));
        }
    }

    TEST_CASE("(V2) holds from three qubits on") {
        V2Report r3 = verify_v2(QubitCount(3), V2Mode::kExhaustive);
        CHECK(r3.holds());
        CHECK(r3.pairs_checked == 127 * 126 / 2);
        V2Report sampled = verify_v2(QubitCount(5), V2Mode::kSampled, 11, 300);
        CHECK(sampled.holds());
        CHECK(sampled.pairs_checked == 300);
        CHECK(sampled.seed == 11);
        CHECK_THROWS_AS(verify_v2(QubitCount(5), V2Mode::kExhaustive), Error);
        CHECK_THROWS_AS(verify_v2(QubitCount(1), V2Mode::kExhaustive), Error);
    }
}
