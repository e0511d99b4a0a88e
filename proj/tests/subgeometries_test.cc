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

#include <set>

#include "doctest.h"
#include "oracle.h"
#include "veldkamp/pauli.h"
#include "veldkamp/subgeometries.h"

using namespace veldkamp;

namespace {

std::vector<Hyperplane> of_type(QubitCount n, HyperplaneType t) {
    std::vector<Hyperplane> out;
    for (auto &h : enumerate_hyperplanes(n).hyperplanes) {
        if (h.kind().type() == t) {
            out.push_back(h);
        }
    }
    return out;
}

// +1 or -1 such that the matrix product of the three operators is that
// multiple of the identity.
int oracle_product_sign(const std::string &a, const std::string &b, const std::string &c) {
    oracle::Matrix p = oracle::mul(oracle::mul(oracle::matrix(a), oracle::matrix(b)), oracle::matrix(c));
    oracle::Matrix id = oracle::matrix(oracle::identity_label(static_cast<int>(a.size())));
    if (p == id) {
        return 1;
    }
    REQUIRE(p == oracle::negate(id));
    return -1;
}

}  // namespace

TEST_SUITE("subgeometries") {
    TEST_CASE("the ten grids are Mermin squares") {
        auto grids = of_type(QubitCount(2), HyperplaneType::kQuadricArf0);
        REQUIRE(grids.size() == 10);
        for (const auto &h : grids) {
            MerminSquare sq = extract_grid(h);
            std::set<std::uint64_t> cells;
            int negatives = 0;
            for (int i = 0; i < 3; i++) {
                const auto &r = sq.cells[i];
                int row = oracle_product_sign(r[0].label(), r[1].label(), r[2].label());
                int col = oracle_product_sign(sq.cells[0][i].label(), sq.cells[1][i].label(), sq.cells[2][i].label());
                CHECK(row == sq.row_signs[i]);
                CHECK(col == sq.column_signs[i]);
                negatives += (row < 0) + (col < 0);
                for (const auto &cell : r) {
                    CHECK(cell.sign() == 1);
                    CHECK(h.kind().contains(cell.vector().bits()));
                    cells.insert(cell.vector().bits());
                }
            }
            CHECK(cells.size() == 9);
            CHECK(negatives == sq.negative_line_count);
            CHECK(negatives % 2 == 1);
        }
        CHECK_THROWS_AS(extract_grid(Hyperplane(HyperplaneKind::parse("H_YI"))), Error);
        CHECK_THROWS_AS(extract_grid(Hyperplane(HyperplaneKind::parse("C_XI"))), Error);
    }

    TEST_CASE("grids are GQ(2,1) and G_2 is GQ(2,2)") {
        QubitCount n(2);
        Geometry g(n);
        CHECK(check_gq(PointSet::all_points(n), g.lines()) == GQParameters{2, 2});
        for (const auto &h : of_type(n, HyperplaneType::kQuadricArf0)) {
            auto lines = g.lines_within(h.points());
            CHECK(lines.size() == 6);
            CHECK(check_gq(h.points(), lines) == GQParameters{2, 1});
        }
    }

    TEST_CASE("ovoids are maximal anticommuting quintuples") {
        QubitCount n(2);
        Geometry g(n);
        auto ovoids = of_type(n, HyperplaneType::kQuadricArf1);
        REQUIRE(ovoids.size() == 6);
        for (const auto &h : ovoids) {
            auto ops = extract_ovoid(h);
            CHECK(ops.size() == 5);
            for (size_t i = 0; i < ops.size(); i++) {
                for (size_t j = i + 1; j < ops.size(); j++) {
                    CHECK_FALSE(oracle::commute(ops[i].label(), ops[j].label()));
                }
            }
            CHECK(g.lines_within(h.points()).empty());
            CHECK(is_maximal_anticommuting_set(ops));
        }
        std::vector<SignedPauli> pair{SignedPauli::parse("XI"), SignedPauli::parse("ZI")};
        CHECK_FALSE(is_maximal_anticommuting_set(pair));
        CHECK_THROWS_AS(extract_ovoid(Hyperplane(HyperplaneKind::parse("H_II"))), Error);
    }

    TEST_CASE("non-quadrangles are rejected with a witness") {
        QubitCount n(2);
        Geometry g(n);
        PointSet perp = g.perp_set(encode("XX"));
        auto lines = g.lines_within(perp);
        auto result = try_check_gq(perp, lines);
        REQUIRE(std::holds_alternative<GqWitness>(result));
        CHECK_FALSE(std::get<GqWitness>(result).reason.empty());
        try {
            check_gq(perp, lines);
            FAIL("expected NotAGeneralizedQuadrangle");
        } catch (const NotAGeneralizedQuadrangle &e) {
            CHECK(e.code() == ErrorCode::kNotAGeneralizedQuadrangle);
        }
        // G_3 is not a GQ: a point off a line can see all of it.
        Geometry g3{QubitCount(3)};
        CHECK(std::holds_alternative<GqWitness>(try_check_gq(PointSet::all_points(QubitCount(3)), g3.lines())));
    }

    TEST_CASE("elliptic quadrics of G_3 are GQ(2,4)") {
        QubitCount n(3);
        Geometry g(n);
        auto quadrics = of_type(n, HyperplaneType::kQuadricArf1);
        REQUIRE(quadrics.size() == 28);
        for (const auto &h : quadrics) {
            auto lines = g.lines_within(h.points());
            CHECK(h.size() == 27);
            CHECK(lines.size() == 45);
            CHECK(check_gq(h.points(), lines) == GQParameters{2, 4});
        }
        for (const auto &h : of_type(n, HyperplaneType::kQuadricArf0)) {
            CHECK(std::holds_alternative<GqWitness>(try_check_gq(h.points(), g.lines_within(h.points()))));
        }
    }

    TEST_CASE("sections of a GQ(2,4)") {
        QubitCount n(3);
        for (const auto &h : of_type(n, HyperplaneType::kQuadricArf1)) {
            SectionSummary s = gq24_sections(h);
            CHECK(s.base_parameters == GQParameters{2, 4});
            CHECK(s.sections.size() == 126);
            CHECK(s.only_expected_shapes());
            std::uint64_t total = 0;
            for (const auto &[key, count] : s.histogram) {
                CHECK((key == std::pair<std::uint64_t, std::string>{15, "GQ(2,2)"} ||
                       key == std::pair<std::uint64_t, std::string>{11, "point-perp"}));
                total += count;
            }
            CHECK(total == 126);
            // The 27 points each give one point-perp, as C_p for p in H and H_(h+p) alike.
            CHECK(s.histogram.at({11, "point-perp"}) == 54);
            CHECK(s.histogram.at({15, "GQ(2,2)"}) == 72);
            for (const auto &sec : s.sections) {
                if (sec.shape == SectionShape::kPointPerp) {
                    REQUIRE(sec.perp_point.has_value());
                    CHECK(h.kind().contains(*sec.perp_point));
                }
            }
        }
        CHECK_THROWS_AS(gq24_sections(Hyperplane(HyperplaneKind::parse("H_III"))), Error);
    }

    TEST_CASE("Wootters set") {
        for (int nv = 1; nv <= 4; nv++) {
            QubitCount n(nv);
            Hyperplane w = wootters_selfdual(n);
            CHECK(w.kind().key() == "H_" + std::string(nv, 'Y'));
            std::uint64_t expected = 0;
            for (const auto &label : oracle::all_labels(nv)) {
                int wt = oracle::weight(label);
                bool even = wt > 0 && wt % 2 == 0;
                expected += even;
                CHECK(w.kind().contains(encode(label).bits()) == even);
            }
            CHECK(w.size() == expected);
            CHECK(w.points() == even_weight_points(n));
        }
        QubitCount three(3);
        Hyperplane w = wootters_selfdual(three);
        CHECK(w.kind().type() == HyperplaneType::kQuadricArf1);
        CHECK(check_gq(w.points(), Geometry(three).lines_within(w.points())) == GQParameters{2, 4});
    }
}
