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

#include "veldkamp/subgeometries.h"

#include <algorithm>

namespace veldkamp {

namespace {

void require_quadric(const Hyperplane &h, int n, int arf_value, const char *what) {
    if (h.qubits().value() != n || !h.kind().is_quadric() || *h.kind().arf() != arf_value) {
        fail(ErrorCode::kPrecondition, std::string(what) + " needs an arf-" + std::to_string(arf_value) +
                                           " quadric of G_" + std::to_string(n) + ", got " + h.kind().key());
    }
}

bool disjoint(const Line &a, const Line &b) {
    return std::none_of(a.points.begin(), a.points.end(), [&](std::uint64_t v) { return b.contains(v); });
}

std::optional<std::uint64_t> common_point(const Line &a, const Line &b) {
    std::optional<std::uint64_t> found;
    for (std::uint64_t v : a.points) {
        if (b.contains(v)) {
            if (found) {
                return std::nullopt;
            }
            found = v;
        }
    }
    return found;
}

int product_sign(const std::array<SignedPauli, 3> &ops) {
    SignedPauli product = multiply(multiply(ops[0], ops[1]), ops[2]);
    if (!product.vector().is_zero()) {
        fail(ErrorCode::kInternal, "grid line does not multiply to +/- identity");
    }
    return product.sign();
}

}  // namespace

MerminSquare extract_grid(const Hyperplane &h) {
    require_quadric(h, 2, 0, "extract_grid");
    QubitCount n = h.qubits();
    Geometry g(n);
    std::vector<Line> lines = g.lines_within(h.points());
    if (lines.size() != 6 || h.size() != 9) {
        fail(ErrorCode::kInternal, "arf-0 quadric of G_2 is not a 9-point, 6-line grid");
    }
    std::sort(lines.begin(), lines.end());
    std::vector<Line> row_class, column_class;
    for (const Line &l : lines) {
        (l == lines[0] || disjoint(l, lines[0]) ? row_class : column_class).push_back(l);
    }
    if (row_class.size() != 3 || column_class.size() != 3) {
        fail(ErrorCode::kInternal, "grid lines do not split into two parallel classes");
    }

    auto plus = [&](std::uint64_t v) { return SignedPauli(1, PauliVector(n, v)); };
    MerminSquare square{h.kind(),
                        {{{plus(1), plus(1), plus(1)}, {plus(1), plus(1), plus(1)}, {plus(1), plus(1), plus(1)}}},
                        {row_class[0], row_class[1], row_class[2]},
                        {column_class[0], column_class[1], column_class[2]},
                        {},
                        {},
                        0};
    for (int r = 0; r < 3; r++) {
        for (int c = 0; c < 3; c++) {
            auto v = common_point(square.rows[r], square.columns[c]);
            if (!v) {
                fail(ErrorCode::kInternal, "grid row and column do not meet in exactly one point");
            }
            square.cells[r][c] = plus(*v);
        }
    }
    for (int i = 0; i < 3; i++) {
        square.row_signs[i] = product_sign(square.cells[i]);
        square.column_signs[i] = product_sign({square.cells[0][i], square.cells[1][i], square.cells[2][i]});
        square.negative_line_count += (square.row_signs[i] < 0) + (square.column_signs[i] < 0);
    }
    return square;
}

std::vector<SignedPauli> extract_ovoid(const Hyperplane &h) {
    require_quadric(h, 2, 1, "extract_ovoid");
    std::vector<SignedPauli> out;
    h.points().for_each([&](std::uint64_t v) { out.emplace_back(1, PauliVector(h.qubits(), v)); });
    for (size_t i = 0; i < out.size(); i++) {
        for (size_t j = i + 1; j < out.size(); j++) {
            if (symplectic_form(out[i].vector(), out[j].vector()) != 1) {
                fail(ErrorCode::kInternal, "ovoid points " + out[i].label() + ", " + out[j].label() + " commute");
            }
        }
    }
    return out;
}

bool is_maximal_anticommuting_set(std::span<const SignedPauli> points) {
    if (points.empty()) {
        return false;
    }
    QubitCount n = points[0].vector().qubits();
    for (std::uint64_t x = 1; x < n.space_size(); x++) {
        bool member = false;
        bool anticommutes_with_all = true;
        for (const auto &p : points) {
            member = member || p.vector().bits() == x;
            anticommutes_with_all = anticommutes_with_all && gf2::form(p.vector().bits(), x) == 1;
        }
        if (!member && anticommutes_with_all) {
            return false;
        }
    }
    return true;
}

std::variant<GQParameters, GqWitness> try_check_gq(const PointSet &points, std::span<const Line> lines) {
    QubitCount n = points.qubits();
    if (points.empty() || lines.empty()) {
        return GqWitness{"empty incidence structure", std::nullopt, std::nullopt, -1};
    }
    std::vector<std::uint64_t> degree(n.space_size(), 0);
    std::vector<PointSet> collinear;
    collinear.reserve(n.space_size());
    for (std::uint64_t v = 0; v < n.space_size(); v++) {
        collinear.emplace_back(n);
    }
    for (const Line &l : lines) {
        for (std::uint64_t v : l.points) {
            if (!points.contains(v)) {
                return GqWitness{"line has a point outside the point set", v, l, -1};
            }
            degree[v]++;
        }
        for (std::uint64_t v : l.points) {
            for (std::uint64_t w : l.points) {
                if (v != w) {
                    collinear[v].insert(w);
                }
            }
        }
    }
    // Lines here are triples, so s = 2 throughout.
    const int s = 2;
    std::optional<std::uint64_t> lines_per_point;
    std::optional<GqWitness> problem;
    points.for_each([&](std::uint64_t v) {
        if (problem) {
            return;
        }
        if (!lines_per_point) {
            lines_per_point = degree[v];
        } else if (degree[v] != *lines_per_point) {
            problem = GqWitness{"points lie on different numbers of lines", v, std::nullopt, -1};
        }
    });
    if (problem) {
        return *problem;
    }
    if (*lines_per_point == 0) {
        return GqWitness{"points lie on no lines", std::nullopt, std::nullopt, -1};
    }
    for (const Line &l : lines) {
        std::optional<GqWitness> violation;
        points.for_each([&](std::uint64_t v) {
            if (violation || l.contains(v)) {
                return;
            }
            int hits = collinear[v].contains(l.points[0]) + collinear[v].contains(l.points[1]) +
                       collinear[v].contains(l.points[2]);
            if (hits != 1) {
                violation = GqWitness{"point off a line is not collinear with exactly one of its points", v, l, hits};
            }
        });
        if (violation) {
            return *violation;
        }
    }
    return GQParameters{s, static_cast<int>(*lines_per_point) - 1};
}

GQParameters check_gq(const PointSet &points, std::span<const Line> lines) {
    auto result = try_check_gq(points, lines);
    if (auto *w = std::get_if<GqWitness>(&result)) {
        throw NotAGeneralizedQuadrangle(*w);
    }
    return std::get<GQParameters>(result);
}

const char *to_string(SectionShape shape) {
    switch (shape) {
        case SectionShape::kSubquadrangle:
            return "GQ(2,2)";
        case SectionShape::kPointPerp:
            return "point-perp";
        case SectionShape::kOther:
            return "other";
    }
    return "?";
}

bool SectionSummary::only_expected_shapes() const {
    return std::all_of(sections.begin(), sections.end(), [](const Section &s) {
        if (!s.satisfies_h1) {
            return false;
        }
        if (s.shape == SectionShape::kSubquadrangle) {
            return s.size == 15 && s.gq == GQParameters{2, 2};
        }
        return s.shape == SectionShape::kPointPerp && s.size == 11;
    });
}

SectionSummary gq24_sections(const Hyperplane &h) {
    require_quadric(h, 3, 1, "gq24_sections");
    QubitCount n = h.qubits();
    Geometry g(n);
    std::vector<Line> gq_lines = g.lines_within(h.points());
    SectionSummary summary{h.kind(), check_gq(h.points(), gq_lines), {}, {}};

    for (std::uint64_t i = 0; i < hyperplane_count(n); i++) {
        HyperplaneKind other = HyperplaneKind::from_index(n, i);
        if (other == h.kind()) {
            continue;
        }
        PointSet section = h.points() & other.points();
        Section record{other, section.size(), true, SectionShape::kOther, std::nullopt, std::nullopt};
        std::vector<Line> inside;
        for (const Line &l : gq_lines) {
            int hits = section.contains(l.points[0]) + section.contains(l.points[1]) + section.contains(l.points[2]);
            record.satisfies_h1 = record.satisfies_h1 && (hits == 1 || hits == 3);
            if (hits == 3) {
                inside.push_back(l);
            }
        }
        if (record.size == 15) {
            auto result = try_check_gq(section, inside);
            if (auto *params = std::get_if<GQParameters>(&result); params && *params == GQParameters{2, 2}) {
                record.gq = *params;
                record.shape = SectionShape::kSubquadrangle;
            }
        } else if (record.size == 11) {
            section.for_each([&](std::uint64_t x) {
                if (record.perp_point) {
                    return;
                }
                PointSet perp(n);
                perp.insert(x);
                for (const Line &l : gq_lines) {
                    if (l.contains(x)) {
                        for (std::uint64_t v : l.points) {
                            perp.insert(v);
                        }
                    }
                }
                if (perp == section) {
                    record.perp_point = x;
                }
            });
            if (record.perp_point) {
                record.shape = SectionShape::kPointPerp;
            }
        }
        summary.histogram[{record.size, to_string(record.shape)}]++;
        summary.sections.push_back(std::move(record));
    }
    return summary;
}

Hyperplane wootters_selfdual(QubitCount n) {
    return quadric_hyperplane(encode(std::string(n.value(), 'Y')));
}

PointSet even_weight_points(QubitCount n) {
    PointSet s(n);
    for (std::uint64_t x = 1; x < n.space_size(); x++) {
        // A qubit is non-identity iff either of its two bits is set.
        std::uint64_t occupied = (x | (x >> 1)) & gf2::kEvenBits;
        if (gf2::parity(occupied) == 0) {
            s.insert(x);
        }
    }
    return s;
}

}  // namespace veldkamp
