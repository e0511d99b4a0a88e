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

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "veldkamp/error.h"
#include "veldkamp/geometry.h"
#include "veldkamp/hyperplanes.h"
#include "veldkamp/pauli.h"

namespace veldkamp {

/// A two-qubit grid laid out as a 3x3 array. Rows are one parallel class of
/// the grid's lines and columns the other; every cell carries a + sign.
struct MerminSquare {
    HyperplaneKind source;
    std::array<std::array<SignedPauli, 3>, 3> cells;
    std::array<Line, 3> rows;
    std::array<Line, 3> columns;
    /// Sign of the product of each row/column (left to right, top to bottom).
    std::array<int, 3> row_signs;
    std::array<int, 3> column_signs;
    int negative_line_count = 0;
};

/// Requires an arf-0 quadric of G_2. The row class is the one holding the
/// lexicographically smallest contained line.
MerminSquare extract_grid(const Hyperplane &h);

/// Requires an arf-1 quadric of G_2: five pairwise anticommuting operators.
std::vector<SignedPauli> extract_ovoid(const Hyperplane &h);

/// True iff no point of P outside `points` anticommutes with all of them.
bool is_maximal_anticommuting_set(std::span<const SignedPauli> points);

/// Order (s, t) of a generalized quadrangle: s + 1 points per line, t + 1
/// lines per point.
struct GQParameters {
    int s = 0;
    int t = 0;
    auto operator<=>(const GQParameters &) const = default;
};

/// What went wrong when an incidence structure is not a GQ.
struct GqWitness {
    std::string reason;
    std::optional<std::uint64_t> point;
    std::optional<Line> line;
    int collinear_on_line = -1;
};

class NotAGeneralizedQuadrangle : public Error {
   public:
    explicit NotAGeneralizedQuadrangle(GqWitness witness)
        : Error(ErrorCode::kNotAGeneralizedQuadrangle, "not a generalized quadrangle: " + witness.reason),
          witness_(std::move(witness)) {
    }
    const GqWitness &witness() const noexcept {
        return witness_;
    }

   private:
    GqWitness witness_;
};

/// Checks constant line size, constant point degree, and that every point
/// off a line is collinear with exactly one point of it. Collinearity is
/// taken from the given lines. Throws NotAGeneralizedQuadrangle.
GQParameters check_gq(const PointSet &points, std::span<const Line> lines);

/// Non-throwing form of check_gq.
std::variant<GQParameters, GqWitness> try_check_gq(const PointSet &points, std::span<const Line> lines);

enum class SectionShape {
    kSubquadrangle,  // 15 points forming a GQ(2,2)
    kPointPerp,      // 11 points: a point and everything collinear with it
    kOther,
};

const char *to_string(SectionShape shape);

struct Section {
    HyperplaneKind other;
    std::uint64_t size = 0;
    bool satisfies_h1 = false;  // inside the GQ(2,4)
    SectionShape shape = SectionShape::kOther;
    std::optional<GQParameters> gq;
    std::optional<std::uint64_t> perp_point;
};

struct SectionSummary {
    HyperplaneKind base;
    GQParameters base_parameters;
    std::vector<Section> sections;
    /// Keyed by (section size, shape name).
    std::map<std::pair<std::uint64_t, std::string>, std::uint64_t> histogram;

    bool only_expected_shapes() const;
};

/// Requires an arf-1 quadric of G_3 (a GQ(2,4)). Intersects it with each
/// other hyperplane of G_3 and classifies the section.
SectionSummary gq24_sections(const Hyperplane &h);

/// H_{YY...Y}: the operators with an even number of non-identity factors.
Hyperplane wootters_selfdual(QubitCount n);

/// Nonzero vectors whose label has an even number of non-I letters.
PointSet even_weight_points(QubitCount n);

}  // namespace veldkamp
