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

#include "veldkamp/geometry.h"

#include <algorithm>
#include <bit>

#include "veldkamp/config.h"
#include "veldkamp/error.h"

namespace veldkamp {

Line make_line(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    Line l{{a, b, c}};
    std::sort(l.points.begin(), l.points.end());
    return l;
}

Geometry::Geometry(QubitCount n) : n_(n), materialized_(n.value() <= kMaterializedLineQubits) {
    if (materialized_) {
        lines_.reserve(line_count());
        for_each_line_in_range(1, n_.space_size(), [&](const Line &l) { lines_.push_back(l); });
    }
}

std::uint64_t Geometry::line_count() const noexcept {
    return point_count() * lines_per_point() / 3;
}

std::uint64_t Geometry::lines_per_point() const noexcept {
    return (n_.space_size() >> 2) - 1;
}

std::span<const Line> Geometry::lines() const {
    if (!materialized_) {
        fail(ErrorCode::kOutOfRange, "lines are only materialized up to n=" + std::to_string(kMaterializedLineQubits) +
                                         "; iterate with for_each_line");
    }
    return lines_;
}

void Geometry::require_point(const PauliVector &p) const {
    if (p.qubits() != n_) {
        fail(ErrorCode::kDimensionMismatch, "point is not in V_" + std::to_string(n_.value()));
    }
    if (p.is_zero()) {
        fail(ErrorCode::kInvalidArgument, "the zero vector is not a point");
    }
}

bool Geometry::is_line(const PauliVector &a, const PauliVector &b, const PauliVector &c) const {
    for (const auto *v : {&a, &b, &c}) {
        if (v->qubits() != n_) {
            fail(ErrorCode::kDimensionMismatch, "point is not in V_" + std::to_string(n_.value()));
        }
    }
    std::uint64_t x = a.bits(), y = b.bits(), z = c.bits();
    if (x == 0 || y == 0 || z == 0 || x == y || y == z || x == z) {
        return false;
    }
    return (x ^ y ^ z) == 0 && gf2::form(x, y) == 0;
}

PointSet Geometry::perp_set(const PauliVector &p) const {
    require_point(p);
    PointSet s(n_);
    for (std::uint64_t x = 1; x < n_.space_size(); x++) {
        if (gf2::form(p.bits(), x) == 0) {
            s.insert(x);
        }
    }
    return s;
}

std::vector<Line> Geometry::lines_through(const PauliVector &p) const {
    require_point(p);
    std::vector<Line> out;
    std::uint64_t pb = p.bits();
    for (std::uint64_t x = 1; x < n_.space_size(); x++) {
        std::uint64_t y = pb ^ x;
        if (x != pb && x < y && gf2::form(pb, x) == 0) {
            out.push_back(make_line(pb, x, y));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Line> Geometry::lines_within(const PointSet &s) const {
    if (s.qubits() != n_) {
        fail(ErrorCode::kDimensionMismatch, "point set is not in V_" + std::to_string(n_.value()));
    }
    std::vector<Line> out;
    // Pairs inside s suffice: a line lies in s iff its two smallest points do
    // and their sum does too.
    std::vector<std::uint64_t> members = s.to_vector();
    for (size_t i = 0; i < members.size(); i++) {
        for (size_t j = i + 1; j < members.size(); j++) {
            std::uint64_t a = members[i], b = members[j], c = a ^ b;
            if (c > b && s.contains(c) && gf2::form(a, b) == 0) {
                out.push_back(Line{{a, b, c}});
            }
        }
    }
    return out;
}

Graph::Graph(size_t vertex_count) : rows_(vertex_count, std::vector<std::uint64_t>((vertex_count + 63) / 64, 0)) {
}

void Graph::add_edge(size_t u, size_t v) {
    if (u >= vertex_count() || v >= vertex_count()) {
        fail(ErrorCode::kOutOfRange, "edge endpoint out of range");
    }
    if (u == v) {
        fail(ErrorCode::kInvalidArgument, "simple graphs have no loops");
    }
    rows_[u][v >> 6] |= std::uint64_t{1} << (v & 63);
    rows_[v][u >> 6] |= std::uint64_t{1} << (u & 63);
}

size_t Graph::degree(size_t v) const noexcept {
    size_t d = 0;
    for (std::uint64_t w : rows_[v]) {
        d += std::popcount(w);
    }
    return d;
}

size_t Graph::edge_count() const noexcept {
    size_t total = 0;
    for (size_t v = 0; v < vertex_count(); v++) {
        total += degree(v);
    }
    return total / 2;
}

std::vector<std::pair<size_t, size_t>> Graph::edges() const {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t u = 0; u < vertex_count(); u++) {
        for (size_t v = u + 1; v < vertex_count(); v++) {
            if (adjacent(u, v)) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

Graph collinearity_graph(const Geometry &g) {
    if (g.qubits().value() > kMaxGraphQubits) {
        fail(ErrorCode::kOutOfRange, "collinearity graphs are limited to n <= " + std::to_string(kMaxGraphQubits));
    }
    std::uint64_t size = g.qubits().space_size();
    Graph graph(static_cast<size_t>(size - 1));
    for (std::uint64_t x = 1; x < size; x++) {
        for (std::uint64_t y = x + 1; y < size; y++) {
            if (gf2::form(x, y) == 0) {
                graph.add_edge(x - 1, y - 1);
            }
        }
    }
    return graph;
}

}  // namespace veldkamp
