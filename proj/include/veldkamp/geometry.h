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
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "veldkamp/gf2.h"
#include "veldkamp/point_set.h"

namespace veldkamp {

/// An isotropic triple {a, b, a+b}, sorted ascending by packed value.
struct Line {
    std::array<std::uint64_t, 3> points;

    bool contains(std::uint64_t v) const noexcept {
        return points[0] == v || points[1] == v || points[2] == v;
    }
    auto operator<=>(const Line &) const = default;
};

/// Sorts the three points; does not check that they form a line.
Line make_line(std::uint64_t a, std::uint64_t b, std::uint64_t c);

/// The point-line geometry G_n: points are the nonzero vectors of V_n and lines
/// are the triples {a, b, a+b} with <a, b> = 0. Immutable after construction.
class Geometry {
   public:
    explicit Geometry(QubitCount n);

    QubitCount qubits() const noexcept {
        return n_;
    }
    /// 4^n - 1.
    std::uint64_t point_count() const noexcept {
        return n_.point_count();
    }
    /// (4^n - 1)(4^(n-1) - 1) / 3.
    std::uint64_t line_count() const noexcept;
    /// 4^(n-1) - 1.
    std::uint64_t lines_per_point() const noexcept;

    bool lines_materialized() const noexcept {
        return materialized_;
    }
    /// Canonically ordered line list. Only available up to
    /// kMaterializedLineQubits; use for_each_line above that.
    std::span<const Line> lines() const;

    /// Visits every line once in canonical (lexicographic) order.
    template <typename F>
    void for_each_line(F &&f) const {
        if (materialized_) {
            for (const Line &l : lines_) {
                f(l);
            }
            return;
        }
        for_each_line_in_range(1, n_.space_size(), f);
    }

    /// Visits the lines whose smallest point lies in [begin, end). Disjoint
    /// ranges visit disjoint line sets, so workers can split the point range.
    template <typename F>
    void for_each_line_in_range(std::uint64_t begin, std::uint64_t end, F &&f) const {
        const std::uint64_t size = n_.space_size();
        if (begin < 1) {
            begin = 1;
        }
        if (end > size) {
            end = size;
        }
        for (std::uint64_t a = begin; a < end; a++) {
            for (std::uint64_t b = a + 1; b < size; b++) {
                std::uint64_t c = a ^ b;
                if (c > b && gf2::form(a, b) == 0) {
                    f(Line{{a, b, c}});
                }
            }
        }
    }

    /// True iff the three points are distinct, sum to zero and commute.
    bool is_line(const PauliVector &a, const PauliVector &b, const PauliVector &c) const;

    /// C_p = {x in P : <p, x> = 0}; contains p.
    PointSet perp_set(const PauliVector &p) const;

    std::vector<Line> lines_through(const PauliVector &p) const;

    /// Lines of G_n with all three points inside s.
    std::vector<Line> lines_within(const PointSet &s) const;

   private:
    void require_point(const PauliVector &p) const;

    QubitCount n_;
    bool materialized_;
    std::vector<Line> lines_;
};

/// Simple undirected graph on vertices 0..k-1 with dense adjacency rows.
class Graph {
   public:
    explicit Graph(size_t vertex_count);

    size_t vertex_count() const noexcept {
        return rows_.size();
    }
    void add_edge(size_t u, size_t v);
    bool adjacent(size_t u, size_t v) const noexcept {
        return (rows_[u][v >> 6] >> (v & 63)) & 1;
    }
    size_t degree(size_t v) const noexcept;
    size_t edge_count() const noexcept;
    std::vector<std::pair<size_t, size_t>> edges() const;

   private:
    std::vector<std::vector<std::uint64_t>> rows_;
};

/// Vertex i is the point with packed value i + 1; edges join distinct
/// commuting points. Available up to kMaxGraphQubits.
Graph collinearity_graph(const Geometry &g);

}  // namespace veldkamp
