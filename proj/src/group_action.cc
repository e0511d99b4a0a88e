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

#include "veldkamp/group_action.h"

#include <algorithm>
#include <deque>

#include "veldkamp/error.h"
#include "veldkamp/pauli.h"

namespace veldkamp {

Transvection::Transvection(const PauliVector &p) : p_(p) {
    if (p.is_zero()) {
        fail(ErrorCode::kInvalidArgument, "transvection vector must be nonzero");
    }
}

PauliVector Transvection::apply(const PauliVector &x) const {
    return transvect(p_, x);
}

namespace {

HyperplaneKind raw_transvect(std::uint64_t p, const HyperplaneKind &h) {
    QubitCount n = h.qubits();
    std::uint64_t a = h.p().bits();
    if (h.is_perp()) {
        return HyperplaneKind::perp(PauliVector(n, gf2::transvect(p, a)));
    }
    // H_a -> H_{a + (1 + Q_a(p)) p}
    return HyperplaneKind::quadric(PauliVector(n, gf2::qp(a, p) ? a : a ^ p));
}

Gf2Matrix word_matrix(QubitCount n, const std::vector<Transvection> &word) {
    std::vector<PauliVector> columns;
    for (int i = 0; i < n.dimension(); i++) {
        std::uint64_t x = std::uint64_t{1} << gf2::coordinate_bit(n.value(), i);
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            x = gf2::transvect(it->p().bits(), x);
        }
        columns.emplace_back(n, x);
    }
    return Gf2Matrix::from_columns(columns);
}

}  // namespace

HyperplaneKind Transvection::apply(const HyperplaneKind &h) const {
    require_same_space(p_, h.p());
    return raw_transvect(p_.bits(), h);
}

SymplecticMap SymplecticMap::identity(QubitCount n) {
    return SymplecticMap(n, {});
}

SymplecticMap::SymplecticMap(QubitCount n, std::vector<Transvection> word)
    : n_(n), word_(std::move(word)), matrix_(word_matrix(n, word_)) {
    for (const auto &t : word_) {
        if (t.qubits() != n) {
            fail(ErrorCode::kDimensionMismatch, "transvection outside V_" + std::to_string(n.value()));
        }
    }
}

std::vector<std::string> SymplecticMap::word_labels() const {
    std::vector<std::string> out;
    for (const auto &t : word_) {
        out.push_back(decode(t.p()));
    }
    return out;
}

PauliVector SymplecticMap::apply(const PauliVector &x) const {
    if (x.qubits() != n_) {
        fail(ErrorCode::kDimensionMismatch, "vector outside V_" + std::to_string(n_.value()));
    }
    std::uint64_t v = x.bits();
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
        v = gf2::transvect(it->p().bits(), v);
    }
    return PauliVector(n_, v);
}

HyperplaneKind SymplecticMap::apply(const HyperplaneKind &h) const {
    if (h.qubits() != n_) {
        fail(ErrorCode::kDimensionMismatch, "hyperplane outside V_" + std::to_string(n_.value()));
    }
    HyperplaneKind out = h;
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
        out = raw_transvect(it->p().bits(), out);
    }
    return out;
}

SymplecticMap SymplecticMap::then_after(const SymplecticMap &other) const {
    if (other.n_ != n_) {
        fail(ErrorCode::kDimensionMismatch, "cannot compose maps on different spaces");
    }
    std::vector<Transvection> word = word_;
    word.insert(word.end(), other.word_.begin(), other.word_.end());
    return SymplecticMap(n_, std::move(word));
}

PauliVector apply_point(const SymplecticMap &m, const PauliVector &x) {
    return m.apply(x);
}

PointSet image(const Transvection &t, const PointSet &s) {
    if (s.qubits() != t.qubits()) {
        fail(ErrorCode::kDimensionMismatch, "point set outside the transvection's space");
    }
    PointSet out(s.qubits());
    std::uint64_t p = t.p().bits();
    s.for_each([&](std::uint64_t x) { out.insert(gf2::transvect(p, x)); });
    return out;
}

Hyperplane apply_hyperplane(const Transvection &t, const Hyperplane &h) {
    Hyperplane result(t.apply(h.kind()));
    if (result.points() != image(t, h.points())) {
        fail(ErrorCode::kInternal, "transvection formula disagrees with the elementwise image of " + h.kind().key());
    }
    return result;
}

std::vector<HyperplaneKind> orbit_hyperplanes(const HyperplaneKind &seed) {
    QubitCount n = seed.qubits();
    std::vector<bool> seen(hyperplane_count(n), false);
    std::vector<HyperplaneKind> orbit{seed};
    seen[seed.index()] = true;
    for (size_t head = 0; head < orbit.size(); head++) {
        HyperplaneKind current = orbit[head];
        for (std::uint64_t p = 1; p < n.space_size(); p++) {
            HyperplaneKind next = raw_transvect(p, current);
            if (!seen[next.index()]) {
                seen[next.index()] = true;
                orbit.push_back(next);
            }
        }
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

std::vector<std::vector<HyperplaneKind>> hyperplane_orbits(QubitCount n) {
    std::vector<bool> assigned(hyperplane_count(n), false);
    std::vector<std::vector<HyperplaneKind>> orbits;
    for (std::uint64_t i = 0; i < assigned.size(); i++) {
        if (assigned[i]) {
            continue;
        }
        auto orbit = orbit_hyperplanes(HyperplaneKind::from_index(n, i));
        for (const auto &h : orbit) {
            assigned[h.index()] = true;
        }
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

SymplecticMap find_swap(const PauliVector &a, const PauliVector &b, const PauliVector &f) {
    require_same_space(a, b);
    require_same_space(a, f);
    QubitCount n = a.qubits();
    if (n.value() < 3) {
        fail(ErrorCode::kPrecondition, "find_swap needs n >= 3");
    }
    if (a == b || a == f || b == f) {
        fail(ErrorCode::kPrecondition, "find_swap needs three distinct vectors");
    }
    if (q0(a) != q0(b)) {
        fail(ErrorCode::kPrecondition, "H_a and H_b must have the same Arf invariant");
    }

    std::uint64_t ab = a.bits() ^ b.bits();
    std::vector<Transvection> word;
    if (gf2::qp(f.bits(), ab) == 1) {
        word.emplace_back(PauliVector(n, ab));
    } else {
        std::uint64_t p = 0;
        for (std::uint64_t x = 1; x < n.space_size(); x++) {
            if (gf2::form(ab, x) == 0 && gf2::qp(a.bits(), x) == 0 && gf2::qp(f.bits(), x) == 1) {
                p = x;
                break;
            }
        }
        if (p == 0) {
            fail(ErrorCode::kInternal, "no point in C_{a+b} ∩ H_a \\ H_f");
        }
        word.emplace_back(PauliVector(n, ab ^ p));
        word.emplace_back(PauliVector(n, p));
    }
    SymplecticMap m(n, std::move(word));

    HyperplaneKind ha = HyperplaneKind::quadric(a);
    HyperplaneKind hb = HyperplaneKind::quadric(b);
    HyperplaneKind hf = HyperplaneKind::quadric(f);
    if (m.apply(ha) != hb || m.apply(hb) != ha || m.apply(hf) != hf) {
        fail(ErrorCode::kInternal, "constructed map does not swap H_a and H_b while fixing H_f");
    }
    if (!(m.matrix() * m.matrix() == Gf2Matrix::identity(n.dimension()))) {
        fail(ErrorCode::kInternal, "constructed swap is not an involution");
    }
    return m;
}

SymplecticMap map_ordered_pair(const PauliVector &a1, const PauliVector &b1, const PauliVector &a2,
                               const PauliVector &b2) {
    require_same_space(a1, b1);
    require_same_space(a1, a2);
    require_same_space(a1, b2);
    QubitCount n = a1.qubits();
    if (a1 == b1 || a2 == b2) {
        fail(ErrorCode::kPrecondition, "ordered pairs must consist of distinct quadrics");
    }
    int arf_value = q0(a1);
    if (q0(b1) != arf_value || q0(a2) != arf_value || q0(b2) != arf_value) {
        fail(ErrorCode::kPrecondition, "all four quadrics must share one Arf invariant");
    }

    SymplecticMap first = SymplecticMap::identity(n);
    if (a1 != a2) {
        // Any third vector works as the fixed quadric here.
        std::uint64_t f = 0;
        while (f == a1.bits() || f == a2.bits()) {
            f++;
        }
        first = find_swap(a1, a2, PauliVector(n, f));
    }
    HyperplaneKind moved = first.apply(HyperplaneKind::quadric(b1));
    SymplecticMap result = first;
    if (moved.p() != b2) {
        result = find_swap(moved.p(), b2, a2).then_after(first);
    }
    if (result.apply(HyperplaneKind::quadric(a1)) != HyperplaneKind::quadric(a2) ||
        result.apply(HyperplaneKind::quadric(b1)) != HyperplaneKind::quadric(b2)) {
        fail(ErrorCode::kInternal, "composed swaps do not map the ordered pair");
    }
    return result;
}

std::uint64_t ordered_pair_orbit_size(const PauliVector &a, const PauliVector &b) {
    require_same_space(a, b);
    if (a == b) {
        fail(ErrorCode::kPrecondition, "ordered pair must consist of distinct quadrics");
    }
    QubitCount n = a.qubits();
    const std::uint64_t size = n.space_size();
    std::vector<bool> seen(size * size, false);
    std::deque<std::pair<std::uint64_t, std::uint64_t>> frontier{{a.bits(), b.bits()}};
    seen[a.bits() * size + b.bits()] = true;
    std::uint64_t count = 1;
    while (!frontier.empty()) {
        auto [x, y] = frontier.front();
        frontier.pop_front();
        for (std::uint64_t p = 1; p < size; p++) {
            std::uint64_t nx = gf2::qp(x, p) ? x : x ^ p;
            std::uint64_t ny = gf2::qp(y, p) ? y : y ^ p;
            if (!seen[nx * size + ny]) {
                seen[nx * size + ny] = true;
                count++;
                frontier.emplace_back(nx, ny);
            }
        }
    }
    return count;
}

bool is_symplectic(const Gf2Matrix &m) {
    if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
        fail(ErrorCode::kInvalidArgument, "symplectic test needs a square matrix of even size");
    }
    Gf2Matrix j = Gf2Matrix::symplectic_form_matrix(QubitCount(m.rows() / 2));
    return m.transpose() * j * m == j;
}

Gf2Matrix transvection_matrix(const PauliVector &p) {
    return SymplecticMap(p.qubits(), {Transvection(p)}).matrix();
}

namespace {

void extend_automorphism(const Graph &g, std::vector<size_t> &image, std::vector<bool> &used, size_t depth,
                         std::uint64_t &count) {
    const size_t k = g.vertex_count();
    if (depth == k) {
        count++;
        return;
    }
    for (size_t candidate = 0; candidate < k; candidate++) {
        if (used[candidate] || g.degree(candidate) != g.degree(depth)) {
            continue;
        }
        bool consistent = true;
        for (size_t u = 0; u < depth && consistent; u++) {
            consistent = g.adjacent(u, depth) == g.adjacent(image[u], candidate);
        }
        if (!consistent) {
            continue;
        }
        image[depth] = candidate;
        used[candidate] = true;
        extend_automorphism(g, image, used, depth + 1, count);
        used[candidate] = false;
    }
}

}  // namespace

std::uint64_t count_graph_automorphisms(const Graph &g) {
    std::vector<size_t> image(g.vertex_count());
    std::vector<bool> used(g.vertex_count(), false);
    std::uint64_t count = 0;
    extend_automorphism(g, image, used, 0, count);
    return count;
}

}  // namespace veldkamp
