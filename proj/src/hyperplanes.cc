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

#include "veldkamp/hyperplanes.h"

#include "veldkamp/config.h"
#include "veldkamp/error.h"
#include "veldkamp/pauli.h"

namespace veldkamp {

const char *to_string(HyperplaneType type) {
    switch (type) {
        case HyperplaneType::kPerp:
            return "perp";
        case HyperplaneType::kQuadricArf0:
            return "quadric-arf0";
        case HyperplaneType::kQuadricArf1:
            return "quadric-arf1";
    }
    return "?";
}

HyperplaneKind HyperplaneKind::perp(const PauliVector &p) {
    if (p.is_zero()) {
        fail(ErrorCode::kInvalidArgument, "C_0 is the whole point set, not a hyperplane");
    }
    return HyperplaneKind(HyperplaneFamily::kPerp, p);
}

HyperplaneKind HyperplaneKind::quadric(const PauliVector &p) {
    return HyperplaneKind(HyperplaneFamily::kQuadric, p);
}

HyperplaneKind HyperplaneKind::parse(std::string_view key) {
    if (key.size() < 3 || key[1] != '_' || (key[0] != 'C' && key[0] != 'H')) {
        fail(ErrorCode::kParse, "hyperplane key must look like C_<label> or H_<label>, got '" + std::string(key) + "'");
    }
    PauliVector p = encode(key.substr(2));
    return key[0] == 'C' ? perp(p) : quadric(p);
}

HyperplaneKind HyperplaneKind::from_index(QubitCount n, std::uint64_t index) {
    std::uint64_t perps = n.point_count();
    if (index < perps) {
        return perp(PauliVector(n, index + 1));
    }
    if (index < hyperplane_count(n)) {
        return quadric(PauliVector(n, index - perps));
    }
    fail(ErrorCode::kOutOfRange, "hyperplane index " + std::to_string(index) + " out of range");
}

std::optional<int> HyperplaneKind::arf() const {
    if (is_perp()) {
        return std::nullopt;
    }
    return q0(p_);
}

HyperplaneType HyperplaneKind::type() const {
    if (is_perp()) {
        return HyperplaneType::kPerp;
    }
    return q0(p_) ? HyperplaneType::kQuadricArf1 : HyperplaneType::kQuadricArf0;
}

std::uint64_t HyperplaneKind::index() const noexcept {
    if (is_perp()) {
        return p_.bits() - 1;
    }
    return p_.qubits().point_count() + p_.bits();
}

std::string HyperplaneKind::key() const {
    return (is_perp() ? "C_" : "H_") + decode(p_);
}

PointSet HyperplaneKind::points() const {
    PointSet s(qubits());
    std::uint64_t size = qubits().space_size();
    for (std::uint64_t x = 1; x < size; x++) {
        if (contains(x)) {
            s.insert(x);
        }
    }
    return s;
}

std::strong_ordering HyperplaneKind::operator<=>(const HyperplaneKind &other) const {
    if (auto c = p_.qubits() <=> other.p_.qubits(); c != 0) {
        return c;
    }
    return index() <=> other.index();
}

std::uint64_t hyperplane_count(QubitCount n) {
    return 2 * n.space_size() - 1;
}

std::uint64_t hyperplane_size_formula(QubitCount n, HyperplaneType type) {
    std::uint64_t four = n.space_size();
    std::uint64_t two = std::uint64_t{1} << n.value();
    switch (type) {
        case HyperplaneType::kPerp:
            return four / 2 - 1;
        case HyperplaneType::kQuadricArf0:
            return (four + two) / 2 - 1;
        case HyperplaneType::kQuadricArf1:
            return (four - two) / 2 - 1;
    }
    return 0;
}

std::uint64_t hyperplane_copies_formula(QubitCount n, HyperplaneType type) {
    std::uint64_t four = n.space_size();
    std::uint64_t two = std::uint64_t{1} << n.value();
    switch (type) {
        case HyperplaneType::kPerp:
            return four - 1;
        case HyperplaneType::kQuadricArf0:
            return (four + two) / 2;
        case HyperplaneType::kQuadricArf1:
            return (four - two) / 2;
    }
    return 0;
}

Hyperplane perp_hyperplane(const PauliVector &p) {
    return Hyperplane(HyperplaneKind::perp(p));
}

Hyperplane quadric_hyperplane(const PauliVector &p) {
    return Hyperplane(HyperplaneKind::quadric(p));
}

bool satisfies_h1(const PointSet &s, const Geometry &g) {
    if (s.qubits() != g.qubits()) {
        fail(ErrorCode::kDimensionMismatch, "point set and geometry differ in n");
    }
    if (s.contains(std::uint64_t{0})) {
        fail(ErrorCode::kInvalidArgument, "point sets may not contain the zero vector");
    }
    bool ok = true;
    g.for_each_line([&](const Line &l) {
        int hits = s.contains(l.points[0]) + s.contains(l.points[1]) + s.contains(l.points[2]);
        ok = ok && (hits == 1 || hits == 3);
    });
    return ok;
}

PointSet boxplus(const PointSet &a, const PointSet &b) {
    return (a ^ b).complement();
}

HyperplaneKind boxplus(const HyperplaneKind &a, const HyperplaneKind &b) {
    require_same_space(a.p(), b.p());
    if (a == b) {
        fail(ErrorCode::kInvalidArgument, "boxplus of " + a.key() + " with itself is P, not a hyperplane");
    }
    PauliVector sum = a.p() + b.p();
    if (a.family() == b.family()) {
        return HyperplaneKind::perp(sum);
    }
    return HyperplaneKind::quadric(sum);
}

Hyperplane boxplus(const Hyperplane &a, const Hyperplane &b) {
    Hyperplane result(boxplus(a.kind(), b.kind()));
    if (result.points() != boxplus(a.points(), b.points())) {
        fail(ErrorCode::kInternal, "set-level and formula-level boxplus disagree for " + a.kind().key() + ", " +
                                       b.kind().key());
    }
    return result;
}

namespace {

bool matches(const HyperplaneKind &kind, const PointSet &s) {
    std::uint64_t size = s.qubits().space_size();
    for (std::uint64_t x = 1; x < size; x++) {
        if (kind.contains(x) != s.contains(x)) {
            return false;
        }
    }
    return true;
}

}  // namespace

HyperplaneKind classify(const PointSet &s, const Geometry &g) {
    QubitCount n = g.qubits();
    if (s.qubits() != n) {
        fail(ErrorCode::kDimensionMismatch, "point set and geometry differ in n");
    }
    // Off-membership f(x) is <p,x> for C_p and <p,x> + Q0(x) for H_p. Q0
    // vanishes on basis vectors, so f on the basis gives p either way:
    // <p, e at bit 2k+1> is p's bit 2k and vice versa.
    std::uint64_t p = 0;
    for (int k = 0; k < n.value(); k++) {
        std::uint64_t a_bit = std::uint64_t{1} << (2 * k + 1);
        std::uint64_t b_bit = std::uint64_t{1} << (2 * k);
        if (!s.contains(a_bit)) {
            p |= b_bit;
        }
        if (!s.contains(b_bit)) {
            p |= a_bit;
        }
    }
    // Y on the lowest qubit has Q0 = 1, which separates the two families.
    std::uint64_t y = 3;
    int off = s.contains(y) ? 0 : 1;
    bool perp_family = off == gf2::form(p, y);
    if (!(perp_family && p == 0)) {
        PauliVector pv(n, p);
        HyperplaneKind candidate = perp_family ? HyperplaneKind::perp(pv) : HyperplaneKind::quadric(pv);
        if (matches(candidate, s)) {
            return candidate;
        }
    }
    for (std::uint64_t i = 0; i < hyperplane_count(n); i++) {
        HyperplaneKind candidate = HyperplaneKind::from_index(n, i);
        if (matches(candidate, s)) {
            return candidate;
        }
    }
    fail(ErrorCode::kNotAHyperplane, "point set of size " + std::to_string(s.size()) + " is not a hyperplane");
}

HyperplaneCatalog enumerate_hyperplanes(QubitCount n) {
    if (n.value() > kMaxCatalogQubits) {
        fail(ErrorCode::kOutOfRange, "hyperplane catalogs are limited to n <= " + std::to_string(kMaxCatalogQubits));
    }
    HyperplaneCatalog catalog{n, {}, n.value() == 1};
    std::uint64_t total = hyperplane_count(n);
    catalog.hyperplanes.reserve(total);
    for (std::uint64_t i = 0; i < total; i++) {
        catalog.hyperplanes.emplace_back(HyperplaneKind::from_index(n, i));
    }
    return catalog;
}

size_t contained_line_count(const Hyperplane &h, const Geometry &g) {
    if (h.qubits() != g.qubits()) {
        fail(ErrorCode::kDimensionMismatch, "hyperplane and geometry differ in n");
    }
    size_t count = 0;
    const PointSet &s = h.points();
    g.for_each_line([&](const Line &l) {
        if (s.contains(l.points[0]) && s.contains(l.points[1]) && s.contains(l.points[2])) {
            count++;
        }
    });
    return count;
}

std::optional<std::uint64_t> contained_line_formula(QubitCount n, std::uint64_t size) {
    std::uint64_t per_point = (n.space_size() >> 2) - 1;
    std::uint64_t points = n.point_count();
    if (3 * size < points) {
        return std::nullopt;
    }
    std::uint64_t numerator = per_point * (3 * size - points);
    if (numerator % 6 != 0) {
        return std::nullopt;
    }
    return numerator / 6;
}

std::vector<PointSet> exhaustive_h1_sets(const Geometry &g, bool allow_exhaustive) {
    if (!allow_exhaustive) {
        fail(ErrorCode::kPrecondition, "exhaustive subset search needs the explicit exhaustive flag");
    }
    if (g.qubits().value() > 2) {
        fail(ErrorCode::kPrecondition, "exhaustive subset search is limited to n <= 2");
    }
    QubitCount n = g.qubits();
    std::uint64_t points = n.point_count();
    std::span<const Line> lines = g.lines();
    std::vector<PointSet> found;
    // Subset bit (v - 1) selects point v.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << points); mask++) {
        bool ok = true;
        for (const Line &l : lines) {
            int hits = 0;
            for (std::uint64_t v : l.points) {
                hits += static_cast<int>((mask >> (v - 1)) & 1);
            }
            if (hits != 1 && hits != 3) {
                ok = false;
                break;
            }
        }
        if (ok) {
            PointSet s(n);
            for (std::uint64_t v = 1; v <= points; v++) {
                if ((mask >> (v - 1)) & 1) {
                    s.insert(v);
                }
            }
            found.push_back(std::move(s));
        }
    }
    return found;
}

}  // namespace veldkamp
