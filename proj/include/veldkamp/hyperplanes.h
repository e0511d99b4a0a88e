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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "veldkamp/geometry.h"
#include "veldkamp/gf2.h"
#include "veldkamp/point_set.h"

namespace veldkamp {

enum class HyperplaneFamily : std::uint8_t {
    kPerp = 0,     // C_p, p != 0
    kQuadric = 1,  // H_p, any p
};

/// The three Sp(2n,2)-orbits of hyperplanes.
enum class HyperplaneType : std::uint8_t {
    kPerp = 0,
    kQuadricArf0 = 1,
    kQuadricArf1 = 2,
};

const char *to_string(HyperplaneType type);

/// Algebraic description of a hyperplane: C_p = {x : <p,x> = 0} or
/// H_p = {x : Q0(x) + <p,x> = 0}, both taken without the zero vector.
class HyperplaneKind {
   public:
    /// Throws kInvalidArgument for p = 0 (C_0 is all of P).
    static HyperplaneKind perp(const PauliVector &p);
    static HyperplaneKind quadric(const PauliVector &p);
    /// Inverse of key(): "C_XZ", "H_II", ...
    static HyperplaneKind parse(std::string_view key);
    static HyperplaneKind from_index(QubitCount n, std::uint64_t index);

    HyperplaneFamily family() const noexcept {
        return family_;
    }
    bool is_perp() const noexcept {
        return family_ == HyperplaneFamily::kPerp;
    }
    bool is_quadric() const noexcept {
        return family_ == HyperplaneFamily::kQuadric;
    }
    const PauliVector &p() const noexcept {
        return p_;
    }
    QubitCount qubits() const noexcept {
        return p_.qubits();
    }
    /// Q0(p) for quadrics; empty for perp-sets.
    std::optional<int> arf() const;
    HyperplaneType type() const;

    /// Position in canonical order: perp-sets by p, then quadrics by p.
    std::uint64_t index() const noexcept;
    std::string key() const;

    /// Membership of a packed vector; the zero vector is never a member.
    bool contains(std::uint64_t x) const noexcept {
        if (x == 0) {
            return false;
        }
        int value = gf2::form(p_.bits(), x);
        if (family_ == HyperplaneFamily::kQuadric) {
            value ^= gf2::q0(x);
        }
        return value == 0;
    }

    PointSet points() const;

    bool operator==(const HyperplaneKind &) const = default;
    std::strong_ordering operator<=>(const HyperplaneKind &other) const;

   private:
    HyperplaneKind(HyperplaneFamily family, PauliVector p) : family_(family), p_(p) {
    }

    HyperplaneFamily family_;
    PauliVector p_;
};

/// 2 * 4^n - 1.
std::uint64_t hyperplane_count(QubitCount n);

/// Size and number of copies of each hyperplane type, in closed form.
std::uint64_t hyperplane_size_formula(QubitCount n, HyperplaneType type);
std::uint64_t hyperplane_copies_formula(QubitCount n, HyperplaneType type);

/// A classified hyperplane together with its materialized point set.
class Hyperplane {
   public:
    explicit Hyperplane(const HyperplaneKind &kind) : kind_(kind), points_(kind.points()) {
    }

    const HyperplaneKind &kind() const noexcept {
        return kind_;
    }
    const PointSet &points() const noexcept {
        return points_;
    }
    size_t size() const noexcept {
        return points_.size();
    }
    QubitCount qubits() const noexcept {
        return kind_.qubits();
    }

    bool operator==(const Hyperplane &other) const {
        return kind_ == other.kind_;
    }

   private:
    HyperplaneKind kind_;
    PointSet points_;
};

Hyperplane perp_hyperplane(const PauliVector &p);
Hyperplane quadric_hyperplane(const PauliVector &p);

/// (H1): every line meets s in one point or lies inside s.
bool satisfies_h1(const PointSet &s, const Geometry &g);

/// Complement (within P) of the symmetric difference. Defined for any two
/// sets; P is the neutral element.
PointSet boxplus(const PointSet &a, const PointSet &b);

/// C_a+C_b = C_{a+b}, H_a+H_b = C_{a+b}, C_a+H_b = H_{a+b}.
/// Throws kInvalidArgument when a == b.
HyperplaneKind boxplus(const HyperplaneKind &a, const HyperplaneKind &b);

/// Computes the result both ways and throws kInternal if they disagree.
Hyperplane boxplus(const Hyperplane &a, const Hyperplane &b);

/// Identifies which C_p or H_p equals s. Reconstructs p from the membership of
/// the basis vectors and one Y-type correction vector, then falls back to a
/// scan of every candidate. Throws kNotAHyperplane when nothing matches
/// (including s = P).
HyperplaneKind classify(const PointSet &s, const Geometry &g);

/// Every hyperplane of G_n in canonical order, so that
/// hyperplanes[k.index()].kind() == k.
struct HyperplaneCatalog {
    QubitCount n;
    std::vector<Hyperplane> hyperplanes;
    /// Set for n = 1, where G_1 has no lines and every proper subset of the
    /// three points is a hyperplane (including the empty set).
    bool degenerate = false;

    const Hyperplane &at(const HyperplaneKind &kind) const {
        return hyperplanes.at(kind.index());
    }
};

/// Throws kOutOfRange above kMaxCatalogQubits.
HyperplaneCatalog enumerate_hyperplanes(QubitCount n);

size_t contained_line_count(const Hyperplane &h, const Geometry &g);

/// N2 = (4^(n-1) - 1)(|H| - |P|/3) / 2 for a set of the given size.
/// Returns nullopt when the value is not a nonnegative integer.
std::optional<std::uint64_t> contained_line_formula(QubitCount n, std::uint64_t size);

/// All subsets of P satisfying (H1), found by trying all 2^|P| subsets.
/// Only for n <= 2 and only when allow_exhaustive is set; throws
/// kPrecondition otherwise.
std::vector<PointSet> exhaustive_h1_sets(const Geometry &g, bool allow_exhaustive);

}  // namespace veldkamp
