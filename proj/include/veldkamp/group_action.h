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

#include <cstdint>
#include <string>
#include <vector>

#include "veldkamp/geometry.h"
#include "veldkamp/gf2.h"
#include "veldkamp/hyperplanes.h"

namespace veldkamp {

/// t_p(x) = x + <p,x> p. An involution preserving the symplectic form.
class Transvection {
   public:
    /// Throws kInvalidArgument for p = 0.
    explicit Transvection(const PauliVector &p);

    const PauliVector &p() const noexcept {
        return p_;
    }
    QubitCount qubits() const noexcept {
        return p_.qubits();
    }

    PauliVector apply(const PauliVector &x) const;
    /// Closed forms: t_p C_a = C_{t_p a}, t_p H_a = H_{a + (1 + Q_a(p)) p}.
    HyperplaneKind apply(const HyperplaneKind &h) const;

   private:
    PauliVector p_;
};

/// Product of transvections. word()[0] is applied last: the map is
/// word[0] ∘ word[1] ∘ ... ∘ word[k-1]. The matrix is built on construction.
class SymplecticMap {
   public:
    static SymplecticMap identity(QubitCount n);
    SymplecticMap(QubitCount n, std::vector<Transvection> word);

    QubitCount qubits() const noexcept {
        return n_;
    }
    const std::vector<Transvection> &word() const noexcept {
        return word_;
    }
    /// Transvection vectors as Pauli labels, leftmost first.
    std::vector<std::string> word_labels() const;

    PauliVector apply(const PauliVector &x) const;
    HyperplaneKind apply(const HyperplaneKind &h) const;
    const Gf2Matrix &matrix() const noexcept {
        return matrix_;
    }

    /// (this ∘ other): other is applied first.
    SymplecticMap then_after(const SymplecticMap &other) const;

   private:
    QubitCount n_;
    std::vector<Transvection> word_;
    Gf2Matrix matrix_;
};

PauliVector apply_point(const SymplecticMap &m, const PauliVector &x);

/// Image of h under t, computed by the closed form and checked against the
/// elementwise image of h's points. Throws kInternal on disagreement.
Hyperplane apply_hyperplane(const Transvection &t, const Hyperplane &h);

/// Elementwise image of a point set.
PointSet image(const Transvection &t, const PointSet &s);

/// Closure of seed under all 4^n - 1 transvections, in canonical order.
std::vector<HyperplaneKind> orbit_hyperplanes(const HyperplaneKind &seed);

/// Partition of every hyperplane of G_n into orbits, ordered by their
/// smallest member.
std::vector<std::vector<HyperplaneKind>> hyperplane_orbits(QubitCount n);

/// Element of Sp(2n,2) fixing H_f and swapping H_a, H_b. Requires n >= 3,
/// a, b, f distinct and Q0(a) = Q0(b). Returns [t_{a+b}] when Q_f(a+b) = 1,
/// otherwise [t_q, t_p] with p the smallest point of C_{a+b} ∩ H_a \ H_f and
/// q = a + b + p. The result is verified before it is returned.
SymplecticMap find_swap(const PauliVector &a, const PauliVector &b, const PauliVector &f);

/// Word mapping the ordered pair (H_a1, H_b1) onto (H_a2, H_b2), built from at
/// most two find_swap steps. All four quadrics must share one Arf invariant,
/// with a1 != b1 and a2 != b2; n >= 3.
SymplecticMap map_ordered_pair(const PauliVector &a1, const PauliVector &b1, const PauliVector &a2,
                               const PauliVector &b2);

/// Size of the orbit of (H_a, H_b) among ordered pairs of distinct quadrics,
/// by breadth-first search over transvections.
std::uint64_t ordered_pair_orbit_size(const PauliVector &a, const PauliVector &b);

/// M^T J M = J for the block form J. Throws kInvalidArgument unless M is
/// square of even size.
bool is_symplectic(const Gf2Matrix &m);

/// Matrix of a single transvection.
Gf2Matrix transvection_matrix(const PauliVector &p);

/// Number of adjacency-preserving vertex permutations, by backtracking.
std::uint64_t count_graph_automorphisms(const Graph &g);

}  // namespace veldkamp
