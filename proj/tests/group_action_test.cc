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

#include <random>

#include "doctest.h"
#include "veldkamp/group_action.h"
#include "veldkamp/pauli.h"

using namespace veldkamp;

TEST_SUITE("group_action") {
    TEST_CASE("action formula matches elementwise images at two qubits") {
        QubitCount n(2);
        HyperplaneCatalog catalog = enumerate_hyperplanes(n);
        int cases = 0;
        for (std::uint64_t p = 1; p < 16; p++) {
            Transvection t(PauliVector(n, p));
            for (const auto &h : catalog.hyperplanes) {
                CHECK(catalog.at(t.apply(h.kind())).points() == image(t, h.points()));
                CHECK_NOTHROW(apply_hyperplane(t, h));
                cases++;
            }
        }
        CHECK(cases == 465);
    }

    TEST_CASE("action formula on sampled cases at three and four qubits") {
        for (int nv = 3; nv <= 4; nv++) {
            QubitCount n(nv);
            HyperplaneCatalog catalog = enumerate_hyperplanes(n);
            std::mt19937_64 rng(nv);
            for (int s = 0; s < 10000; s++) {
                Transvection t(PauliVector(n, 1 + rng() % n.point_count()));
                const Hyperplane &h = catalog.hyperplanes[rng() % catalog.hyperplanes.size()];
                REQUIRE(catalog.at(t.apply(h.kind())).points() == image(t, h.points()));
            }
        }
    }

    TEST_CASE("transvections") {
        CHECK_THROWS_AS(Transvection(PauliVector::zero(QubitCount(2))), Error);
        Transvection t(encode("XI"));
        CHECK(t.apply(encode("ZI")) == encode("YI"));
        CHECK(t.apply(encode("IZ")) == encode("IZ"));
        CHECK_THROWS_AS(t.apply(encode("X")), Error);
        for (std::uint64_t p = 1; p < 64; p++) {
            Gf2Matrix m = transvection_matrix(PauliVector(QubitCount(3), p));
            CHECK(is_symplectic(m));
            CHECK(m * m == Gf2Matrix::identity(6));
        }
        Gf2Matrix swap_a_of_qubits(4, 4);
        swap_a_of_qubits.set(0, 2, 1);
        swap_a_of_qubits.set(2, 0, 1);
        swap_a_of_qubits.set(1, 1, 1);
        swap_a_of_qubits.set(3, 3, 1);
        CHECK_FALSE(is_symplectic(swap_a_of_qubits));
        CHECK_THROWS_AS(is_symplectic(Gf2Matrix(3, 3)), Error);
    }

    TEST_CASE("symplectic maps compose right to left") {
        QubitCount n(2);
        Transvection t1(encode("XI")), t2(encode("ZI"));
        SymplecticMap m(n, {t1, t2});  // t1 after t2
        for (std::uint64_t x = 0; x < 16; x++) {
            PauliVector v(n, x);
            CHECK(m.apply(v) == t1.apply(t2.apply(v)));
            CHECK(m.matrix().apply(v) == m.apply(v));
            CHECK(apply_point(m, v) == m.apply(v));
        }
        CHECK(m.word_labels() == std::vector<std::string>{"XI", "ZI"});
        SymplecticMap composed = SymplecticMap(n, {t1}).then_after(SymplecticMap(n, {t2}));
        CHECK(composed.matrix() == m.matrix());
        CHECK(SymplecticMap::identity(n).matrix() == Gf2Matrix::identity(4));
        CHECK_THROWS_AS(SymplecticMap(QubitCount(3), {t1}), Error);
    }

    TEST_CASE("orbits are the three types") {
        for (int nv = 1; nv <= 4; nv++) {
            QubitCount n(nv);
            auto orbits = hyperplane_orbits(n);
            REQUIRE(orbits.size() == 3);
            for (const auto &orbit : orbits) {
                HyperplaneType t = orbit.front().type();
                CHECK(orbit.size() == hyperplane_copies_formula(n, t));
                for (const auto &h : orbit) {
                    CHECK(h.type() == t);
                }
            }
        }
        auto perps = orbit_hyperplanes(HyperplaneKind::parse("C_XZ"));
        CHECK(perps.size() == 15);
        CHECK(orbit_hyperplanes(HyperplaneKind::parse("H_YI")).size() == 6);
    }

    TEST_CASE("find_swap on every valid triple at three qubits") {
        QubitCount n(3);
        std::uint64_t triples = 0, single = 0;
        for (std::uint64_t a = 0; a < 64; a++) {
            for (std::uint64_t b = 0; b < 64; b++) {
                if (a == b || gf2::q0(a) != gf2::q0(b)) {
                    continue;
                }
                for (std::uint64_t f = 0; f < 64; f++) {
                    if (f == a || f == b) {
                        continue;
                    }
                    PauliVector va(n, a), vb(n, b), vf(n, f);
                    SymplecticMap m = find_swap(va, vb, vf);
                    HyperplaneKind ha = HyperplaneKind::quadric(va), hb = HyperplaneKind::quadric(vb),
                                   hf = HyperplaneKind::quadric(vf);
                    REQUIRE(m.apply(ha) == hb);
                    REQUIRE(m.apply(hb) == ha);
                    REQUIRE(m.apply(hf) == hf);
                    REQUIRE(is_symplectic(m.matrix()));
                    REQUIRE(m.word().size() <= 2);
                    single += m.word().size() == 1;
                    triples++;
                }
            }
        }
        CHECK(triples == 36 * 35 * 62 + 28 * 27 * 62);
        CHECK(single > 0);
        CHECK(single < triples);
    }

    TEST_CASE("find_swap preconditions") {
        CHECK_THROWS_AS(find_swap(encode("IX"), encode("IZ"), encode("XI")), Error);      // n = 2
        CHECK_THROWS_AS(find_swap(encode("IIY"), encode("IIZ"), encode("XII")), Error);   // arf differs
        CHECK_THROWS_AS(find_swap(encode("IIX"), encode("IIX"), encode("XII")), Error);   // a = b
        CHECK_THROWS_AS(find_swap(encode("IIX"), encode("IIZ"), encode("IIX")), Error);   // f = a
        CHECK_THROWS_AS(find_swap(encode("IIX"), encode("IIZ"), encode("XIII")), Error);  // mixed n
    }

    TEST_CASE("two-transitivity at three qubits") {
        QubitCount n(3);
        for (int arf_value = 0; arf_value <= 1; arf_value++) {
            std::vector<std::uint64_t> cls;
            for (std::uint64_t p = 0; p < 64; p++) {
                if (gf2::q0(p) == arf_value) {
                    cls.push_back(p);
                }
            }
            std::uint64_t m = cls.size();
            CHECK(ordered_pair_orbit_size(PauliVector(n, cls[0]), PauliVector(n, cls[1])) == m * (m - 1));
            // Every ordered pair is reached constructively from a fixed one.
            for (std::uint64_t a : cls) {
                for (std::uint64_t b : cls) {
                    if (a == b) {
                        continue;
                    }
                    SymplecticMap g = map_ordered_pair(PauliVector(n, cls[0]), PauliVector(n, cls[1]),
                                                       PauliVector(n, a), PauliVector(n, b));
                    REQUIRE(g.apply(HyperplaneKind::quadric(PauliVector(n, cls[0]))) ==
                            HyperplaneKind::quadric(PauliVector(n, a)));
                    REQUIRE(g.apply(HyperplaneKind::quadric(PauliVector(n, cls[1]))) ==
                            HyperplaneKind::quadric(PauliVector(n, b)));
                }
            }
        }
        CHECK_THROWS_AS(map_ordered_pair(encode("IIX"), encode("IIX"), encode("IIZ"), encode("IXI")), Error);
    }

    TEST_CASE("graph automorphisms") {
        Graph cycle(5);
        for (size_t i = 0; i < 5; i++) {
            cycle.add_edge(i, (i + 1) % 5);
        }
        CHECK(count_graph_automorphisms(cycle) == 10);
        Graph complete(4);
        for (size_t i = 0; i < 4; i++) {
            for (size_t j = i + 1; j < 4; j++) {
                complete.add_edge(i, j);
            }
        }
        CHECK(count_graph_automorphisms(complete) == 24);
        CHECK(count_graph_automorphisms(collinearity_graph(Geometry(QubitCount(2)))) == 720);
    }
}
