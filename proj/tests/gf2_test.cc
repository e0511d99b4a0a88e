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
#include "oracle.h"
#include "veldkamp/gf2.h"
#include "veldkamp/pauli.h"

using namespace veldkamp;

TEST_SUITE("gf2") {
    TEST_CASE("qubit count bounds") {
        CHECK_THROWS_AS(QubitCount(0), Error);
        CHECK_THROWS_AS(QubitCount(-3), Error);
        CHECK_THROWS_AS(QubitCount(13), Error);
        QubitCount n(3);
        CHECK(n.dimension() == 6);
        CHECK(n.space_size() == 64);
        CHECK(n.point_count() == 63);
    }

    TEST_CASE("packing puts qubit one in the high bits") {
        CHECK(encode("ZI").bits() == 0b1000);
        CHECK(encode("XI").bits() == 0b0100);
        CHECK(encode("IZ").bits() == 0b0010);
        CHECK(encode("IX").bits() == 0b0001);
        CHECK(encode("YY").bits() == 0b1111);
        PauliVector v = encode("ZX");
        CHECK(v.coordinates() == std::vector<int>{1, 0, 0, 1});
        std::vector<int> coords{0, 1, 1, 1};
        CHECK(PauliVector::from_coordinates(coords) == encode("XY"));
        CHECK_THROWS_AS(PauliVector(QubitCount(1), 4), Error);
    }

    TEST_CASE("vector addition is the letterwise product up to sign") {
        auto labels = oracle::all_labels(2);
        for (const auto &a : labels) {
            for (const auto &b : labels) {
                CHECK(decode(encode(a) + encode(b)) == oracle::product_label(a, b));
            }
        }
        CHECK_THROWS_AS(encode("X") + encode("XX"), Error);
    }

    TEST_CASE("symplectic form detects anticommuting matrices") {
        for (int n = 1; n <= 2; n++) {
            auto labels = oracle::all_labels(n);
            for (const auto &a : labels) {
                for (const auto &b : labels) {
                    CHECK(symplectic_form(encode(a), encode(b)) == (oracle::commute(a, b) ? 0 : 1));
                }
            }
        }
        // Sampled at three qubits.
        auto labels = oracle::all_labels(3);
        std::mt19937_64 rng(1);
        for (int i = 0; i < 300; i++) {
            const auto &a = labels[rng() % labels.size()];
            const auto &b = labels[rng() % labels.size()];
            CHECK(symplectic_form(encode(a), encode(b)) == (oracle::commute(a, b) ? 0 : 1));
        }
    }

    TEST_CASE("q0 detects antisymmetric matrices") {
        for (int n = 1; n <= 3; n++) {
            for (const auto &a : oracle::all_labels(n)) {
                CHECK(q0(encode(a)) == (oracle::symmetric(a) ? 0 : 1));
            }
        }
    }

    TEST_CASE("q0 polarizes to the symplectic form") {
        QubitCount n(3);
        for (std::uint64_t x = 0; x < 64; x++) {
            for (std::uint64_t y = 0; y < 64; y++) {
                PauliVector px(n, x), py(n, y);
                CHECK((q0(px + py) ^ q0(px) ^ q0(py)) == symplectic_form(px, py));
            }
        }
    }

    TEST_CASE("transvections preserve the form and are involutions") {
        QubitCount n(2);
        for (std::uint64_t p = 1; p < 16; p++) {
            PauliVector pv(n, p);
            for (std::uint64_t x = 0; x < 16; x++) {
                PauliVector tx = transvect(pv, PauliVector(n, x));
                CHECK(transvect(pv, tx) == PauliVector(n, x));
                for (std::uint64_t y = 0; y < 16; y++) {
                    PauliVector ty = transvect(pv, PauliVector(n, y));
                    CHECK(symplectic_form(tx, ty) == symplectic_form(PauliVector(n, x), PauliVector(n, y)));
                }
            }
        }
    }

    TEST_CASE("arf and Q_p") {
        QubitCount n(2);
        PauliVector p = encode("YI");
        CHECK(arf(p) == 1);
        CHECK(arf(encode("YY")) == 0);
        for (std::uint64_t x = 0; x < 16; x++) {
            PauliVector xv(n, x);
            CHECK(qp(p, xv) == (q0(xv) ^ symplectic_form(p, xv)));
        }
    }

    TEST_CASE("matrix arithmetic") {
        Gf2Matrix i4 = Gf2Matrix::identity(4);
        Gf2Matrix j = Gf2Matrix::symplectic_form_matrix(QubitCount(2));
        CHECK(j * j == i4);
        CHECK(j.transpose() == j);
        CHECK(j.at(0, 1) == 1);
        CHECK(j.at(0, 2) == 0);
        Gf2Matrix m(2, 3);
        m.set(0, 2, 1);
        CHECK(m.transpose().at(2, 0) == 1);
        CHECK_THROWS_AS(m * m, Error);
        CHECK(i4.apply(encode("XZ")) == encode("XZ"));
        // Applying J swaps a_i and b_i on each qubit.
        CHECK(j.apply(encode("XZ")) == encode("ZX"));
    }

    TEST_CASE("from_columns reproduces the map") {
        QubitCount n(2);
        PauliVector p = encode("XY");
        std::vector<PauliVector> cols;
        for (int i = 0; i < 4; i++) {
            cols.push_back(transvect(p, PauliVector(n, std::uint64_t{1} << gf2::coordinate_bit(2, i))));
        }
        Gf2Matrix m = Gf2Matrix::from_columns(cols);
        for (std::uint64_t x = 0; x < 16; x++) {
            CHECK(m.apply(PauliVector(n, x)) == transvect(p, PauliVector(n, x)));
        }
    }

    TEST_CASE("rank") {
        std::vector<std::uint64_t> v{1, 2, 3, 4};
        CHECK(gf2::rank(v) == 3);
        std::vector<std::uint64_t> none;
        CHECK(gf2::rank(none) == 0);
    }

    TEST_CASE("symplectic basis") {
        std::vector<PauliVector> span{encode("ZII"), encode("XII"), encode("IZI"), encode("IXI"), encode("YYI")};
        auto basis = symplectic_basis(span);
        REQUIRE(basis.size() == 4);
        for (size_t i = 0; i < basis.size(); i++) {
            for (size_t j = 0; j < basis.size(); j++) {
                int expected = (i / 2 == j / 2 && i != j) ? 1 : 0;
                CHECK(symplectic_form(basis[i], basis[j]) == expected);
            }
        }
        std::vector<PauliVector> degenerate{encode("ZI"), encode("IZ")};
        CHECK_THROWS_AS(symplectic_basis(degenerate), Error);
    }
}
