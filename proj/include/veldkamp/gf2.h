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

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "veldkamp/error.h"

namespace veldkamp {

/// Number of qubits n; the symplectic space V_n has dimension 2n.
class QubitCount {
   public:
    /// Throws kOutOfRange unless 1 <= n <= max_qubits().
    explicit QubitCount(int n);

    int value() const noexcept {
        return n_;
    }
    int dimension() const noexcept {
        return 2 * n_;
    }
    /// |V_n| = 4^n.
    std::uint64_t space_size() const noexcept {
        return std::uint64_t{1} << (2 * n_);
    }
    /// |P| = 4^n - 1.
    std::uint64_t point_count() const noexcept {
        return space_size() - 1;
    }
    /// All 2n coordinate bits set.
    std::uint64_t mask() const noexcept {
        return space_size() - 1;
    }

    auto operator<=>(const QubitCount &) const = default;

   private:
    int n_;
};

/// Word-level primitives on packed vectors. Coordinates (a1,b1,...,an,bn) are
/// packed MSB first: a1 sits at bit 2n-1 and bn at bit 0, so every a_i is on
/// an odd bit and every b_i on the even bit just below it. No dimension checks.
namespace gf2 {

inline constexpr std::uint64_t kEvenBits = 0x5555555555555555ULL;

inline int parity(std::uint64_t x) noexcept {
    return std::popcount(x) & 1;
}

/// Sum over qubits of a_i(x) b_i(y) + b_i(x) a_i(y).
inline int form(std::uint64_t x, std::uint64_t y) noexcept {
    std::uint64_t xa = (x >> 1) & kEvenBits;
    std::uint64_t xb = x & kEvenBits;
    std::uint64_t ya = (y >> 1) & kEvenBits;
    std::uint64_t yb = y & kEvenBits;
    return parity((xa & yb) ^ (xb & ya));
}

/// Q0(x) = sum of a_i b_i.
inline int q0(std::uint64_t x) noexcept {
    return parity((x >> 1) & x & kEvenBits);
}

inline int qp(std::uint64_t p, std::uint64_t x) noexcept {
    return q0(x) ^ form(p, x);
}

inline std::uint64_t transvect(std::uint64_t p, std::uint64_t x) noexcept {
    return form(p, x) ? x ^ p : x;
}

/// Bit position of coordinate index i (0-based over a1,b1,...) in V_n.
inline int coordinate_bit(int n, int i) noexcept {
    return 2 * n - 1 - i;
}

/// Dimension of the span of the given vectors.
int rank(std::span<const std::uint64_t> vectors);

}  // namespace gf2

/// An element of V_n = Z_2^{2n}: the image of a Pauli operator in the central
/// quotient. The zero vector (identity) is valid here.
class PauliVector {
   public:
    /// Throws kInvalidArgument if bits has anything set above position 2n-1.
    PauliVector(QubitCount n, std::uint64_t bits);

    static PauliVector zero(QubitCount n) {
        return PauliVector(n, 0);
    }
    /// From the coordinate sequence (a1,b1,...,an,bn); each entry 0 or 1.
    static PauliVector from_coordinates(std::span<const int> coordinates);

    QubitCount qubits() const noexcept {
        return n_;
    }
    int n() const noexcept {
        return n_.value();
    }
    std::uint64_t bits() const noexcept {
        return bits_;
    }
    bool is_zero() const noexcept {
        return bits_ == 0;
    }
    /// Coordinate i of (a1,b1,...,an,bn), 0-based.
    int coordinate(int i) const;
    std::vector<int> coordinates() const;

    /// Vector addition; throws kDimensionMismatch across qubit counts.
    PauliVector operator+(const PauliVector &other) const;

    bool operator==(const PauliVector &) const = default;
    auto operator<=>(const PauliVector &) const = default;

   private:
    QubitCount n_;
    std::uint64_t bits_;
};

/// Throws kDimensionMismatch when x and y live in different V_n.
void require_same_space(const PauliVector &x, const PauliVector &y);

/// 0 iff the corresponding Pauli operators commute.
int symplectic_form(const PauliVector &x, const PauliVector &y);

/// 0 iff the Pauli matrix is symmetric (even number of Y factors).
int q0(const PauliVector &x);

/// Q_p(x) = Q0(x) + <p, x>.
int qp(const PauliVector &p, const PauliVector &x);

/// Arf invariant of Q_p, which is Q0(p).
int arf(const PauliVector &p);

/// t_p(x) = x + <p, x> p.
PauliVector transvect(const PauliVector &p, const PauliVector &x);

/// Dense matrix over GF(2) with at most 64 columns. Entry (r, c) is bit c of
/// row r. Indices follow coordinate order (a1,b1,...), not packed bit order.
class Gf2Matrix {
   public:
    Gf2Matrix(int rows, int cols);

    static Gf2Matrix identity(int size);
    /// Gram matrix of the symplectic form: block diagonal [[0,1],[1,0]].
    static Gf2Matrix symplectic_form_matrix(QubitCount n);
    /// Matrix whose column j is images[j], for a linear map on V_n.
    static Gf2Matrix from_columns(std::span<const PauliVector> images);

    int rows() const noexcept {
        return rows_;
    }
    int cols() const noexcept {
        return cols_;
    }
    int at(int r, int c) const;
    void set(int r, int c, int value);

    Gf2Matrix transpose() const;
    Gf2Matrix operator*(const Gf2Matrix &other) const;
    bool operator==(const Gf2Matrix &) const = default;

    /// Matrix-vector product; requires a square 2n x 2n matrix.
    PauliVector apply(const PauliVector &x) const;

    std::string to_string() const;

   private:
    int rows_;
    int cols_;
    std::vector<std::uint64_t> row_bits_;
};

/// Returns the standard-ordered symplectic basis (e1, f1, e2, f2, ...) of the
/// span of the given vectors, with <e_i, f_i> = 1 and all other pairs 0.
/// Throws kInvalidArgument if the span is degenerate.
std::vector<PauliVector> symplectic_basis(std::span<const PauliVector> spanning);

}  // namespace veldkamp
