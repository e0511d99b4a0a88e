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

#include "veldkamp/gf2.h"

#include <algorithm>

#include "veldkamp/config.h"
#include "veldkamp/error.h"

namespace veldkamp {

QubitCount::QubitCount(int n) : n_(n) {
    if (n < 1 || n > max_qubits()) {
        fail(ErrorCode::kOutOfRange,
             "qubit count " + std::to_string(n) + " outside [1, " + std::to_string(max_qubits()) + "]");
    }
}

int gf2::rank(std::span<const std::uint64_t> vectors) {
    std::vector<std::uint64_t> pivots;  // kept sorted by leading bit, descending
    for (std::uint64_t v : vectors) {
        for (std::uint64_t p : pivots) {
            v = std::min(v, v ^ p);
        }
        if (v != 0) {
            pivots.push_back(v);
            std::sort(pivots.begin(), pivots.end(), std::greater<>());
        }
    }
    return static_cast<int>(pivots.size());
}

PauliVector::PauliVector(QubitCount n, std::uint64_t bits) : n_(n), bits_(bits) {
    if ((bits & ~n.mask()) != 0) {
        fail(ErrorCode::kInvalidArgument, "vector has bits beyond position 2n-1 for n=" + std::to_string(n.value()));
    }
}

PauliVector PauliVector::from_coordinates(std::span<const int> coordinates) {
    if (coordinates.empty() || coordinates.size() % 2 != 0) {
        fail(ErrorCode::kInvalidArgument, "coordinate sequence must have even, nonzero length");
    }
    QubitCount n(static_cast<int>(coordinates.size() / 2));
    std::uint64_t bits = 0;
    for (size_t i = 0; i < coordinates.size(); i++) {
        if (coordinates[i] != 0 && coordinates[i] != 1) {
            fail(ErrorCode::kInvalidArgument, "coordinates must be 0 or 1");
        }
        if (coordinates[i]) {
            bits |= std::uint64_t{1} << gf2::coordinate_bit(n.value(), static_cast<int>(i));
        }
    }
    return PauliVector(n, bits);
}

int PauliVector::coordinate(int i) const {
    if (i < 0 || i >= n_.dimension()) {
        fail(ErrorCode::kOutOfRange, "coordinate index " + std::to_string(i) + " out of range");
    }
    return static_cast<int>((bits_ >> gf2::coordinate_bit(n(), i)) & 1);
}

std::vector<int> PauliVector::coordinates() const {
    std::vector<int> out(n_.dimension());
    for (int i = 0; i < n_.dimension(); i++) {
        out[i] = coordinate(i);
    }
    return out;
}

PauliVector PauliVector::operator+(const PauliVector &other) const {
    require_same_space(*this, other);
    return PauliVector(n_, bits_ ^ other.bits_);
}

void require_same_space(const PauliVector &x, const PauliVector &y) {
    if (x.qubits() != y.qubits()) {
        fail(ErrorCode::kDimensionMismatch,
             "vectors from V_" + std::to_string(x.n()) + " and V_" + std::to_string(y.n()));
    }
}

int symplectic_form(const PauliVector &x, const PauliVector &y) {
    require_same_space(x, y);
    return gf2::form(x.bits(), y.bits());
}

int q0(const PauliVector &x) {
    return gf2::q0(x.bits());
}

int qp(const PauliVector &p, const PauliVector &x) {
    require_same_space(p, x);
    return gf2::qp(p.bits(), x.bits());
}

int arf(const PauliVector &p) {
    return q0(p);
}

PauliVector transvect(const PauliVector &p, const PauliVector &x) {
    require_same_space(p, x);
    return PauliVector(x.qubits(), gf2::transvect(p.bits(), x.bits()));
}

Gf2Matrix::Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0 || cols > 64) {
        fail(ErrorCode::kInvalidArgument, "matrix shape must have 0..64 columns");
    }
    row_bits_.assign(rows, 0);
}

Gf2Matrix Gf2Matrix::identity(int size) {
    Gf2Matrix m(size, size);
    for (int i = 0; i < size; i++) {
        m.set(i, i, 1);
    }
    return m;
}

Gf2Matrix Gf2Matrix::symplectic_form_matrix(QubitCount n) {
    Gf2Matrix j(n.dimension(), n.dimension());
    for (int i = 0; i < n.value(); i++) {
        j.set(2 * i, 2 * i + 1, 1);
        j.set(2 * i + 1, 2 * i, 1);
    }
    return j;
}

Gf2Matrix Gf2Matrix::from_columns(std::span<const PauliVector> images) {
    if (images.empty()) {
        fail(ErrorCode::kInvalidArgument, "need at least one column");
    }
    int dim = images[0].qubits().dimension();
    if (static_cast<int>(images.size()) != dim) {
        fail(ErrorCode::kDimensionMismatch, "a linear map on V_n needs exactly 2n columns");
    }
    Gf2Matrix m(dim, dim);
    for (int c = 0; c < dim; c++) {
        require_same_space(images[0], images[c]);
        for (int r = 0; r < dim; r++) {
            m.set(r, c, images[c].coordinate(r));
        }
    }
    return m;
}

int Gf2Matrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        fail(ErrorCode::kOutOfRange, "matrix index out of range");
    }
    return static_cast<int>((row_bits_[r] >> c) & 1);
}

void Gf2Matrix::set(int r, int c, int value) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        fail(ErrorCode::kOutOfRange, "matrix index out of range");
    }
    std::uint64_t bit = std::uint64_t{1} << c;
    row_bits_[r] = value ? (row_bits_[r] | bit) : (row_bits_[r] & ~bit);
}

Gf2Matrix Gf2Matrix::transpose() const {
    if (rows_ > 64) {
        fail(ErrorCode::kInvalidArgument, "transpose would exceed 64 columns");
    }
    Gf2Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; r++) {
        for (int c = 0; c < cols_; c++) {
            if ((row_bits_[r] >> c) & 1) {
                t.row_bits_[c] |= std::uint64_t{1} << r;
            }
        }
    }
    return t;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix &other) const {
    if (cols_ != other.rows_) {
        fail(ErrorCode::kDimensionMismatch, "matrix product shape mismatch");
    }
    Gf2Matrix out(rows_, other.cols_);
    for (int r = 0; r < rows_; r++) {
        std::uint64_t acc = 0;
        for (int k = 0; k < cols_; k++) {
            if ((row_bits_[r] >> k) & 1) {
                acc ^= other.row_bits_[k];
            }
        }
        out.row_bits_[r] = acc;
    }
    return out;
}

PauliVector Gf2Matrix::apply(const PauliVector &x) const {
    int dim = x.qubits().dimension();
    if (rows_ != dim || cols_ != dim) {
        fail(ErrorCode::kDimensionMismatch, "matrix does not act on V_" + std::to_string(x.n()));
    }
    std::uint64_t out = 0;
    for (int r = 0; r < dim; r++) {
        int acc = 0;
        for (int c = 0; c < dim; c++) {
            acc ^= ((row_bits_[r] >> c) & 1) & x.coordinate(c);
        }
        if (acc) {
            out |= std::uint64_t{1} << gf2::coordinate_bit(x.n(), r);
        }
    }
    return PauliVector(x.qubits(), out);
}

std::string Gf2Matrix::to_string() const {
    std::string out;
    for (int r = 0; r < rows_; r++) {
        for (int c = 0; c < cols_; c++) {
            out.push_back(((row_bits_[r] >> c) & 1) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

std::vector<PauliVector> symplectic_basis(std::span<const PauliVector> spanning) {
    if (spanning.empty()) {
        return {};
    }
    QubitCount n = spanning[0].qubits();
    std::vector<std::uint64_t> pool;
    for (const auto &v : spanning) {
        require_same_space(spanning[0], v);
        std::uint64_t w = v.bits();
        for (std::uint64_t p : pool) {
            w = std::min(w, w ^ p);
        }
        if (w != 0) {
            pool.push_back(w);
            std::sort(pool.begin(), pool.end(), std::greater<>());
        }
    }

    std::vector<PauliVector> basis;
    while (!pool.empty()) {
        std::uint64_t e = pool.front();
        auto partner = std::find_if(pool.begin() + 1, pool.end(), [&](std::uint64_t v) { return gf2::form(e, v) == 1; });
        if (partner == pool.end()) {
            fail(ErrorCode::kInvalidArgument, "span is degenerate; no symplectic basis exists");
        }
        std::uint64_t f = *partner;
        pool.erase(partner);
        pool.erase(pool.begin());
        // Project the rest onto the complement of span{e, f}.
        std::vector<std::uint64_t> rest;
        for (std::uint64_t v : pool) {
            std::uint64_t w = v;
            if (gf2::form(v, f)) {
                w ^= e;
            }
            if (gf2::form(v, e)) {
                w ^= f;
            }
            if (w != 0) {
                rest.push_back(w);
            }
        }
        pool = std::move(rest);
        basis.emplace_back(n, e);
        basis.emplace_back(n, f);
    }
    return basis;
}

}  // namespace veldkamp
