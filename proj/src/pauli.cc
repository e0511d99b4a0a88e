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

#include "veldkamp/pauli.h"

#include "veldkamp/config.h"
#include "veldkamp/error.h"

namespace veldkamp {

namespace {

// Indexed by the 2-bit code (a << 1 | b).
constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};

int letter_code(char c) {
    switch (c) {
        case 'I':
            return 0;
        case 'X':
            return 1;
        case 'Z':
            return 2;
        case 'Y':
            return 3;
        default:
            return -1;
    }
}

using Mat2 = std::array<std::array<int, 2>, 2>;

Mat2 mul(const Mat2 &x, const Mat2 &y) {
    Mat2 out{};
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    return out;
}

std::array<std::array<int, 4>, 4> build_sign_table() {
    const Mat2 id{{{1, 0}, {0, 1}}};
    const Mat2 x{{{0, 1}, {1, 0}}};
    const Mat2 z{{{1, 0}, {0, -1}}};
    const std::array<Mat2, 4> mats = {id, x, z, mul(z, x)};

    std::array<std::array<int, 4>, 4> table{};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            Mat2 product = mul(mats[i], mats[j]);
            const Mat2 &target = mats[i ^ j];
            int sign = 0;
            for (int s : {1, -1}) {
                bool match = true;
                for (int r = 0; r < 2; r++) {
                    for (int c = 0; c < 2; c++) {
                        match = match && product[r][c] == s * target[r][c];
                    }
                }
                if (match) {
                    sign = s;
                }
            }
            if (sign == 0) {
                fail(ErrorCode::kInternal, "single-qubit product is not a signed Pauli matrix");
            }
            table[i][j] = sign;
        }
    }
    return table;
}

}  // namespace

PauliVector encode(std::string_view label) {
    if (label.empty()) {
        fail(ErrorCode::kParse, "empty Pauli label");
    }
    if (label.size() > static_cast<size_t>(kAbsoluteMaxQubits)) {
        fail(ErrorCode::kOutOfRange, "Pauli label too long");
    }
    return encode(label, QubitCount(static_cast<int>(label.size())));
}

PauliVector encode(std::string_view label, QubitCount n) {
    if (label.size() != static_cast<size_t>(n.value())) {
        fail(ErrorCode::kParse, "label '" + std::string(label) + "' does not have " + std::to_string(n.value()) +
                                    " letters");
    }
    std::uint64_t bits = 0;
    for (char c : label) {
        int code = letter_code(c);
        if (code < 0) {
            fail(ErrorCode::kParse, "invalid Pauli letter '" + std::string(1, c) + "' in '" + std::string(label) + "'");
        }
        bits = (bits << 2) | static_cast<std::uint64_t>(code);
    }
    return PauliVector(n, bits);
}

std::string decode(const PauliVector &v) {
    std::string out(v.n(), 'I');
    for (int q = 0; q < v.n(); q++) {
        out[q] = kLetters[(v.bits() >> (2 * (v.n() - 1 - q))) & 3];
    }
    return out;
}

SignedPauli::SignedPauli(int sign, PauliVector vector) : sign_(sign), vector_(vector) {
    if (sign != 1 && sign != -1) {
        fail(ErrorCode::kInvalidArgument, "sign must be +1 or -1");
    }
}

SignedPauli SignedPauli::parse(std::string_view text) {
    int sign = 1;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        sign = text.front() == '-' ? -1 : 1;
        text.remove_prefix(1);
    }
    return SignedPauli(sign, encode(text));
}

std::string SignedPauli::to_string() const {
    return (sign_ < 0 ? "-" : "") + label();
}

const std::array<std::array<int, 4>, 4> &single_qubit_sign_table() {
    static const auto table = build_sign_table();
    return table;
}

SignedPauli multiply(const SignedPauli &a, const SignedPauli &b) {
    require_same_space(a.vector(), b.vector());
    const auto &table = single_qubit_sign_table();
    int sign = a.sign() * b.sign();
    std::uint64_t x = a.vector().bits();
    std::uint64_t y = b.vector().bits();
    for (int q = 0; q < a.vector().n(); q++) {
        sign *= table[(x >> (2 * q)) & 3][(y >> (2 * q)) & 3];
    }
    return SignedPauli(sign, PauliVector(a.vector().qubits(), x ^ y));
}

}  // namespace veldkamp
