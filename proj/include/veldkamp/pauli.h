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
#include <cstdint>
#include <string>
#include <string_view>

#include "veldkamp/gf2.h"

namespace veldkamp {

/// Parses a label over {I, X, Y, Z}; n is the label length.
/// Per qubit: I -> (0,0), X -> (0,1), Z -> (1,0), Y -> (1,1).
PauliVector encode(std::string_view label);

/// As above, but the label must have exactly n letters.
PauliVector encode(std::string_view label, QubitCount n);

std::string decode(const PauliVector &v);

/// A real Pauli operator: +/- a tensor product of I, X, Y=ZX, Z.
class SignedPauli {
   public:
    SignedPauli(int sign, PauliVector vector);

    /// Accepts an optional leading '+' or '-' followed by the letters.
    static SignedPauli parse(std::string_view text);

    int sign() const noexcept {
        return sign_;
    }
    const PauliVector &vector() const noexcept {
        return vector_;
    }
    std::string label() const {
        return decode(vector_);
    }
    /// Canonical text: "-" prefix for negative operators, nothing for positive.
    std::string to_string() const;

    bool operator==(const SignedPauli &) const = default;

   private:
    int sign_;
    PauliVector vector_;
};

/// Matrix product of two real Pauli operators.
SignedPauli multiply(const SignedPauli &a, const SignedPauli &b);

/// sign[i][j] with A_i A_j = sign * A_{i xor j}, indexed by the 2-bit
/// code (a << 1 | b). Derived once from the explicit 2x2 matrices.
const std::array<std::array<int, 4>, 4> &single_qubit_sign_table();

}  // namespace veldkamp
