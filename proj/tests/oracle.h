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

// Reference computations for the tests. Operators are dense integer matrices
// built as Kronecker products of the 2x2 real Paulis, and everything else is
// done by brute force over labels, so nothing here shares code with the
// bit-packed library.

#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

struct Matrix {
    int dim = 0;
    std::vector<int> v;

    int &at(int r, int c) {
        return v[r * dim + c];
    }
    int at(int r, int c) const {
        return v[r * dim + c];
    }
    bool operator==(const Matrix &) const = default;
};

inline Matrix single(char letter) {
    Matrix m{2, {0, 0, 0, 0}};
    switch (letter) {
        case 'I':
            m.v = {1, 0, 0, 1};
            break;
        case 'X':
            m.v = {0, 1, 1, 0};
            break;
        case 'Z':
            m.v = {1, 0, 0, -1};
            break;
        case 'Y':
            // Y = ZX, real and antisymmetric.
            m.v = {0, 1, -1, 0};
            break;
    }
    return m;
}

inline Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out{a.dim * b.dim, std::vector<int>(a.dim * b.dim * a.dim * b.dim)};
    for (int i = 0; i < a.dim; i++) {
        for (int j = 0; j < a.dim; j++) {
            for (int k = 0; k < b.dim; k++) {
                for (int l = 0; l < b.dim; l++) {
                    out.at(i * b.dim + k, j * b.dim + l) = a.at(i, j) * b.at(k, l);
                }
            }
        }
    }
    return out;
}

inline Matrix matrix(const std::string &label) {
    Matrix m{1, {1}};
    for (char c : label) {
        m = kron(m, single(c));
    }
    return m;
}

inline Matrix mul(const Matrix &a, const Matrix &b) {
    Matrix out{a.dim, std::vector<int>(a.dim * a.dim, 0)};
    for (int i = 0; i < a.dim; i++) {
        for (int k = 0; k < a.dim; k++) {
            if (a.at(i, k) == 0) {
                continue;
            }
            for (int j = 0; j < a.dim; j++) {
                out.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    }
    return out;
}

inline Matrix negate(Matrix m) {
    for (int &x : m.v) {
        x = -x;
    }
    return m;
}

inline Matrix transpose(const Matrix &m) {
    Matrix out = m;
    for (int i = 0; i < m.dim; i++) {
        for (int j = 0; j < m.dim; j++) {
            out.at(i, j) = m.at(j, i);
        }
    }
    return out;
}

inline bool commute(const std::string &a, const std::string &b) {
    Matrix ma = matrix(a), mb = matrix(b);
    return mul(ma, mb) == mul(mb, ma);
}

inline bool symmetric(const std::string &label) {
    Matrix m = matrix(label);
    return transpose(m) == m;
}

/// Every label of length n, I...I first, in base-4 order over "IXZY".
inline std::vector<std::string> all_labels(int n) {
    std::vector<std::string> out{""};
    for (int q = 0; q < n; q++) {
        std::vector<std::string> next;
        for (const auto &s : out) {
            for (char c : std::string("IXZY")) {
                next.push_back(s + c);
            }
        }
        out = std::move(next);
    }
    return out;
}

inline std::string identity_label(int n) {
    return std::string(n, 'I');
}

/// Letterwise product ignoring signs.
inline std::string product_label(const std::string &a, const std::string &b) {
    auto code = [](char c) { return c == 'I' ? 0 : c == 'X' ? 1 : c == 'Z' ? 2 : 3; };
    const char *letters = "IXZY";
    std::string out;
    for (size_t i = 0; i < a.size(); i++) {
        out += letters[code(a[i]) ^ code(b[i])];
    }
    return out;
}

inline int weight(const std::string &label) {
    int w = 0;
    for (char c : label) {
        w += c != 'I';
    }
    return w;
}

/// Non-identity labels that commute with every label in `with` (operator
/// commutation, computed on matrices).
inline std::vector<std::string> commutant(int n, const std::vector<std::string> &with) {
    std::vector<std::string> out;
    for (const auto &s : all_labels(n)) {
        if (s == identity_label(n)) {
            continue;
        }
        bool ok = true;
        for (const auto &w : with) {
            ok = ok && commute(s, w);
        }
        if (ok) {
            out.push_back(s);
        }
    }
    return out;
}

/// Line count by brute force: unordered pairs of distinct commuting
/// non-identity operators, divided by the three pairs on each line.
inline std::uint64_t line_count(int n) {
    auto labels = all_labels(n);
    std::uint64_t pairs = 0;
    for (size_t i = 1; i < labels.size(); i++) {
        for (size_t j = i + 1; j < labels.size(); j++) {
            pairs += commute(labels[i], labels[j]);
        }
    }
    return pairs / 3;
}

}  // namespace oracle
