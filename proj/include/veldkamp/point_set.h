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
#include <cstdint>
#include <span>
#include <vector>

#include "veldkamp/gf2.h"

namespace veldkamp {

/// Subset of V_n stored as a bitset indexed by the packed vector value
/// (4^n bits). Geometric point sets never contain bit 0.
class PointSet {
   public:
    explicit PointSet(QubitCount n);

    /// P = V_n minus the zero vector.
    static PointSet all_points(QubitCount n);

    QubitCount qubits() const noexcept {
        return n_;
    }

    bool contains(std::uint64_t v) const noexcept {
        return (words_[v >> 6] >> (v & 63)) & 1;
    }
    bool contains(const PauliVector &v) const;
    void insert(std::uint64_t v) noexcept {
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void erase(std::uint64_t v) noexcept {
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    size_t size() const noexcept;
    bool empty() const noexcept {
        return size() == 0;
    }
    size_t intersection_size(const PointSet &other) const;
    bool is_subset_of(const PointSet &other) const;

    PointSet &operator&=(const PointSet &other);
    PointSet &operator|=(const PointSet &other);
    PointSet &operator^=(const PointSet &other);
    friend PointSet operator&(PointSet a, const PointSet &b) {
        return a &= b;
    }
    friend PointSet operator|(PointSet a, const PointSet &b) {
        return a |= b;
    }
    friend PointSet operator^(PointSet a, const PointSet &b) {
        return a ^= b;
    }
    /// P minus this set.
    PointSet complement() const;

    bool operator==(const PointSet &) const = default;

    template <typename F>
    void for_each(F &&f) const {
        for (size_t w = 0; w < words_.size(); w++) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int b = std::countr_zero(bits);
                f(static_cast<std::uint64_t>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    /// Members in ascending packed order.
    std::vector<std::uint64_t> to_vector() const;

    std::span<const std::uint64_t> words() const noexcept {
        return words_;
    }

   private:
    void require_same_space(const PointSet &other) const;

    QubitCount n_;
    std::vector<std::uint64_t> words_;
};

}  // namespace veldkamp
