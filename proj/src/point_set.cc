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

#include "veldkamp/point_set.h"

#include "veldkamp/error.h"

namespace veldkamp {

namespace {

size_t word_count(QubitCount n) {
    return static_cast<size_t>((n.space_size() + 63) / 64);
}

}  // namespace

PointSet::PointSet(QubitCount n) : n_(n), words_(word_count(n), 0) {
}

PointSet PointSet::all_points(QubitCount n) {
    PointSet s(n);
    std::uint64_t size = n.space_size();
    if (size >= 64) {
        for (auto &w : s.words_) {
            w = ~std::uint64_t{0};
        }
    } else {
        s.words_[0] = (std::uint64_t{1} << size) - 1;
    }
    s.erase(0);
    return s;
}

bool PointSet::contains(const PauliVector &v) const {
    if (v.qubits() != n_) {
        fail(ErrorCode::kDimensionMismatch, "point and set live in different V_n");
    }
    return contains(v.bits());
}

size_t PointSet::size() const noexcept {
    size_t total = 0;
    for (std::uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

size_t PointSet::intersection_size(const PointSet &other) const {
    require_same_space(other);
    size_t total = 0;
    for (size_t i = 0; i < words_.size(); i++) {
        total += std::popcount(words_[i] & other.words_[i]);
    }
    return total;
}

bool PointSet::is_subset_of(const PointSet &other) const {
    require_same_space(other);
    for (size_t i = 0; i < words_.size(); i++) {
        if (words_[i] & ~other.words_[i]) {
            return false;
        }
    }
    return true;
}

PointSet &PointSet::operator&=(const PointSet &other) {
    require_same_space(other);
    for (size_t i = 0; i < words_.size(); i++) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

PointSet &PointSet::operator|=(const PointSet &other) {
    require_same_space(other);
    for (size_t i = 0; i < words_.size(); i++) {
        words_[i] |= other.words_[i];
    }
    return *this;
}

PointSet &PointSet::operator^=(const PointSet &other) {
    require_same_space(other);
    for (size_t i = 0; i < words_.size(); i++) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

PointSet PointSet::complement() const {
    PointSet out = all_points(n_);
    for (size_t i = 0; i < words_.size(); i++) {
        out.words_[i] &= ~words_[i];
    }
    return out;
}

std::vector<std::uint64_t> PointSet::to_vector() const {
    std::vector<std::uint64_t> out;
    out.reserve(size());
    for_each([&](std::uint64_t v) { out.push_back(v); });
    return out;
}

void PointSet::require_same_space(const PointSet &other) const {
    if (other.n_ != n_) {
        fail(ErrorCode::kDimensionMismatch, "point sets from different V_n");
    }
}

}  // namespace veldkamp
