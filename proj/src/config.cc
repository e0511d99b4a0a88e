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

#include "veldkamp/config.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string_view>

namespace veldkamp {

namespace {

int read_max_qubits() {
    const char *raw = std::getenv("VELDKAMP_NMAX");
    if (raw == nullptr) {
        return kDefaultMaxQubits;
    }
    std::string_view text(raw);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 1 || value > kAbsoluteMaxQubits) {
        return kDefaultMaxQubits;
    }
    return value;
}

}  // namespace

int max_qubits() {
    static const int value = read_max_qubits();
    return value;
}

int census_max_qubits() {
    return std::min(kDefaultCensusMaxQubits, max_qubits());
}

}  // namespace veldkamp
