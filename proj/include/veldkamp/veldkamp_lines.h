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
#include <optional>
#include <string>
#include <vector>

#include "veldkamp/hyperplanes.h"

namespace veldkamp {

/// The five Sp(2n,2)-orbits of Veldkamp lines.
enum class VeldkampLineType : std::uint8_t {
    kCccIsotropic = 0,   // C_a, C_b, C_{a+b} with <a,b> = 0
    kCccHyperbolic = 1,  // C_a, C_b, C_{a+b} with <a,b> = 1
    kCH0H0 = 2,          // one perp-set, two arf-0 quadrics
    kCH0H1 = 3,          // one perp-set, one quadric of each arf
    kCH1H1 = 4,          // one perp-set, two arf-1 quadrics
};

inline constexpr std::array<VeldkampLineType, 5> kAllVeldkampLineTypes = {
    VeldkampLineType::kCccIsotropic, VeldkampLineType::kCccHyperbolic, VeldkampLineType::kCH0H0,
    VeldkampLineType::kCH0H1, VeldkampLineType::kCH1H1};

const char *to_string(VeldkampLineType type);
VeldkampLineType parse_veldkamp_line_type(std::string_view text);

/// Number of (perp, arf-0 quadric, arf-1 quadric) members.
std::array<int, 3> composition(VeldkampLineType type);
/// "3/0/0" style rendering of composition().
std::string composition_string(VeldkampLineType type);

/// Size of A ∩ B for any two members of a line of the given type.
std::uint64_t core_size_formula(QubitCount n, VeldkampLineType type);

/// Number of lines of the given type in V(G_n), n >= 2.
std::uint64_t line_copies_formula(QubitCount n, VeldkampLineType type);

/// (2^(2n+1) - 1)(2^(2n) - 1)/3: every pair of hyperplanes, three pairs per line.
std::uint64_t veldkamp_line_total(QubitCount n);

/// Type of the triple {a, b, c}; throws kInternal for a composition outside
/// the five known rows.
VeldkampLineType line_type(const HyperplaneKind &a, const HyperplaneKind &b, const HyperplaneKind &c);

/// The triple {A, B, A ⊞ B} together with the common intersection.
class VeldkampLine {
   public:
    /// Members sorted canonically.
    const std::array<HyperplaneKind, 3> &members() const noexcept {
        return members_;
    }
    const PointSet &core() const noexcept {
        return core_;
    }
    QubitCount qubits() const noexcept {
        return core_.qubits();
    }

   private:
    friend VeldkampLine veldkamp_line(const Hyperplane &a, const Hyperplane &b);

    VeldkampLine(std::array<HyperplaneKind, 3> members, PointSet core)
        : members_(std::move(members)), core_(std::move(core)) {
    }

    std::array<HyperplaneKind, 3> members_;
    PointSet core_;
};

/// Requires a != b and n >= 2.
VeldkampLine veldkamp_line(const Hyperplane &a, const Hyperplane &b);

/// Throws kInternal when the core size disagrees with the type's formula.
VeldkampLineType classify_line(const VeldkampLine &line);

/// Dimension of the linear span of the core's points.
int core_span_dimension(const VeldkampLine &line);

/// For a CCC-hyperbolic line: a symplectic basis (e1, f1, ...) of the core's
/// span, giving the embedding V_{n-1} -> V_n with Z_i -> e_i, X_i -> f_i.
struct CoreEmbedding {
    std::vector<PauliVector> basis;
    std::uint64_t image_points = 0;      // points of G_{n-1} mapped into the core
    std::uint64_t lines_mapped = 0;      // lines of G_{n-1} whose image is a line inside the core
    std::uint64_t core_lines = 0;        // lines of G_n inside the core
    bool bijective_on_points = false;
    bool preserves_lines = false;

    bool is_isomorphism() const {
        return bijective_on_points && preserves_lines && lines_mapped == core_lines;
    }
};

/// Requires a CCC-hyperbolic line with n >= 2.
CoreEmbedding hyperbolic_core_embedding(const VeldkampLine &line);

struct CensusRow {
    VeldkampLineType type;
    std::uint64_t core_size = 0;            // formula value
    std::uint64_t pair_count = 0;           // unordered hyperplane pairs generating this type
    std::uint64_t line_count = 0;           // distinct triples
    std::uint64_t formula_count = 0;        // closed-form number of lines
    std::uint64_t core_size_violations = 0; // pairs whose core size missed the formula

    /// Three pairs per line, no core-size misses, and the line count agrees
    /// with the closed form.
    bool match() const {
        return pair_count == 3 * line_count && core_size_violations == 0 && line_count == formula_count;
    }
};

struct CensusTable {
    QubitCount n;
    std::array<CensusRow, 5> rows;
    std::uint64_t total_pairs = 0;
    std::uint64_t total_lines = 0;
    std::uint64_t closure_violations = 0;  // pairs where a third member failed to regenerate the others

    bool all_match() const;
    const CensusRow &row(VeldkampLineType type) const {
        return rows[static_cast<size_t>(type)];
    }
};

struct CensusOptions {
    /// 0 picks std::thread::hardware_concurrency().
    unsigned workers = 0;
    /// Defaults to census_max_qubits().
    int max_qubits = 0;
};

/// Scans every unordered pair of hyperplanes. Requires 2 <= n <= limit.
CensusTable census(QubitCount n, const CensusOptions &options = {});

enum class V2Mode { kExhaustive, kSampled };

struct V2Witness {
    HyperplaneKind a;
    HyperplaneKind b;
    HyperplaneKind c;  // contains A ∩ B but is not on the line through A and B
    std::vector<std::uint64_t> core;
    std::uint64_t c_cap_a = 0;
    std::uint64_t c_cap_b = 0;
};

struct V2Report {
    QubitCount n;
    V2Mode mode;
    std::uint64_t seed = 0;
    std::uint64_t pairs_checked = 0;
    std::uint64_t violations = 0;  // (pair, C) incidences with C outside the triple
    std::optional<V2Witness> first_violation;
    /// Two commuting perp-sets whose common line lies in an arf-0 quadric.
    std::optional<V2Witness> perp_pair_witness;

    bool holds() const {
        return violations == 0;
    }
};

/// Exhaustive mode scans every pair (n <= 4). Sampled mode draws sample_count
/// pairs from a seeded generator.
V2Report verify_v2(QubitCount n, V2Mode mode, std::uint64_t seed = 0, std::uint64_t sample_count = 10000);

inline constexpr int kMaxExhaustiveV2Qubits = 4;

}  // namespace veldkamp
