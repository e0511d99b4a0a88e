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

#include "veldkamp/veldkamp_lines.h"

#include <algorithm>
#include <random>
#include <thread>

#include "veldkamp/config.h"
#include "veldkamp/error.h"

namespace veldkamp {

const char *to_string(VeldkampLineType type) {
    switch (type) {
        case VeldkampLineType::kCccIsotropic:
            return "CCC-isotropic";
        case VeldkampLineType::kCccHyperbolic:
            return "CCC-hyperbolic";
        case VeldkampLineType::kCH0H0:
            return "CH0H0";
        case VeldkampLineType::kCH0H1:
            return "CH0H1";
        case VeldkampLineType::kCH1H1:
            return "CH1H1";
    }
    return "?";
}

VeldkampLineType parse_veldkamp_line_type(std::string_view text) {
    for (VeldkampLineType t : kAllVeldkampLineTypes) {
        if (text == to_string(t)) {
            return t;
        }
    }
    fail(ErrorCode::kParse, "unknown Veldkamp line type '" + std::string(text) + "'");
}

std::array<int, 3> composition(VeldkampLineType type) {
    switch (type) {
        case VeldkampLineType::kCccIsotropic:
        case VeldkampLineType::kCccHyperbolic:
            return {3, 0, 0};
        case VeldkampLineType::kCH0H0:
            return {1, 2, 0};
        case VeldkampLineType::kCH0H1:
            return {1, 1, 1};
        case VeldkampLineType::kCH1H1:
            return {1, 0, 2};
    }
    return {0, 0, 0};
}

std::string composition_string(VeldkampLineType type) {
    auto c = composition(type);
    return std::to_string(c[0]) + "/" + std::to_string(c[1]) + "/" + std::to_string(c[2]);
}

std::uint64_t core_size_formula(QubitCount n, VeldkampLineType type) {
    std::uint64_t four = n.space_size() / 4;             // 4^(n-1)
    std::uint64_t two = (std::uint64_t{1} << n.value()) / 2;  // 2^(n-1)
    switch (type) {
        case VeldkampLineType::kCccIsotropic:
        case VeldkampLineType::kCccHyperbolic:
        case VeldkampLineType::kCH0H1:
            return four - 1;
        case VeldkampLineType::kCH0H0:
            return four + two - 1;
        case VeldkampLineType::kCH1H1:
            return four - two - 1;
    }
    return 0;
}

std::uint64_t line_copies_formula(QubitCount n, VeldkampLineType type) {
    if (n.value() < 2) {
        fail(ErrorCode::kOutOfRange, "Veldkamp lines need n >= 2");
    }
    std::uint64_t four_n = n.space_size();
    std::uint64_t two_n = std::uint64_t{1} << n.value();
    std::uint64_t points = four_n - 1;
    switch (type) {
        case VeldkampLineType::kCccIsotropic:
            return points * (four_n / 4 - 1) / 3;
        case VeldkampLineType::kCccHyperbolic:
            return (four_n / 4) * points / 3;
        case VeldkampLineType::kCH0H0:
            // 2^(n-3) (4^n - 1)(2^n + 2), exact for n >= 2.
            return points * (two_n + 2) * two_n / 8;
        case VeldkampLineType::kCH0H1:
            return (four_n / 4) * points;
        case VeldkampLineType::kCH1H1:
            return points * (two_n - 2) * two_n / 8;
    }
    return 0;
}

std::uint64_t veldkamp_line_total(QubitCount n) {
    std::uint64_t hyperplanes = hyperplane_count(n);
    return hyperplanes * (hyperplanes - 1) / 6;
}

namespace {

// Raw (family, p) decoding of a canonical hyperplane index, for hot loops.
struct RawKind {
    bool perp;
    std::uint64_t p;
};

inline RawKind raw_kind(std::uint64_t index, std::uint64_t point_count) {
    if (index < point_count) {
        return {true, index + 1};
    }
    return {false, index - point_count};
}

inline std::uint64_t raw_index(const RawKind &k, std::uint64_t point_count) {
    return k.perp ? k.p - 1 : point_count + k.p;
}

inline RawKind raw_boxplus(const RawKind &a, const RawKind &b) {
    return {a.perp == b.perp, a.p ^ b.p};
}

// Returns -1 for a composition outside the five rows.
inline int raw_line_type(const RawKind &a, const RawKind &b, const RawKind &c) {
    int perps = a.perp + b.perp + c.perp;
    if (perps == 3) {
        return gf2::form(a.p, b.p) ? static_cast<int>(VeldkampLineType::kCccHyperbolic)
                                   : static_cast<int>(VeldkampLineType::kCccIsotropic);
    }
    if (perps != 1) {
        return -1;
    }
    int arf_sum = 0;
    for (const RawKind *k : {&a, &b, &c}) {
        if (!k->perp) {
            arf_sum += gf2::q0(k->p);
        }
    }
    return static_cast<int>(VeldkampLineType::kCH0H0) + arf_sum;
}

}  // namespace

VeldkampLineType line_type(const HyperplaneKind &a, const HyperplaneKind &b, const HyperplaneKind &c) {
    require_same_space(a.p(), b.p());
    require_same_space(a.p(), c.p());
    int t = raw_line_type({a.is_perp(), a.p().bits()}, {b.is_perp(), b.p().bits()}, {c.is_perp(), c.p().bits()});
    if (t < 0) {
        fail(ErrorCode::kInternal, "triple " + a.key() + ", " + b.key() + ", " + c.key() +
                                       " has no Veldkamp line composition");
    }
    return static_cast<VeldkampLineType>(t);
}

VeldkampLine veldkamp_line(const Hyperplane &a, const Hyperplane &b) {
    if (a.qubits().value() < 2) {
        fail(ErrorCode::kPrecondition, "Veldkamp lines need n >= 2");
    }
    Hyperplane c = boxplus(a, b);
    std::array<HyperplaneKind, 3> members = {a.kind(), b.kind(), c.kind()};
    std::sort(members.begin(), members.end());
    return VeldkampLine(members, a.points() & b.points());
}

VeldkampLineType classify_line(const VeldkampLine &line) {
    const auto &m = line.members();
    VeldkampLineType type = line_type(m[0], m[1], m[2]);
    if (line.core().size() != core_size_formula(line.qubits(), type)) {
        fail(ErrorCode::kInternal, std::string("core of size ") + std::to_string(line.core().size()) +
                                       " does not match the " + to_string(type) + " formula");
    }
    return type;
}

int core_span_dimension(const VeldkampLine &line) {
    std::vector<std::uint64_t> pts = line.core().to_vector();
    return gf2::rank(pts);
}

CoreEmbedding hyperbolic_core_embedding(const VeldkampLine &line) {
    if (classify_line(line) != VeldkampLineType::kCccHyperbolic) {
        fail(ErrorCode::kPrecondition, "core embedding needs a CCC-hyperbolic line");
    }
    QubitCount n = line.qubits();
    QubitCount smaller(n.value() - 1);
    std::vector<PauliVector> core_points;
    line.core().for_each([&](std::uint64_t v) { core_points.emplace_back(n, v); });

    CoreEmbedding out;
    out.basis = symplectic_basis(core_points);
    if (static_cast<int>(out.basis.size()) != smaller.dimension()) {
        fail(ErrorCode::kInternal, "core span has unexpected dimension");
    }
    // Coordinate i of V_{n-1} maps to basis[i]: a_k -> e_k, b_k -> f_k.
    auto embed = [&](std::uint64_t x) {
        std::uint64_t y = 0;
        for (int i = 0; i < smaller.dimension(); i++) {
            if ((x >> gf2::coordinate_bit(smaller.value(), i)) & 1) {
                y ^= out.basis[i].bits();
            }
        }
        return y;
    };

    PointSet image(n);
    for (std::uint64_t x = 1; x < smaller.space_size(); x++) {
        std::uint64_t y = embed(x);
        if (y != 0 && line.core().contains(y) && !image.contains(y)) {
            out.image_points++;
        }
        image.insert(y);
    }
    out.bijective_on_points = out.image_points == smaller.point_count() && image == line.core();

    Geometry sub(smaller);
    out.preserves_lines = true;
    sub.for_each_line([&](const Line &l) {
        std::uint64_t a = embed(l.points[0]), b = embed(l.points[1]), c = embed(l.points[2]);
        bool is_line = a != 0 && b != 0 && a != b && (a ^ b) == c && gf2::form(a, b) == 0;
        bool inside = line.core().contains(a) && line.core().contains(b) && line.core().contains(c);
        if (is_line && inside) {
            out.lines_mapped++;
        } else {
            out.preserves_lines = false;
        }
    });
    out.core_lines = Geometry(n).lines_within(line.core()).size();
    return out;
}

bool CensusTable::all_match() const {
    if (closure_violations != 0 || total_lines != veldkamp_line_total(n) || total_pairs != 3 * total_lines) {
        return false;
    }
    return std::all_of(rows.begin(), rows.end(), [](const CensusRow &r) { return r.match(); });
}

namespace {

struct CensusCounters {
    std::array<std::uint64_t, 5> pairs{};
    std::array<std::uint64_t, 5> lines{};
    std::array<std::uint64_t, 5> core_misses{};
    std::uint64_t closure_violations = 0;
};

}  // namespace

CensusTable census(QubitCount n, const CensusOptions &options) {
    int limit = options.max_qubits > 0 ? options.max_qubits : census_max_qubits();
    if (n.value() < 2 || n.value() > limit) {
        fail(ErrorCode::kOutOfRange, "Veldkamp census supports 2 <= n <= " + std::to_string(limit));
    }
    HyperplaneCatalog catalog = enumerate_hyperplanes(n);
    const std::uint64_t total = catalog.hyperplanes.size();
    const std::uint64_t point_count = n.point_count();

    std::array<std::uint64_t, 5> expected_core{};
    for (VeldkampLineType t : kAllVeldkampLineTypes) {
        expected_core[static_cast<size_t>(t)] = core_size_formula(n, t);
    }

    unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));
    std::vector<CensusCounters> partial(workers);

    // Worker w takes rows i = w, w + W, ...; the strided split balances the
    // triangular pair count.
    auto scan = [&](unsigned w) {
        CensusCounters &acc = partial[w];
        for (std::uint64_t i = w; i < total; i += workers) {
            RawKind a = raw_kind(i, point_count);
            const PointSet &pa = catalog.hyperplanes[i].points();
            for (std::uint64_t j = i + 1; j < total; j++) {
                RawKind b = raw_kind(j, point_count);
                RawKind c = raw_boxplus(a, b);
                std::uint64_t k = raw_index(c, point_count);
                if (k == i || k == j || raw_index(raw_boxplus(a, c), point_count) != j ||
                    raw_index(raw_boxplus(b, c), point_count) != i) {
                    acc.closure_violations++;
                    continue;
                }
                int t = raw_line_type(a, b, c);
                if (t < 0) {
                    acc.closure_violations++;
                    continue;
                }
                acc.pairs[t]++;
                if (j < k) {
                    acc.lines[t]++;
                }
                if (pa.intersection_size(catalog.hyperplanes[j].points()) != expected_core[t]) {
                    acc.core_misses[t]++;
                }
            }
        }
    };

    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; w++) {
            threads.emplace_back(scan, w);
        }
        for (auto &t : threads) {
            t.join();
        }
    }

    CensusTable table{n, {}, 0, 0, 0};
    for (VeldkampLineType t : kAllVeldkampLineTypes) {
        size_t idx = static_cast<size_t>(t);
        CensusRow &row = table.rows[idx];
        row.type = t;
        row.core_size = expected_core[idx];
        row.formula_count = line_copies_formula(n, t);
        for (const auto &acc : partial) {
            row.pair_count += acc.pairs[idx];
            row.line_count += acc.lines[idx];
            row.core_size_violations += acc.core_misses[idx];
        }
        table.total_pairs += row.pair_count;
        table.total_lines += row.line_count;
    }
    for (const auto &acc : partial) {
        table.closure_violations += acc.closure_violations;
    }
    return table;
}

namespace {

V2Witness make_witness(const HyperplaneCatalog &catalog, std::uint64_t i, std::uint64_t j, std::uint64_t c,
                       const PointSet &core) {
    const auto &hs = catalog.hyperplanes;
    return V2Witness{hs[i].kind(),
                     hs[j].kind(),
                     hs[c].kind(),
                     core.to_vector(),
                     hs[c].points().intersection_size(hs[i].points()),
                     hs[c].points().intersection_size(hs[j].points())};
}

}  // namespace

V2Report verify_v2(QubitCount n, V2Mode mode, std::uint64_t seed, std::uint64_t sample_count) {
    if (n.value() < 2) {
        fail(ErrorCode::kOutOfRange, "(V2) is only meaningful for n >= 2");
    }
    if (mode == V2Mode::kExhaustive && n.value() > kMaxExhaustiveV2Qubits) {
        fail(ErrorCode::kOutOfRange,
             "exhaustive (V2) scans are limited to n <= " + std::to_string(kMaxExhaustiveV2Qubits));
    }
    HyperplaneCatalog catalog = enumerate_hyperplanes(n);
    const auto &hs = catalog.hyperplanes;
    const std::uint64_t total = hs.size();
    const std::uint64_t point_count = n.point_count();

    V2Report report{n, mode, mode == V2Mode::kSampled ? seed : 0, 0, 0, std::nullopt, std::nullopt};

    auto check_pair = [&](std::uint64_t i, std::uint64_t j) {
        std::uint64_t k = raw_index(raw_boxplus(raw_kind(i, point_count), raw_kind(j, point_count)), point_count);
        PointSet core = hs[i].points() & hs[j].points();
        report.pairs_checked++;
        for (std::uint64_t c = 0; c < total; c++) {
            if (c == i || c == j || c == k || !core.is_subset_of(hs[c].points())) {
                continue;
            }
            report.violations++;
            if (!report.first_violation) {
                report.first_violation = make_witness(catalog, i, j, c, core);
            }
            const HyperplaneKind &a = hs[i].kind();
            const HyperplaneKind &b = hs[j].kind();
            if (!report.perp_pair_witness && a.is_perp() && b.is_perp() && symplectic_form(a.p(), b.p()) == 0 &&
                hs[c].kind().type() == HyperplaneType::kQuadricArf0) {
                report.perp_pair_witness = make_witness(catalog, i, j, c, core);
            }
        }
    };

    if (mode == V2Mode::kExhaustive) {
        for (std::uint64_t i = 0; i < total; i++) {
            for (std::uint64_t j = i + 1; j < total; j++) {
                check_pair(i, j);
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        for (std::uint64_t s = 0; s < sample_count; s++) {
            std::uint64_t i = rng() % total;
            std::uint64_t j = rng() % (total - 1);
            if (j >= i) {
                j++;
            }
            check_pair(std::min(i, j), std::max(i, j));
        }
    }
    return report;
}

}  // namespace veldkamp
