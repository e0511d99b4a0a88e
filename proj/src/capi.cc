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

#include "veldkamp/veldkamp_c.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "veldkamp/commands.h"
#include "veldkamp/config.h"
#include "veldkamp/pauli.h"

using namespace veldkamp;

struct vk_geometry {
    Geometry g;
};

struct vk_hyperplane_set {
    HyperplaneCatalog catalog;
};

struct vk_census {
    CensusTable table;
};

struct vk_report {
    Report report;
};

namespace {

thread_local std::string last_error;

vk_status to_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::kInvalidArgument:
            return VK_INVALID_ARGUMENT;
        case ErrorCode::kDimensionMismatch:
            return VK_DIMENSION_MISMATCH;
        case ErrorCode::kOutOfRange:
            return VK_OUT_OF_RANGE;
        case ErrorCode::kParse:
            return VK_PARSE_ERROR;
        case ErrorCode::kNotAHyperplane:
            return VK_NOT_A_HYPERPLANE;
        case ErrorCode::kPrecondition:
            return VK_PRECONDITION;
        case ErrorCode::kNotAGeneralizedQuadrangle:
            return VK_NOT_A_GENERALIZED_QUADRANGLE;
        case ErrorCode::kInternal:
            return VK_INTERNAL;
    }
    return VK_INTERNAL;
}

// Runs f, translating exceptions into status codes and the thread-local
// error message.
template <typename F>
vk_status guard(F &&f) {
    try {
        f();
        last_error.clear();
        return VK_OK;
    } catch (const Error &e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return VK_INTERNAL;
    } catch (const std::exception &e) {
        last_error = e.what();
        return VK_INTERNAL;
    }
}

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool condition, const char *what) {
    if (!condition) {
        fail(ErrorCode::kInvalidArgument, what);
    }
}

OutputFormat to_format(vk_format f) {
    switch (f) {
        case VK_FORMAT_TEXT:
            return OutputFormat::kText;
        case VK_FORMAT_JSON:
            return OutputFormat::kJson;
        case VK_FORMAT_CSV:
            return OutputFormat::kCsv;
        case VK_FORMAT_DOT:
            return OutputFormat::kDot;
    }
    fail(ErrorCode::kInvalidArgument, "unknown output format");
}

}  // namespace

extern "C" {

const char *vk_status_string(vk_status status) {
    switch (status) {
        case VK_OK:
            return "ok";
        case VK_INVALID_ARGUMENT:
            return "invalid argument";
        case VK_DIMENSION_MISMATCH:
            return "dimension mismatch";
        case VK_OUT_OF_RANGE:
            return "out of range";
        case VK_PARSE_ERROR:
            return "parse error";
        case VK_NOT_A_HYPERPLANE:
            return "not a hyperplane";
        case VK_PRECONDITION:
            return "precondition violated";
        case VK_NOT_A_GENERALIZED_QUADRANGLE:
            return "not a generalized quadrangle";
        case VK_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char *vk_last_error_message(void) {
    return last_error.c_str();
}

void vk_string_free(char *s) {
    std::free(s);
}

const char *vk_version(void) {
    return "1.0.0";
}

int vk_max_qubits(void) {
    return max_qubits();
}

vk_status vk_encode(const char *label, int *n_out, uint64_t *bits_out) {
    return guard([&] {
        require(label && n_out && bits_out, "null argument");
        PauliVector v = encode(label);
        *n_out = v.n();
        *bits_out = v.bits();
    });
}

vk_status vk_decode(int n, uint64_t bits, char **label_out) {
    return guard([&] {
        require(label_out != nullptr, "null argument");
        *label_out = copy_string(decode(PauliVector(QubitCount(n), bits)));
    });
}

vk_status vk_multiply(const char *a, const char *b, char **product_out) {
    return guard([&] {
        require(a && b && product_out, "null argument");
        *product_out = copy_string(multiply(SignedPauli::parse(a), SignedPauli::parse(b)).to_string());
    });
}

vk_status vk_symplectic_form(int n, uint64_t x, uint64_t y, int *out) {
    return guard([&] {
        require(out != nullptr, "null argument");
        QubitCount q(n);
        *out = symplectic_form(PauliVector(q, x), PauliVector(q, y));
    });
}

vk_status vk_q0(int n, uint64_t x, int *out) {
    return guard([&] {
        require(out != nullptr, "null argument");
        *out = q0(PauliVector(QubitCount(n), x));
    });
}

vk_status vk_transvect(int n, uint64_t p, uint64_t x, uint64_t *out) {
    return guard([&] {
        require(out != nullptr, "null argument");
        QubitCount q(n);
        *out = transvect(PauliVector(q, p), PauliVector(q, x)).bits();
    });
}

vk_status vk_geometry_create(int n, vk_geometry **out) {
    return guard([&] {
        require(out != nullptr, "null argument");
        *out = nullptr;
        *out = new vk_geometry{Geometry(QubitCount(n))};
    });
}

void vk_geometry_destroy(vk_geometry *g) {
    delete g;
}

uint64_t vk_geometry_point_count(const vk_geometry *g) {
    return g ? g->g.point_count() : 0;
}

uint64_t vk_geometry_line_count(const vk_geometry *g) {
    return g ? g->g.line_count() : 0;
}

vk_status vk_geometry_is_line(const vk_geometry *g, uint64_t a, uint64_t b, uint64_t c, int *out) {
    return guard([&] {
        require(g && out, "null argument");
        QubitCount n = g->g.qubits();
        *out = g->g.is_line(PauliVector(n, a), PauliVector(n, b), PauliVector(n, c));
    });
}

vk_status vk_hyperplanes_create(int n, vk_hyperplane_set **out) {
    return guard([&] {
        require(out != nullptr, "null argument");
        *out = nullptr;
        *out = new vk_hyperplane_set{enumerate_hyperplanes(QubitCount(n))};
    });
}

void vk_hyperplanes_destroy(vk_hyperplane_set *set) {
    delete set;
}

size_t vk_hyperplanes_count(const vk_hyperplane_set *set) {
    return set ? set->catalog.hyperplanes.size() : 0;
}

namespace {

const Hyperplane &hyperplane_at(const vk_hyperplane_set *set, size_t index) {
    require(set != nullptr, "null argument");
    if (index >= set->catalog.hyperplanes.size()) {
        fail(ErrorCode::kOutOfRange, "hyperplane index " + std::to_string(index) + " out of range");
    }
    return set->catalog.hyperplanes[index];
}

}  // namespace

vk_status vk_hyperplanes_key(const vk_hyperplane_set *set, size_t index, char **key_out) {
    return guard([&] {
        require(key_out != nullptr, "null argument");
        *key_out = copy_string(hyperplane_at(set, index).kind().key());
    });
}

vk_status vk_hyperplanes_size(const vk_hyperplane_set *set, size_t index, size_t *out) {
    return guard([&] {
        require(out != nullptr, "null argument");
        *out = hyperplane_at(set, index).size();
    });
}

vk_status vk_hyperplanes_contains(const vk_hyperplane_set *set, size_t index, uint64_t point, int *out) {
    return guard([&] {
        require(out != nullptr, "null argument");
        const Hyperplane &h = hyperplane_at(set, index);
        *out = h.points().contains(PauliVector(h.qubits(), point));
    });
}

vk_status vk_hyperplanes_boxplus(const vk_hyperplane_set *set, size_t a, size_t b, size_t *out) {
    return guard([&] {
        require(out != nullptr, "null argument");
        *out = boxplus(hyperplane_at(set, a).kind(), hyperplane_at(set, b).kind()).index();
    });
}

vk_status vk_census_create(int n, vk_census **out) {
    return guard([&] {
        require(out != nullptr, "null argument");
        *out = nullptr;
        *out = new vk_census{census(QubitCount(n))};
    });
}

void vk_census_destroy(vk_census *c) {
    delete c;
}

vk_status vk_census_row(const vk_census *c, int row, uint64_t *count, uint64_t *core_size, uint64_t *formula_count) {
    return guard([&] {
        require(c != nullptr, "null argument");
        if (row < 0 || row >= 5) {
            fail(ErrorCode::kOutOfRange, "census row must lie in [0, 4]");
        }
        const CensusRow &r = c->table.rows[row];
        if (count) {
            *count = r.line_count;
        }
        if (core_size) {
            *core_size = r.core_size;
        }
        if (formula_count) {
            *formula_count = r.formula_count;
        }
    });
}

int vk_census_all_match(const vk_census *c) {
    return c ? c->table.all_match() : 0;
}

void vk_command_options_init(vk_command_options *options) {
    if (options) {
        *options = vk_command_options{};
        options->format = VK_FORMAT_TEXT;
    }
}

vk_status vk_command_run(const vk_command_options *options, vk_report **out) {
    return guard([&] {
        require(options && out && options->verb, "null argument");
        *out = nullptr;
        CommandOptions opts;
        opts.verb = options->verb;
        opts.qubits = options->qubits;
        opts.format = to_format(options->format);
        opts.seed = options->seed;
        opts.exhaustive = options->exhaustive != 0;
        opts.limit = options->limit == 0 ? kDefaultSampleLimit : options->limit;
        opts.all = options->all != 0;
        if (options->has_index) {
            opts.index = options->index;
        }
        auto text = [](const char *s) { return s ? std::string(s) : std::string(); };
        opts.a = text(options->a);
        opts.b = text(options->b);
        opts.f = text(options->f);
        opts.hyperplane = text(options->hyperplane);
        opts.what = text(options->what);
        *out = new vk_report{run_command(opts)};
    });
}

void vk_report_destroy(vk_report *report) {
    delete report;
}

int vk_report_passed(const vk_report *report) {
    return report ? report->report.passed : 0;
}

int vk_report_exit_code(const vk_report *report) {
    return report ? report->report.exit_code() : 1;
}

double vk_report_seconds(const vk_report *report) {
    return report ? report->report.seconds : 0.0;
}

vk_status vk_report_render(const vk_report *report, vk_format format, char **text_out) {
    return guard([&] {
        require(report && text_out, "null argument");
        *text_out = copy_string(render(report->report, to_format(format)));
    });
}

int vk_status_exit_code(vk_status status) {
    if (status == VK_OK) {
        return 0;
    }
    return status == VK_INTERNAL ? 1 : 2;
}

const char *const *vk_command_verbs(void) {
    static const char *const verbs[] = {"census", "hyperplanes", "veldkamp", "orbits", "swap", "mermin",
                                        "gq",     "wootters",    "verify",   "export", nullptr};
    return verbs;
}

}  // extern "C"
