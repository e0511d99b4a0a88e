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

#ifndef VELDKAMP_C_H
#define VELDKAMP_C_H

#include <stddef.h>
#include <stdint.h>

#if defined(VK_BUILDING_LIBRARY)
#define VK_API __attribute__((visibility("default")))
#else
#define VK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vk_status {
    VK_OK = 0,
    VK_INVALID_ARGUMENT = 1,
    VK_DIMENSION_MISMATCH = 2,
    VK_OUT_OF_RANGE = 3,
    VK_PARSE_ERROR = 4,
    VK_NOT_A_HYPERPLANE = 5,
    VK_PRECONDITION = 6,
    VK_NOT_A_GENERALIZED_QUADRANGLE = 7,
    VK_INTERNAL = 8,
} vk_status;

typedef enum vk_format {
    VK_FORMAT_TEXT = 0,
    VK_FORMAT_JSON = 1,
    VK_FORMAT_CSV = 2,
    VK_FORMAT_DOT = 3,
} vk_format;

VK_API const char *vk_status_string(vk_status status);
/* Message of the most recent failure on this thread; "" if none. */
VK_API const char *vk_last_error_message(void);
/* Frees strings returned through char ** out-parameters. */
VK_API void vk_string_free(char *s);
VK_API const char *vk_version(void);
VK_API int vk_max_qubits(void);

/* Pauli codec. Vectors are packed with qubit 1 in the two highest bits. */
VK_API vk_status vk_encode(const char *label, int *n_out, uint64_t *bits_out);
VK_API vk_status vk_decode(int n, uint64_t bits, char **label_out);
/* Product of signed operators: "-XZ" * "YY". */
VK_API vk_status vk_multiply(const char *a, const char *b, char **product_out);
VK_API vk_status vk_symplectic_form(int n, uint64_t x, uint64_t y, int *out);
VK_API vk_status vk_q0(int n, uint64_t x, int *out);
VK_API vk_status vk_transvect(int n, uint64_t p, uint64_t x, uint64_t *out);

/* Geometry G_n. */
typedef struct vk_geometry vk_geometry;
VK_API vk_status vk_geometry_create(int n, vk_geometry **out);
VK_API void vk_geometry_destroy(vk_geometry *g);
VK_API uint64_t vk_geometry_point_count(const vk_geometry *g);
VK_API uint64_t vk_geometry_line_count(const vk_geometry *g);
VK_API vk_status vk_geometry_is_line(const vk_geometry *g, uint64_t a, uint64_t b, uint64_t c, int *out);

/* Catalog of every hyperplane of G_n, in canonical order. */
typedef struct vk_hyperplane_set vk_hyperplane_set;
VK_API vk_status vk_hyperplanes_create(int n, vk_hyperplane_set **out);
VK_API void vk_hyperplanes_destroy(vk_hyperplane_set *set);
VK_API size_t vk_hyperplanes_count(const vk_hyperplane_set *set);
/* Key such as "C_XZ" or "H_IY". */
VK_API vk_status vk_hyperplanes_key(const vk_hyperplane_set *set, size_t index, char **key_out);
VK_API vk_status vk_hyperplanes_size(const vk_hyperplane_set *set, size_t index, size_t *out);
VK_API vk_status vk_hyperplanes_contains(const vk_hyperplane_set *set, size_t index, uint64_t point, int *out);
/* Canonical index of A boxplus B. */
VK_API vk_status vk_hyperplanes_boxplus(const vk_hyperplane_set *set, size_t a, size_t b, size_t *out);

/* Veldkamp line census: counts per type, in the order CCC-isotropic,
   CCC-hyperbolic, CH0H0, CH0H1, CH1H1. */
typedef struct vk_census vk_census;
VK_API vk_status vk_census_create(int n, vk_census **out);
VK_API void vk_census_destroy(vk_census *census);
VK_API vk_status vk_census_row(const vk_census *census, int row, uint64_t *count, uint64_t *core_size,
                               uint64_t *formula_count);
VK_API int vk_census_all_match(const vk_census *census);

/* Commands. Options mirror the command-line flags. */
typedef struct vk_command_options {
    const char *verb;
    int qubits; /* 0 = not given */
    vk_format format;
    uint64_t seed;
    int exhaustive;
    uint64_t limit; /* 0 = default */
    int all;
    int has_index;
    int index;
    const char *a;
    const char *b;
    const char *f;
    const char *hyperplane;
    const char *what;
} vk_command_options;

typedef struct vk_report vk_report;
VK_API void vk_command_options_init(vk_command_options *options);
/* On a usage error returns non-VK_OK and leaves *out NULL. */
VK_API vk_status vk_command_run(const vk_command_options *options, vk_report **out);
VK_API void vk_report_destroy(vk_report *report);
VK_API int vk_report_passed(const vk_report *report);
/* 0 on pass, 1 when a checked claim failed. */
VK_API int vk_report_exit_code(const vk_report *report);
VK_API double vk_report_seconds(const vk_report *report);
VK_API vk_status vk_report_render(const vk_report *report, vk_format format, char **text_out);
/* Exit code for a vk_command_run failure status: 1 internal, 2 usage. */
VK_API int vk_status_exit_code(vk_status status);
/* NULL-terminated list of verbs; static storage. */
VK_API const char *const *vk_command_verbs(void);

#ifdef __cplusplus
}
#endif

#endif  // VELDKAMP_C_H
