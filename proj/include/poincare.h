/*
   Copyright 2026 The poincare-series authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* C interface of the poincare-series library: exact Poincare series of the
 * joint invariants and joint covariants of two binary forms. Handles are
 * opaque and must be released with the matching _free call; every string
 * output is heap-allocated and released with psq_string_free. All entry
 * points are thread-safe; handles are immutable after creation and may be
 * shared across threads.
 */

#ifndef POINCARE_H
#define POINCARE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum psq_status {
    PSQ_OK = 0,
    PSQ_USAGE = 1,    /* invalid argument or degree */
    PSQ_MISMATCH = 2, /* verification found a differing coefficient */
    PSQ_IO = 3,       /* malformed input document */
    PSQ_INTERNAL = 4
} psq_status;

typedef enum psq_kind {
    PSQ_INVARIANTS = 0,
    PSQ_COVARIANTS = 1
} psq_kind;

typedef enum psq_format {
    PSQ_TEXT = 0,
    PSQ_LATEX = 1,
    PSQ_JSON = 2
} psq_format;

/* A computed (or parsed) Poincare series: degrees, kind, reduced rational
 * value, factored presentation and an optional coefficient prefix. */
typedef struct psq_series psq_series;

const char* psq_version(void);
const char* psq_status_name(psq_status st);

/* Message for the most recent failure on the calling thread; empty string
 * when the last call succeeded. Valid until the next library call on the
 * same thread. */
const char* psq_last_error(void);

/* Computes the series for form degrees d1, d2 >= 1. The first `terms`
 * series coefficients (degrees 0..terms-1) are precomputed and embedded
 * in JSON renderings; pass terms <= 0 to omit the series block. */
psq_status psq_series_compute(int d1, int d2, psq_kind kind, int terms,
                              psq_series** out);

/* Parses a JSON document produced by psq_series_render(PSQ_JSON). The
 * stored series block, when present, is kept verbatim; use
 * psq_series_verify to cross-check it. */
psq_status psq_series_parse_json(const char* json, size_t len, psq_series** out);

void psq_series_free(psq_series* s);

int psq_series_d1(const psq_series* s);
int psq_series_d2(const psq_series* s);
psq_kind psq_series_kind(const psq_series* s);

/* Renders to the requested format; *out is malloc'd and NUL-terminated. */
psq_status psq_series_render(const psq_series* s, psq_format format, char** out);

/* Decimal value of the degree-n series coefficient. */
psq_status psq_series_coefficient(const psq_series* s, int n, char** out);

void psq_string_free(char* s);

/* Compares the first `terms` series coefficients of the value against the
 * counting oracle, and against the stored series block when one was
 * parsed. On a mismatch returns PSQ_MISMATCH with *first_mismatch set to
 * the lowest differing degree and a diagnostic in psq_last_error();
 * otherwise *first_mismatch is -1. */
psq_status psq_series_verify(const psq_series* s, int terms, int* first_mismatch);

/* Dimension of the degree-n graded piece straight from the counting
 * oracle, as a decimal string. */
psq_status psq_dimension(int d1, int d2, psq_kind kind, int n, char** out);

#ifdef __cplusplus
}
#endif

#endif /* POINCARE_H */
