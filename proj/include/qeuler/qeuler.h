// Copyright 2026 The qeuler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QEULER_QEULER_H_
#define QEULER_QEULER_H_

/*
 * C interface to the qeuler library: q-Eulerian polynomials of types A and
 * B, their gamma-coefficient triangles, the derived q-tangent and q-secant
 * families, and the verification suites that cross-check them.
 *
 * Objects are opaque handles released with the matching *_free call.
 * Strings returned through `char** out` are owned by the caller and must be
 * released with qeu_string_free. Every function returning qeu_status
 * leaves a message for qeu_last_error() on failure (per thread).
 */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#  define QEU_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define QEU_API __attribute__((visibility("default")))
#else
#  define QEU_API
#endif

typedef enum qeu_status {
  QEU_OK = 0,
  QEU_ERR_INVALID_ARGUMENT = 1, /* bad name, index, format or point list */
  QEU_ERR_NOT_DIVISIBLE = 2,    /* exact division had a remainder */
  QEU_ERR_VERIFICATION = 3,     /* a property that must hold failed */
  QEU_ERR_IO = 4,               /* fixture could not be read */
  QEU_ERR_INTERNAL = 5
} qeu_status;

typedef enum qeu_format {
  QEU_FORMAT_TEXT = 0,
  QEU_FORMAT_CSV = 1,
  QEU_FORMAT_JSON = 2
} qeu_format;

typedef enum qeu_kind {
  QEU_KIND_POLY = 0,    /* polynomial in q */
  QEU_KIND_LAURENT = 1, /* Laurent polynomial in q */
  QEU_KIND_BIVAR = 2    /* polynomial in t with Laurent coefficients */
} qeu_kind;

/* A polynomial-valued result. */
typedef struct qeu_value qeu_value;
/* Outcome of a verification suite, scan or fixture comparison. */
typedef struct qeu_report qeu_report;

QEU_API const char* qeu_version(void);
QEU_API const char* qeu_status_string(qeu_status status);
/* Message of the last failed call on this thread; "" when none. */
QEU_API const char* qeu_last_error(void);

QEU_API void qeu_string_free(char* s);

/* ---- values ------------------------------------------------------------ */

/* Triangle entry; family is one of 'A', 'B', 'a', 'b'. Out-of-range k
 * yields the zero polynomial. */
QEU_API qeu_status qeu_triangle_entry(char family, int n, int k, qeu_value** out);

/* name: "A", "B", "T", "dn", "Estar", "Gstar", "Eq" or "central". */
QEU_API qeu_status qeu_named_poly(const char* name, int n, qeu_value** out);

/* Parses the JSON rendering produced by qeu_value_render. */
QEU_API qeu_status qeu_value_parse_json(const char* json, qeu_value** out);

QEU_API qeu_kind qeu_value_kind(const qeu_value* v);
QEU_API int qeu_value_equal(const qeu_value* a, const qeu_value* b);
QEU_API qeu_status qeu_value_render(const qeu_value* v, qeu_format format, char** out);
/* Value at q = 1 as a decimal string; for bivariate values a comma-separated
 * list of the t-coefficients. */
QEU_API qeu_status qeu_value_at_q1(const qeu_value* v, char** out);
/* Exact quotient num / den. QEU_ERR_NOT_DIVISIBLE when it does not exist. */
QEU_API qeu_status qeu_value_exact_div(const qeu_value* num, const qeu_value* den,
                                       qeu_value** out);
QEU_API void qeu_value_free(qeu_value* v);

/* ---- tables ------------------------------------------------------------ */

QEU_API qeu_status qeu_table_render(char family, int max_n, int at_q1, qeu_format format,
                                    char** out);

/* ---- reports ----------------------------------------------------------- */

/* suite: "all", "expansionA", "expansionB", "series", "tangent", "secant",
 * "doubloon", "reciprocity", "monotone" or "brackets". max_n < 0 selects
 * the suite default. points is a comma-separated list of rationals such as
 * "2,3/2,1/2" (NULL or "" for the defaults; used by "monotone"). */
QEU_API qeu_status qeu_verify(const char* suite, int max_n, const char* points,
                              qeu_report** out);

/* Positivity scan of G*_{2n}(q) for n = 0..max_n. */
QEU_API qeu_status qeu_conjecture_scan(int max_n, qeu_report** out);

/* sequence: "A101280" or "A008971"; fixture_path names a b-file. */
QEU_API qeu_status qeu_oeis_check(const char* sequence, int max_n, const char* fixture_path,
                                  qeu_report** out);

/* 1 when no item failed. */
QEU_API int qeu_report_passed(const qeu_report* r);
/* "pass", "fail", "consistent" or "counterexample"; owned by the report. */
QEU_API const char* qeu_report_verdict(const qeu_report* r);
/* Wall time is included only when include_timing is nonzero. */
QEU_API qeu_status qeu_report_render(const qeu_report* r, qeu_format format, int include_timing,
                                     char** out);
QEU_API void qeu_report_free(qeu_report* r);

#ifdef __cplusplus
}
#endif

#endif /* QEULER_QEULER_H_ */
