/* SPDX-License-Identifier: Apache-2.0 */
#ifndef SYMTRACE_SYMTRACE_H
#define SYMTRACE_SYMTRACE_H

/*
 * C interface to libsymtrace: traces of symmetric powers of matrices over the
 * rationals or a prime field, computed exactly.
 *
 * Every function returning symtrace_status leaves a one-line description of
 * the last failure in symtrace_last_error() (thread-local). Strings handed
 * out through char** parameters are owned by the caller and released with
 * symtrace_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SYMTRACE_BUILDING_LIBRARY)
#    define SYMTRACE_API __declspec(dllexport)
#  else
#    define SYMTRACE_API __declspec(dllimport)
#  endif
#else
#  define SYMTRACE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum symtrace_status {
  SYMTRACE_OK = 0,
  SYMTRACE_ERR_PARSE = 1,
  SYMTRACE_ERR_INVALID_ARGUMENT = 2,
  SYMTRACE_ERR_UNKNOWN_LABEL = 3,
  SYMTRACE_ERR_MIXED_FIELD = 4,
  SYMTRACE_ERR_DIMENSION_MISMATCH = 5,
  SYMTRACE_ERR_DIVISION_BY_ZERO = 6,
  SYMTRACE_ERR_CHARACTERISTIC_TOO_SMALL = 7,
  SYMTRACE_ERR_FUNCTIONAL_VANISHES = 8,
  SYMTRACE_ERR_SINGULAR_MATRIX = 9,
  SYMTRACE_ERR_ORACLE_TOO_LARGE = 10,
  SYMTRACE_ERR_OUT_OF_VALIDATED_RANGE = 11,
  SYMTRACE_ERR_IO = 12,
  SYMTRACE_ERR_INTERNAL = 13
} symtrace_status;

typedef enum symtrace_method {
  SYMTRACE_METHOD_AUTO = 0,
  SYMTRACE_METHOD_THEOREM = 1,
  SYMTRACE_METHOD_RECURRENCE = 2,
  SYMTRACE_METHOD_ORACLE = 3
} symtrace_method;

/* Opaque square matrix over a fixed field. */
typedef struct symtrace_matrix symtrace_matrix;

SYMTRACE_API const char* symtrace_version(void);
/* Stable identifier such as "FunctionalVanishes". */
SYMTRACE_API const char* symtrace_status_name(symtrace_status status);
SYMTRACE_API const char* symtrace_last_error(void);
SYMTRACE_API void symtrace_string_free(char* s);

/* {"n": 3, "field": "rational" | "gf:<p>", "entries": [["1","2","3"], ...]} */
SYMTRACE_API symtrace_status symtrace_matrix_parse_json(const char* json, symtrace_matrix** out);
SYMTRACE_API symtrace_status symtrace_matrix_load(const char* path, symtrace_matrix** out);
/* Entries in -9..9 over the rationals, uniform residues over gf:<p>. */
SYMTRACE_API symtrace_status symtrace_matrix_random(size_t n, const char* field, uint64_t seed,
                                                    symtrace_matrix** out);
SYMTRACE_API void symtrace_matrix_free(symtrace_matrix* m);
SYMTRACE_API size_t symtrace_matrix_dimension(const symtrace_matrix* m);
SYMTRACE_API symtrace_status symtrace_matrix_to_json(const symtrace_matrix* m, char** out);

/*
 * tr(Sym^k A) as a scalar string. `functional` (nullable) names the
 * identity-vanishing functional for the theorem route: "a12"/"E12" for an
 * entry, "a11-a22"/"D12" for a diagonal difference.
 */
SYMTRACE_API symtrace_status symtrace_sym_trace(const symtrace_matrix* m, uint32_t k,
                                                symtrace_method method, const char* functional,
                                                char** value_out);

/* Same computation, rendered as the compute command's JSON document:
 * {"k": ..., "sym_trace": "...", "method": "...", "functional": "..." | null} */
SYMTRACE_API symtrace_status symtrace_compute_json(const symtrace_matrix* m, uint32_t k,
                                                   symtrace_method method, const char* functional,
                                                   char** json_out);

/* Both sides of sigma_1(A^{k+1}) = sum_i (-1)^{i-1} sigma_i(A) tr(Sym^{k-i+1} A). */
SYMTRACE_API symtrace_status symtrace_theorem_sides(const symtrace_matrix* m,
                                                    const char* functional, int64_t k,
                                                    char** lhs_out, char** rhs_out);

typedef struct symtrace_verify_options {
  size_t n;
  size_t trials;
  uint64_t seed;
  size_t kmax;
  const char* field;              /* "rational" or "gf:<p>"; NULL means rational */
  const symtrace_matrix* matrix;  /* when set, only this matrix is checked */
  size_t oracle_cap;
} symtrace_verify_options;

SYMTRACE_API void symtrace_verify_options_init(symtrace_verify_options* options);
/* *passed is 1 iff every identity held. */
SYMTRACE_API symtrace_status symtrace_verify(const symtrace_verify_options* options,
                                             char** report_out, int* passed);

/* Regenerates the sigma tables for n = 3 or 4 and compares them with the
 * built-in fixture, or with the fixture file at `fixture_path` when non-NULL. */
SYMTRACE_API symtrace_status symtrace_table(unsigned n, const char* fixture_path,
                                            char** report_out, int* all_match);

typedef struct symtrace_bench_options {
  size_t n;
  size_t kmax;
  uint64_t seed;
  const char* field; /* NULL means gf:10007 */
  size_t oracle_cap;
} symtrace_bench_options;

SYMTRACE_API void symtrace_bench_options_init(symtrace_bench_options* options);
/* CSV with header n,k,method,dim,wall_time_ns,field. */
SYMTRACE_API symtrace_status symtrace_bench_csv(const symtrace_bench_options* options,
                                                char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* SYMTRACE_SYMTRACE_H */
