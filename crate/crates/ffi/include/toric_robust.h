#ifndef TORIC_ROBUST_H
#define TORIC_ROBUST_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of a fallible call. Library error codes are passed through
 * unchanged; codes below 10 belong to the C layer itself.
 */
typedef enum TrStatus {
  TR_STATUS_OK = 0,
  TR_STATUS_NULL_ARGUMENT = 1,
  TR_STATUS_INDEX_OUT_OF_RANGE = 2,
  TR_STATUS_INVALID_UTF8 = 3,
  TR_STATUS_THREAD_POOL = 4,
  TR_STATUS_PANIC = 5,
  TR_STATUS_LENGTH_MISMATCH = 10,
  TR_STATUS_SHAPE_MISMATCH = 11,
  TR_STATUS_ZERO_VECTOR = 12,
  TR_STATUS_ZERO_MATRIX = 13,
  TR_STATUS_NOT_POINTED = 20,
  TR_STATUS_NOT_IN_GRAVER = 21,
  TR_STATUS_FREE_BOUQUET_PRESENT = 22,
  TR_STATUS_NOT_SIMPLE = 23,
  TR_STATUS_FREE_VECTOR_PRESENT = 24,
  TR_STATUS_TOO_FEW_COLUMNS = 30,
  TR_STATUS_NON_INCREASING = 31,
  TR_STATUS_FULL_SUPPORT_VIOLATED = 40,
  TR_STATUS_GCD_NOT_ONE = 41,
  TR_STATUS_FIRST_COMPONENT_NOT_POSITIVE = 42,
  TR_STATUS_BEZOUT_MISMATCH = 43,
  TR_STATUS_INVALID_INDEX_SET = 44,
  TR_STATUS_MALFORMED_HEADER = 50,
  TR_STATUS_ENTRY_COUNT_MISMATCH = 51,
  TR_STATUS_NON_INTEGER_TOKEN = 52,
  TR_STATUS_OVERFLOW = 60,
  TR_STATUS_IO = 70,
} TrStatus;

/**
 * A simplicial complex given by its maximal faces.
 */
typedef struct TrComplex TrComplex;

/**
 * A Graver basis, one representative per `±` pair.
 */
typedef struct TrGraver TrGraver;

/**
 * An integer matrix.
 */
typedef struct TrMatrix TrMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or an empty string.
 * The pointer stays valid until the next call into this library on the
 * same thread.
 */
const char *tr_last_error_message(void);

/**
 * Builds a `rows × cols` matrix from row-major `entries`.
 *
 * # Safety
 * `entries` must point to `rows * cols` readable values and `out` must be
 * writable.
 */
enum TrStatus tr_matrix_new(size_t rows,
                            size_t cols,
                            const int64_t *entries,
                            struct TrMatrix **out);

/**
 * Parses a matrix in the `rows cols` + entries text layout. Entries may
 * exceed 64 bits.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` must be writable.
 */
enum TrStatus tr_matrix_parse(const char *text, struct TrMatrix **out);

/**
 * # Safety
 * `m` must be null or a handle from this library not yet freed.
 */
void tr_matrix_free(struct TrMatrix *m);

/**
 * # Safety
 * `m` must be a live handle.
 */
size_t tr_matrix_rows(const struct TrMatrix *m);

/**
 * # Safety
 * `m` must be a live handle.
 */
size_t tr_matrix_cols(const struct TrMatrix *m);

/**
 * # Safety
 * `m` must be a live handle.
 */
size_t tr_matrix_rank(const struct TrMatrix *m);

/**
 * Entry `(row, col)`; fails with `TR_STATUS_OVERFLOW` when it does not fit
 * in 64 bits.
 *
 * # Safety
 * `m` must be a live handle and `out` writable.
 */
enum TrStatus tr_matrix_get(const struct TrMatrix *m, size_t row, size_t col, int64_t *out);

/**
 * The canonical text form. Release with [`tr_string_free`].
 *
 * # Safety
 * `m` must be a live handle.
 */
char *tr_matrix_to_string(const struct TrMatrix *m);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void tr_string_free(char *s);

/**
 * # Safety
 * `m` must be a live handle and `out` writable.
 */
enum TrStatus tr_is_pointed(const struct TrMatrix *m, bool *out);

/**
 * Every bouquet is a singleton.
 *
 * # Safety
 * `m` must be a live handle and `out` writable.
 */
enum TrStatus tr_is_simple(const struct TrMatrix *m, bool *out);

/**
 * # Safety
 * `m` must be a live handle and `out` writable.
 */
enum TrStatus tr_is_general_position(const struct TrMatrix *m, bool *out);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum TrStatus tr_is_strongly_robust(const struct TrGraver *g, bool *out);

/**
 * Graver basis of a pointed matrix. `threads == 0` uses the global pool;
 * the result does not depend on the thread count.
 *
 * # Safety
 * `m` must be a live handle and `out` writable.
 */
enum TrStatus tr_graver_basis(const struct TrMatrix *m, size_t threads, struct TrGraver **out);

/**
 * # Safety
 * `g` must be null or a handle from this library not yet freed.
 */
void tr_graver_free(struct TrGraver *g);

/**
 * Number of `±` pairs.
 *
 * # Safety
 * `g` must be a live handle.
 */
size_t tr_graver_len(const struct TrGraver *g);

/**
 * Length of each element (the number of columns of the source matrix).
 *
 * # Safety
 * `g` must be a live handle.
 */
size_t tr_graver_width(const struct TrGraver *g);

/**
 * Coordinate `j` of element `i`.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum TrStatus tr_graver_entry(const struct TrGraver *g, size_t i, size_t j, int64_t *out);

/**
 * The elements as the rows of a new matrix.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum TrStatus tr_graver_to_matrix(const struct TrGraver *g, struct TrMatrix **out);

/**
 * The strongly robust complex of a simple, pointed matrix without free
 * vectors.
 *
 * # Safety
 * `m` must be a live handle and `out` writable.
 */
enum TrStatus tr_strongly_robust_complex(const struct TrMatrix *m,
                                         size_t threads,
                                         struct TrComplex **out);

/**
 * # Safety
 * `c` must be null or a handle from this library not yet freed.
 */
void tr_complex_free(struct TrComplex *c);

/**
 * Dimension, with `-1` for `{∅}` and `-2` for the void complex.
 *
 * # Safety
 * `c` must be a live handle.
 */
ptrdiff_t tr_complex_dimension(const struct TrComplex *c);

/**
 * # Safety
 * `c` must be a live handle.
 */
size_t tr_complex_num_maximal(const struct TrComplex *c);

/**
 * Copies maximal face `k` (sorted, 1-based labels) into `buf`, which holds
 * `cap` values, and stores its size in `len`. When `cap` is too small only
 * `len` is written and `TR_STATUS_LENGTH_MISMATCH` is returned.
 *
 * # Safety
 * `c` must be a live handle, `buf` must hold `cap` values, `len` writable.
 */
enum TrStatus tr_complex_maximal_face(const struct TrComplex *c,
                                      size_t k,
                                      size_t *buf,
                                      size_t cap,
                                      size_t *len);

/**
 * The `d × n` matrix with columns `(1, t, …, t^(d-1))` for increasing `ts`.
 *
 * # Safety
 * `ts` must point to `n` readable values and `out` must be writable.
 */
enum TrStatus tr_cyclic_configuration(size_t d, const int64_t *ts, size_t n, struct TrMatrix **out);

/**
 * The partial Lawrence lifting for the 1-based index set `omega`.
 *
 * # Safety
 * `t` must be a live handle, `omega` must point to `len` readable values,
 * and `out` must be writable.
 */
enum TrStatus tr_lawrence_lift_omega(const struct TrMatrix *t,
                                     const size_t *omega,
                                     size_t len,
                                     struct TrMatrix **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TORIC_ROBUST_H */
