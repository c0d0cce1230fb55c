#ifndef HILBERT_CELLS_H
#define HILBERT_CELLS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HcStatus {
  HC_STATUS_OK = 0,
  HC_STATUS_NULL_POINTER = 1,
  HC_STATUS_INVALID_ARGUMENT = 2,
  HC_STATUS_NON_GENERIC = 3,
  HC_STATUS_OUT_OF_RANGE = 4,
  HC_STATUS_BUFFER_TOO_SMALL = 5,
  HC_STATUS_PANIC = 6,
} HcStatus;

/**
 * Cell labels of degree `k` for `n` points.
 */
typedef struct HcBasis HcBasis;

/**
 * Pairing mask over a `<_λ`-compatible numbering of the degree-`k` cells.
 */
typedef struct HcMask HcMask;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or NULL. The pointer
 * stays valid until the next call into this library from the same thread.
 */
const char *hc_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void hc_string_free(char *s);

/**
 * Writes `b_0..b_2n` to `out`. `*written` receives the required length even
 * when the buffer is too small.
 *
 * # Safety
 * `out` must point to `cap` writable `size_t`; `written` must be writable.
 */
enum HcStatus hc_betti(size_t n, size_t *out, size_t cap, size_t *written);

/**
 * # Safety
 * `out` must be writable.
 */
enum HcStatus hc_basis_new(size_t n, int64_t k, struct HcBasis **out);

/**
 * # Safety
 * `basis` must be a live handle from [`hc_basis_new`] or NULL.
 */
size_t hc_basis_len(const struct HcBasis *basis);

/**
 * Text label `"D2|D1|D0"` of cell `i`.
 *
 * # Safety
 * `basis` must be a live handle; `out` must be writable.
 */
enum HcStatus hc_basis_label(const struct HcBasis *basis, size_t i, char **out);

/**
 * # Safety
 * `basis` must be NULL or a handle from [`hc_basis_new`] not yet freed.
 */
void hc_basis_free(struct HcBasis *basis);

/**
 * # Safety
 * `out` must be writable.
 */
enum HcStatus hc_mask_new(size_t n,
                          int64_t k,
                          int64_t lambda1,
                          int64_t lambda2,
                          struct HcMask **out);

/**
 * # Safety
 * `mask` must be a live handle or NULL.
 */
size_t hc_mask_dim(const struct HcMask *mask);

/**
 * Entry `(i, j)`: false means the product of row `i` and the dual of column
 * `j` vanishes.
 *
 * # Safety
 * `mask` must be a live handle; `out` must be writable.
 */
enum HcStatus hc_mask_get(const struct HcMask *mask, size_t i, size_t j, bool *out);

/**
 * # Safety
 * `mask` must be a live handle; `out` must be writable.
 */
enum HcStatus hc_mask_row_label(const struct HcMask *mask, size_t i, char **out);

/**
 * Sets `*passed` to whether the mask is upper triangular with a true
 * diagonal.
 *
 * # Safety
 * `mask` must be a live handle; `passed` must be writable.
 */
enum HcStatus hc_mask_check(const struct HcMask *mask, bool *passed);

/**
 * Sizes of the diagonal blocks, in row order.
 *
 * # Safety
 * As for [`hc_betti`]; `mask` must be a live handle.
 */
enum HcStatus hc_mask_blocks(const struct HcMask *mask, size_t *out, size_t cap, size_t *written);

/**
 * # Safety
 * `mask` must be NULL or a handle from [`hc_mask_new`] not yet freed.
 */
void hc_mask_free(struct HcMask *mask);

/**
 * `*out = false` when the product of the two cell classes must vanish.
 *
 * # Safety
 * `t1`, `t2` must be NUL-terminated strings; `out` must be writable.
 */
enum HcStatus hc_cup_may_be_nonzero(const char *t1, const char *t2, bool *out);

/**
 * Line-bundle weight at a cell for the torus weight `(w0, w1, w2)`.
 *
 * # Safety
 * `triple` must be a NUL-terminated string; `out` must be writable.
 */
enum HcStatus hc_phi(int64_t w0,
                     int64_t w1,
                     int64_t w2,
                     int64_t d,
                     const char *triple,
                     int64_t *out);

/**
 * Generic staircase of size `n` for `u1, u2 < 0`, as a partition string.
 *
 * # Safety
 * `out` must be writable.
 */
enum HcStatus hc_generic_staircase(int64_t u1, int64_t u2, size_t n, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HILBERT_CELLS_H */
