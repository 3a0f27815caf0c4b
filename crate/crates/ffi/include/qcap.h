#ifndef QCAP_H
#define QCAP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. Zero is success.
 */
typedef enum QcapStatus {
  QCAP_STATUS_OK = 0,
  QCAP_STATUS_NULL_POINTER = 1,
  QCAP_STATUS_INVALID_ARGUMENT = 2,
  QCAP_STATUS_NOT_DIVISIBLE = 3,
  QCAP_STATUS_UNKNOWN_CASE = 4,
  QCAP_STATUS_OVERFLOW = 5,
  QCAP_STATUS_PANIC = 6,
} QcapStatus;

/**
 * Opaque handle to a series.
 */
typedef struct QcapSeries QcapSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *qcap_last_error(void);

/**
 * Build `Σ coeffs[i] q^(offset+i)`. A negative `trunc` means exact;
 * otherwise terms above `q^trunc` are dropped and the result is truncated.
 *
 * # Safety
 * `coeffs` must point to `len` readable values (or be NULL when `len` is 0),
 * and `out` must be writable.
 */
enum QcapStatus qcap_series_new(int64_t offset,
                                const int64_t *coeffs,
                                size_t len,
                                int64_t trunc,
                                struct QcapSeries **out);

/**
 * # Safety
 * `s` must be NULL or a handle from this library that was not freed.
 */
void qcap_series_free(struct QcapSeries *s);

/**
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum QcapStatus qcap_series_clone(const struct QcapSeries *s, struct QcapSeries **out);

/**
 * # Safety
 * `a` and `b` must be live handles and `out` writable.
 */
enum QcapStatus qcap_series_add(const struct QcapSeries *a,
                                const struct QcapSeries *b,
                                struct QcapSeries **out);

/**
 * # Safety
 * `a` and `b` must be live handles and `out` writable.
 */
enum QcapStatus qcap_series_sub(const struct QcapSeries *a,
                                const struct QcapSeries *b,
                                struct QcapSeries **out);

/**
 * # Safety
 * `a` and `b` must be live handles and `out` writable.
 */
enum QcapStatus qcap_series_mul(const struct QcapSeries *a,
                                const struct QcapSeries *b,
                                struct QcapSeries **out);

/**
 * Exact quotient `a / b`; fails with `NotDivisible` when `b` does not divide `a`.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` writable.
 */
enum QcapStatus qcap_series_div_exact(const struct QcapSeries *a,
                                      const struct QcapSeries *b,
                                      struct QcapSeries **out);

/**
 * Coefficient of `q^e`; `Overflow` if it does not fit in 64 bits.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum QcapStatus qcap_series_coeff(const struct QcapSeries *s, int64_t e, int64_t *out);

/**
 * Writes the highest exponent with a non-zero coefficient; `InvalidArgument`
 * for the zero series.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum QcapStatus qcap_series_degree(const struct QcapSeries *s, int64_t *out);

/**
 * Structural equality, including the truncation order.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` writable.
 */
enum QcapStatus qcap_series_equal(const struct QcapSeries *a,
                                  const struct QcapSeries *b,
                                  bool *out);

/**
 * Human-readable form such as `1 + q^2 - q^4`. Free with [`qcap_string_free`].
 *
 * # Safety
 * `s` must be NULL or a live handle.
 */
char *qcap_series_to_string(const struct QcapSeries *s);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library that was not freed.
 */
void qcap_string_free(char *s);

/**
 * Gaussian binomial `[top, bottom]` in `q^base`; zero outside `0 <= bottom <= top`.
 *
 * # Safety
 * `out` must be writable.
 */
enum QcapStatus qcap_q_binomial(int64_t top,
                                int64_t bottom,
                                uint32_t base,
                                struct QcapSeries **out);

/**
 * Evaluate a registered case at one parameter point. `names` and `values`
 * hold `n` pairs; parameters not given take their defaults. `passed` is set
 * to whether both sides agree.
 *
 * # Safety
 * `id` must be a nul-terminated string, `names` and `values` must point to
 * `n` entries (or be NULL when `n` is 0), and `passed` must be writable.
 */
enum QcapStatus qcap_verify_case(const char *id,
                                 const char *const *names,
                                 const int64_t *values,
                                 size_t n,
                                 bool *passed);

/**
 * Counts of the two partition classes of size `n` for `m` in {1, 2}.
 *
 * # Safety
 * `c` and `d` must be writable.
 */
enum QcapStatus qcap_partition_counts(uint32_t m, uint32_t n, uint64_t *c, uint64_t *d);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QCAP_H */
