#ifndef SYLOWCHAR_H
#define SYLOWCHAR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SylowcharStatus {
  SYLOWCHAR_STATUS_OK = 0,
  SYLOWCHAR_STATUS_NULL_POINTER = 1,
  SYLOWCHAR_STATUS_INVALID_UTF8 = 2,
  SYLOWCHAR_STATUS_PARSE = 3,
  SYLOWCHAR_STATUS_INVALID_ARGUMENT = 4,
  SYLOWCHAR_STATUS_BOUND_EXCEEDED = 5,
  SYLOWCHAR_STATUS_INTERNAL = 6,
  SYLOWCHAR_STATUS_PANIC = 7,
} SylowcharStatus;

/**
 * An integer partition.
 */
typedef struct SylowcharPartition SylowcharPartition;

/**
 * `f(λ)` for every `λ ⊢ n`, in reverse lexicographic order.
 */
typedef struct SylowcharReport SylowcharReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread; empty after a success.
 * The pointer stays valid until the next call into this library on the same thread.
 */
const char *sylowchar_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void sylowchar_string_free(char *s);

/**
 * Parses `"5,4"`, `"(3,2,1)"` or `"2^4,1"`.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum SylowcharStatus sylowchar_partition_parse(const char *text, struct SylowcharPartition **out);

/**
 * Builds a partition from `len` weakly decreasing positive parts.
 *
 * # Safety
 * `parts` must point to `len` readable values (or be null when `len` is 0).
 */
enum SylowcharStatus sylowchar_partition_from_parts(const uint32_t *parts,
                                                    size_t len,
                                                    struct SylowcharPartition **out);

/**
 * # Safety
 * `p` must come from this library and not have been freed. Null is ignored.
 */
void sylowchar_partition_free(struct SylowcharPartition *p);

/**
 * Number of parts; 0 for null.
 *
 * # Safety
 * `p` must be a live handle or null.
 */
size_t sylowchar_partition_len(const struct SylowcharPartition *p);

/**
 * Sum of the parts; 0 for null.
 *
 * # Safety
 * `p` must be a live handle or null.
 */
uint64_t sylowchar_partition_size(const struct SylowcharPartition *p);

/**
 * Copies up to `cap` parts into `buf`; `written` receives the number copied.
 * Fails with `INVALID_ARGUMENT` when `cap` is smaller than the length.
 *
 * # Safety
 * `buf` must have room for `cap` values.
 */
enum SylowcharStatus sylowchar_partition_parts(const struct SylowcharPartition *p,
                                               uint32_t *buf,
                                               size_t cap,
                                               size_t *written);

/**
 * `f(λ)` as a decimal string.
 *
 * # Safety
 * `lambda` must be a live handle; `out` must be writable.
 */
enum SylowcharStatus sylowchar_multiplicity(uint64_t p,
                                            uint64_t n,
                                            const struct SylowcharPartition *lambda,
                                            char **out);

/**
 * Computes `f` over all partitions of `n`.
 *
 * # Safety
 * `out` must be writable.
 */
enum SylowcharStatus sylowchar_report_new(uint64_t p, uint64_t n, struct SylowcharReport **out);

/**
 * # Safety
 * `r` must come from this library and not have been freed. Null is ignored.
 */
void sylowchar_report_free(struct SylowcharReport *r);

/**
 * Number of entries; 0 for null.
 *
 * # Safety
 * `r` must be a live handle or null.
 */
size_t sylowchar_report_len(const struct SylowcharReport *r);

/**
 * Number of partitions with `f(λ) = 0`; 0 for null.
 *
 * # Safety
 * `r` must be a live handle or null.
 */
size_t sylowchar_report_zero_count(const struct SylowcharReport *r);

/**
 * Whether the degree identity and conjugation symmetry both held.
 *
 * # Safety
 * `r` must be a live handle or null.
 */
bool sylowchar_report_checks_passed(const struct SylowcharReport *r);

/**
 * Entry `index`: a new partition handle and `f` as a decimal string.
 *
 * # Safety
 * `r` must be a live handle; both out pointers must be writable.
 */
enum SylowcharStatus sylowchar_report_entry(const struct SylowcharReport *r,
                                            size_t index,
                                            struct SylowcharPartition **partition_out,
                                            char **multiplicity_out);

/**
 * The report as JSON.
 *
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum SylowcharStatus sylowchar_report_to_json(const struct SylowcharReport *r, char **out);

/**
 * Littlewood–Richardson coefficient `c^λ_{μν}`.
 *
 * # Safety
 * All handles must be live; `out` must be writable.
 */
enum SylowcharStatus sylowchar_lr_coefficient(const struct SylowcharPartition *lambda,
                                              const struct SylowcharPartition *mu,
                                              const struct SylowcharPartition *nu,
                                              uint64_t *out);

/**
 * `Ω_q(λ)` as a new partition handle.
 *
 * # Safety
 * `lambda` must be a live handle; `out` must be writable.
 */
enum SylowcharStatus sylowchar_omega(const struct SylowcharPartition *lambda,
                                     uint32_t q,
                                     struct SylowcharPartition **out);

/**
 * Cycle-type distribution of a Sylow p-subgroup of `S_n` as JSON.
 *
 * # Safety
 * `out` must be writable.
 */
enum SylowcharStatus sylowchar_sylow_classes_json(uint64_t p, uint64_t n, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SYLOWCHAR_H */
