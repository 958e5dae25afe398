#ifndef CHROMQ_H
#define CHROMQ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Largest total degree accepted by [`chromq_expand_json`] and [`chromq_classes_count`].
 */
#define CHROMQ_MAX_DEGREE 10

typedef enum ChromqStatus {
  CHROMQ_STATUS_OK = 0,
  CHROMQ_STATUS_NULL_POINTER = 1,
  CHROMQ_STATUS_INVALID_UTF8 = 2,
  CHROMQ_STATUS_INVALID_INPUT = 3,
  CHROMQ_STATUS_DISAGREEMENT = 4,
  CHROMQ_STATUS_TOO_LARGE = 5,
  CHROMQ_STATUS_PANIC = 6,
} ChromqStatus;

/**
 * Opaque handle to a natural unit interval order.
 */
typedef struct ChromqPoset ChromqPoset;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parse a comma-separated sequence such as `"2,3,3"` into a new poset.
 *
 * # Safety
 * `m` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum ChromqStatus chromq_poset_new(const char *m, struct ChromqPoset **out);

/**
 * # Safety
 * `p` must be null or a pointer obtained from [`chromq_poset_new`] not yet freed.
 */
void chromq_poset_free(struct ChromqPoset *p);

/**
 * Number of vertices.
 *
 * # Safety
 * `p` must be a live poset handle and `out` a valid pointer.
 */
enum ChromqStatus chromq_poset_size(const struct ChromqPoset *p, size_t *out);

/**
 * Height: the longest chain, equal to the largest independent set of `inc(P)`.
 *
 * # Safety
 * `p` must be a live poset handle and `out` a valid pointer.
 */
enum ChromqStatus chromq_poset_height(const struct ChromqPoset *p, size_t *out);

/**
 * Expansion report as JSON, in the same schema as `chromq expand --format json`.
 *
 * `mu` may be null (all ones); `basis` is one of `m e h p s f`. The string
 * written to `out` must be released with [`chromq_string_free`].
 *
 * # Safety
 * `p` must be a live poset handle, `basis` a valid string, `mu` null or a
 * valid string, and `out` a valid pointer.
 */
enum ChromqStatus chromq_expand_json(const struct ChromqPoset *p,
                                     const char *mu,
                                     const char *basis,
                                     char **out);

/**
 * Numbers of heaps and flip classes of type `mu` (null for all ones).
 *
 * # Safety
 * `p` must be a live poset handle, `mu` null or a valid string, and both
 * out-pointers valid.
 */
enum ChromqStatus chromq_classes_count(const struct ChromqPoset *p,
                                       const char *mu,
                                       size_t *heaps,
                                       size_t *classes);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void chromq_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next library call on the same thread.
 */
const char *chromq_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHROMQ_H */
