#ifndef GENTOR_H
#define GENTOR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stdint.h>

/**
 * Result codes; the nonzero values of invalid input and theorem violations
 * agree with the exit codes of the command-line tool.
 */
typedef enum GentorStatus {
  GENTOR_STATUS_OK = 0,
  GENTOR_STATUS_INVALID_INPUT = 2,
  GENTOR_STATUS_THEOREM_VIOLATION = 3,
  GENTOR_STATUS_NULL_POINTER = 4,
  GENTOR_STATUS_UNSUPPORTED = 5,
  GENTOR_STATUS_OVERFLOW = 6,
  GENTOR_STATUS_PANIC = 7,
} GentorStatus;

/**
 * Opaque group handle.
 */
typedef struct GentorGroup GentorGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Opens a catalog group (`promislow`, `K:2,1,1`, `dinf*Z`, ...).
 *
 * # Safety
 * `name` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum GentorStatus gentor_group_open(const char *name, struct GentorGroup **out);

/**
 * Releases a handle from [`gentor_group_open`]; null is ignored.
 *
 * # Safety
 * `group` must be null or a handle not freed before.
 */
void gentor_group_free(struct GentorGroup *group);

/**
 * Whether the element given by `word` is generalized torsion.
 *
 * # Safety
 * Pointers must be valid; `word` NUL-terminated.
 */
enum GentorStatus gentor_decide(const struct GentorGroup *group, const char *word, bool *out);

/**
 * Bounds `lower <= exp(G) <= upper` on the generalized exponent.
 *
 * # Safety
 * Pointers must be valid.
 */
enum GentorStatus gentor_exponent_bounds(const struct GentorGroup *group,
                                         uint64_t *lower,
                                         uint64_t *upper,
                                         bool *exact);

/**
 * Group invariants as a JSON object; unavailable entries are `null`.
 *
 * # Safety
 * Pointers must be valid. Free the result with [`gentor_string_free`].
 */
enum GentorStatus gentor_info_json(const struct GentorGroup *group, char **out);

/**
 * Verified certificate for `word` as JSON.
 *
 * # Safety
 * Pointers must be valid; `word` NUL-terminated. Free the result with
 * [`gentor_string_free`].
 */
enum GentorStatus gentor_witness_json(const struct GentorGroup *group,
                                      const char *word,
                                      char **out);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not freed before.
 */
void gentor_string_free(char *s);

/**
 * Message of the last failed call on this thread, empty after a success.
 * Valid until the next call into the library on the same thread.
 */
const char *gentor_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GENTOR_H */
