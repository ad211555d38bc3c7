/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef EXPOSG_H
#define EXPOSG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ExposgStatus {
  EXPOSG_STATUS_OK = 0,
  EXPOSG_STATUS_NULL_POINTER = 1,
  EXPOSG_STATUS_INVALID_UTF8 = 2,
  EXPOSG_STATUS_PARSE = 3,
  EXPOSG_STATUS_INVALID_ARGUMENT = 4,
  EXPOSG_STATUS_BUDGET_EXCEEDED = 5,
  EXPOSG_STATUS_INTERNAL = 6,
} ExposgStatus;

/**
 * Opaque square rational matrix.
 */
typedef struct ExposgMatrix ExposgMatrix;

/**
 * Opaque subsemigroup of ℕ.
 */
typedef struct ExposgSemigroup ExposgSemigroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after success.
 * The pointer stays valid until the next call into this library on the same thread.
 */
const char *exposg_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 */
void exposg_string_free(char *s);

/**
 * Parses `{"dim": d, "entries": [["p/q", ...], ...]}`.
 */
enum ExposgStatus exposg_matrix_from_json(const char *json, struct ExposgMatrix **out);

/**
 * Releases a matrix handle. Null is ignored.
 */
void exposg_matrix_free(struct ExposgMatrix *m);

enum ExposgStatus exposg_matrix_dim(const struct ExposgMatrix *m, size_t *out);

enum ExposgStatus exposg_matrix_to_json(const struct ExposgMatrix *m, char **out);

/**
 * Semigroup generated by `len` positive integers; `len == 0` gives `{0}`.
 */
enum ExposgStatus exposg_semigroup_from_generators(const uint64_t *generators,
                                                   size_t len,
                                                   struct ExposgSemigroup **out);

/**
 * Releases a semigroup handle. Null is ignored.
 */
void exposg_semigroup_free(struct ExposgSemigroup *s);

enum ExposgStatus exposg_semigroup_contains(const struct ExposgSemigroup *s, uint64_t n, bool *out);

/**
 * Frobenius number, `-1` for ℕ. Fails with `INVALID_ARGUMENT` unless the
 * semigroup is numerical.
 */
enum ExposgStatus exposg_semigroup_frobenius(const struct ExposgSemigroup *s, int64_t *out);

enum ExposgStatus exposg_semigroup_to_json(const struct ExposgSemigroup *s, char **out);

/**
 * Exact `S(A)`. `max_states == 0` selects the default budget.
 */
enum ExposgStatus exposg_exponent_semigroup(const struct ExposgMatrix *m,
                                            size_t max_states,
                                            struct ExposgSemigroup **out);

/**
 * Power-integrality report and exponent-semigroup analysis as JSON.
 * `trace_bound == 0` selects `2·dim`; `max_states == 0` the default budget.
 */
enum ExposgStatus exposg_analyze_json(const struct ExposgMatrix *m,
                                      uint64_t trace_bound,
                                      size_t max_states,
                                      char **out);

/**
 * A matrix whose exponent semigroup is `s`, verified before returning.
 * `{0}` yields `[1/2]`.
 */
enum ExposgStatus exposg_construct(const struct ExposgSemigroup *s,
                                   int64_t base,
                                   struct ExposgMatrix **out);

/**
 * Lower and upper bounds on the matricial dimension.
 */
enum ExposgStatus exposg_bounds(const struct ExposgSemigroup *s, uint64_t *lower, uint64_t *upper);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* EXPOSG_H */
