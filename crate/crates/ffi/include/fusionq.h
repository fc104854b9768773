/* C interface to the fusionq library. */

#ifndef FUSIONQ_H
#define FUSIONQ_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

#define FUSIONQ_OK 0

#define FUSIONQ_VERIFY_FAILED 1

#define FUSIONQ_USAGE_ERROR 2

#define FUSIONQ_MATH_ERROR 3

/**
 * Opaque computed fusion element.
 */
typedef struct FusionqResult FusionqResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Compute F_Λ or G_Λ. On success writes a handle to `out` and returns 0.
 *
 * # Safety
 * `shape`, `tableau`, `variant`, `kind` and `mode` must be valid
 * NUL-terminated strings (see the CLI flags for the accepted values) and
 * `out` must point to writable memory for one pointer.
 */
int32_t fusionq_compute(const char *shape,
                        const char *tableau,
                        const char *variant,
                        const char *kind,
                        const char *mode,
                        uint64_t seed,
                        struct FusionqResult **out);

/**
 * Canonical JSON of a computed result; free with [`fusionq_string_free`].
 *
 * # Safety
 * `result` must be a live handle returned by [`fusionq_compute`].
 */
char *fusionq_result_json(const struct FusionqResult *result);

/**
 * Number of T_σ basis terms in the element.
 *
 * # Safety
 * `result` must be a live handle returned by [`fusionq_compute`].
 */
uintptr_t fusionq_result_term_count(const struct FusionqResult *result);

/**
 * # Safety
 * `result` must be a handle returned by [`fusionq_compute`], not yet freed;
 * NULL is accepted and ignored.
 */
void fusionq_result_free(struct FusionqResult *result);

/**
 * Run verification suites ("all" or comma-separated names). Returns 0 when
 * every check passes, 1 on a failed check. When `report_out` is non-NULL it
 * receives the JSON report array (caller frees).
 *
 * # Safety
 * `suite` and `mode` must be valid NUL-terminated strings; `report_out`
 * must be NULL or point to writable memory for one pointer.
 */
int32_t fusionq_verify(const char *suite,
                       uintptr_t max_n,
                       const char *mode,
                       uint64_t seed,
                       char **report_out);

/**
 * The standard tableaux of a shape as a JSON array of row arrays; free
 * with [`fusionq_string_free`]. NULL on a bad shape.
 *
 * # Safety
 * `shape` must be a valid NUL-terminated string.
 */
char *fusionq_list_tableaux(const char *shape);

/**
 * The message for the most recent failure on this thread, or NULL; free
 * with [`fusionq_string_free`].
 */
char *fusionq_last_error(void);

/**
 * # Safety
 * `s` must be a string returned by this library, not yet freed; NULL is
 * accepted and ignored.
 */
void fusionq_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* FUSIONQ_H */
