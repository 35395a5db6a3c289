#ifndef SEXTIC_GROUPS_H
#define SEXTIC_GROUPS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible call.
 */
typedef enum SexticStatus {
  SEXTIC_STATUS_OK = 0,
  SEXTIC_STATUS_NULL_ARGUMENT = 1,
  SEXTIC_STATUS_INVALID_UTF8 = 2,
  SEXTIC_STATUS_PARSE_ERROR = 3,
  SEXTIC_STATUS_UNKNOWN_ID = 4,
  SEXTIC_STATUS_COSET_OVERFLOW = 5,
  SEXTIC_STATUS_DOMAIN_ERROR = 6,
  SEXTIC_STATUS_INTERNAL_ERROR = 7,
} SexticStatus;

/**
 * Opaque handle to a finitely presented group.
 */
typedef struct SexticPresentation SexticPresentation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a presentation in the line-oriented file format.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum SexticStatus sextic_presentation_parse(const char *text, struct SexticPresentation **out);

/**
 * Loads `case:ID` (the printed fundamental group) or `group:ID`.
 *
 * # Safety
 * `target` must be a nul-terminated string and `out` a valid pointer.
 */
enum SexticStatus sextic_presentation_load(const char *target, struct SexticPresentation **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `p` must come from this library and not be used afterwards.
 */
void sextic_presentation_free(struct SexticPresentation *p);

/**
 * Number of generators, 0 for null.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
uintptr_t sextic_presentation_generator_count(const struct SexticPresentation *p);

/**
 * Writes the abelianization, e.g. `Z + Z2`, as a new string to be released
 * with [`sextic_string_free`].
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum SexticStatus sextic_abelianization(const struct SexticPresentation *p, char **out);

/**
 * Group order by coset enumeration over the trivial subgroup.
 * Returns `CosetOverflow` when more than `limit` cosets are needed.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum SexticStatus sextic_coset_order(const struct SexticPresentation *p,
                                     uintptr_t limit,
                                     uint64_t *out);

/**
 * Number of homomorphisms into a battery group (`Z6`, `S3`, `D8`, `D10`,
 * `D12`, `A4`, `S4`).
 *
 * # Safety
 * `p` must be a live handle, `group` a nul-terminated string and `out` a
 * valid pointer.
 */
enum SexticStatus sextic_hom_count(const struct SexticPresentation *p,
                                   const char *group,
                                   uint64_t *out);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void sextic_string_free(char *s);

/**
 * Message of the last failure on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *sextic_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SEXTIC_GROUPS_H */
