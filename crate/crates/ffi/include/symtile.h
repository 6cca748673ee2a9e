#ifndef SYMTILE_H
#define SYMTILE_H

/* Generated by cbindgen from the symtile-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call in this API.
 */
typedef enum SymtileStatus {
  SymtileStatus_Ok = 0,
  SymtileStatus_NullPointer = 1,
  SymtileStatus_InvalidUtf8 = 2,
  SymtileStatus_ParseError = 3,
  SymtileStatus_InvalidArgument = 4,
  SymtileStatus_ModulusMismatch = 5,
  SymtileStatus_EmptySet = 6,
  SymtileStatus_NotASubgroup = 7,
  SymtileStatus_BoundExceeded = 8,
  SymtileStatus_InternalError = 9,
} SymtileStatus;

/**
 * Which pairing feeds the transform.
 */
typedef enum SymtileForm {
  SymtileForm_Euclidean = 0,
  SymtileForm_Symplectic = 1,
} SymtileForm;

/**
 * Opaque handle to a subset of Z_n x Z_n.
 */
typedef struct SymtilePointSet SymtilePointSet;

/**
 * Options for [`symtile_verify`]. `sampled = false` runs exhaustively and
 * ignores `samples` and `seed`; `workers = 0` uses all cores.
 */
typedef struct SymtileVerifyOptions {
  bool sampled;
  uint64_t samples;
  uint64_t seed;
  uint32_t workers;
} SymtileVerifyOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing this thread's most recent failure. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *symtile_last_error(void);

/**
 * Parses set-file text (`# comments`, `n <modulus>`, one `x1 x2` pair per
 * line) into a new handle.
 *
 * # Safety
 * `text` must point to a NUL-terminated string; `out` must be valid.
 */
enum SymtileStatus symtile_point_set_parse(const char *text, struct SymtilePointSet **out);

/**
 * Builds a set from `pair_count` coordinate pairs laid out as
 * `x1, y1, x2, y2, ...`; coordinates are reduced mod `n`, duplicates merge.
 *
 * # Safety
 * `coords` must point to `2 * pair_count` readable `u32`s; `out` valid.
 */
enum SymtileStatus symtile_point_set_new(uint32_t n,
                                         const uint32_t *coords,
                                         size_t pair_count,
                                         struct SymtilePointSet **out);

/**
 * Frees a handle returned by this API. Null is ignored.
 *
 * # Safety
 * `set` must be null or a pointer previously returned by this API and not
 * yet freed.
 */
void symtile_point_set_free(struct SymtilePointSet *set);

/**
 * Frees a string returned through a `char**` out parameter. Null is ignored.
 *
 * # Safety
 * `text` must be null or a string previously returned by this API.
 */
void symtile_string_free(char *text);

/**
 * Ambient modulus of the set; 0 if the handle is null.
 *
 * # Safety
 * `set` must be null or a valid handle.
 */
uint32_t symtile_point_set_modulus(const struct SymtilePointSet *set);

/**
 * Number of points in the set; 0 if the handle is null.
 *
 * # Safety
 * `set` must be null or a valid handle.
 */
size_t symtile_point_set_len(const struct SymtilePointSet *set);

/**
 * Copies up to `max_pairs` coordinate pairs into `coords` (layout
 * `x1, y1, x2, y2, ...`, canonical order) and returns the number written.
 *
 * # Safety
 * `coords` must have room for `2 * max_pairs` `u32`s.
 */
size_t symtile_point_set_coords(const struct SymtilePointSet *set,
                                uint32_t *coords,
                                size_t max_pairs);

/**
 * Canonical set-file text for the set.
 *
 * # Safety
 * `set` must be a valid handle; `out` must be valid.
 */
enum SymtileStatus symtile_point_set_format(const struct SymtilePointSet *set, char **out);

/**
 * Character-grid rendering with the origin at the bottom left.
 *
 * # Safety
 * `set` must be a valid handle; `out` must be valid.
 */
enum SymtileStatus symtile_point_set_render(const struct SymtilePointSet *set, char **out);

/**
 * The difference set of `a`.
 *
 * # Safety
 * `a` must be a valid handle; `out` must be valid.
 */
enum SymtileStatus symtile_difference_set(const struct SymtilePointSet *a,
                                          struct SymtilePointSet **out);

/**
 * Zero set of the transform of `1_a`; `a` must be nonempty.
 *
 * # Safety
 * `a` must be a valid handle; `out` must be valid.
 */
enum SymtileStatus symtile_zero_set(const struct SymtilePointSet *a,
                                    enum SymtileForm form,
                                    struct SymtilePointSet **out);

/**
 * Symplectic orthogonal of the subgroup carried by `h`; fails with
 * `NotASubgroup` when `h` is not closed.
 *
 * # Safety
 * `h` must be a valid handle; `out` must be valid.
 */
enum SymtileStatus symtile_orthogonal(const struct SymtilePointSet *h,
                                      struct SymtilePointSet **out);

/**
 * Tiling predicate with its cross-checked characterizations. `out_json` may
 * be null when only the verdict is wanted.
 *
 * # Safety
 * `a` and `b` must be valid handles; `out_holds` must be valid.
 */
enum SymtileStatus symtile_check_tiling(const struct SymtilePointSet *a,
                                        const struct SymtilePointSet *b,
                                        bool *out_holds,
                                        char **out_json);

/**
 * Spectral predicate; same contract as [`symtile_check_tiling`].
 *
 * # Safety
 * `a` and `s` must be valid handles; `out_holds` must be valid.
 */
enum SymtileStatus symtile_check_spectral(const struct SymtilePointSet *a,
                                          const struct SymtilePointSet *s,
                                          enum SymtileForm form,
                                          bool *out_holds,
                                          char **out_json);

/**
 * Runs a verification suite. `suite` is one of `counting`, `self`, `diff`,
 * `main-i`, `main-ii`, `main-iii`, `cyclic-counterexample`; `parameter` is
 * the modulus n or the prime p that suite expects. `opts` may be null for
 * exhaustive defaults. `out_json` (optional) receives the full report.
 *
 * # Safety
 * Pointer arguments must be null or valid as documented.
 */
enum SymtileStatus symtile_verify(const char *suite,
                                  uint32_t parameter,
                                  const struct SymtileVerifyOptions *opts,
                                  bool *out_pass,
                                  char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SYMTILE_H */
