/* C interface to the seshadri period-lattice library. Generated by cbindgen; do not edit. */

#ifndef SESHADRI_H
#define SESHADRI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of a call across the C boundary.
typedef enum SeshadriStatus {
  // The call succeeded and all out pointers are filled in.
  SESHADRI_STATUS_OK = 0,
  // A required pointer argument was null.
  SESHADRI_STATUS_NULL_ARGUMENT = 1,
  // The input failed validation; see `seshadri_last_error_message`.
  SESHADRI_STATUS_INVALID_INPUT = 2,
  // The computation failed for numerical reasons (indefinite form,
  // ill-conditioned matrix, enumeration region too large).
  SESHADRI_STATUS_NUMERICAL_ERROR = 3,
  // A bug inside the library; the panic was caught at the boundary.
  SESHADRI_STATUS_INTERNAL_PANIC = 4,
} SeshadriStatus;

// An opaque, validated polarization type. Create with `seshadri_type_new`,
// release with `seshadri_type_free`.
typedef struct SeshadriType SeshadriType;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string. Do not free.
const char *seshadri_version(void);

// Returns a copy of the last error message raised on this thread, or null
// if the most recent call succeeded. The caller owns the copy and must
// release it with `seshadri_string_free`.
char *seshadri_last_error_message(void);

// Releases a string previously returned by this library. Null is ignored.
//
// # Safety
// `s` must be a pointer obtained from this library and not yet freed.
void seshadri_string_free(char *s);

// Validates a polarization type from its `len` integer degrees and writes a
// handle to `out`. Degrees must be positive with each dividing the next.
//
// # Safety
// `degrees` must point to `len` readable `int64_t` values and `out` must be
// a valid pointer.
enum SeshadriStatus seshadri_type_new(const int64_t *degrees,
                                      size_t len,
                                      struct SeshadriType **out);

// Releases a type handle. Null is ignored.
//
// # Safety
// `t` must be a handle from `seshadri_type_new` and not yet freed.
void seshadri_type_free(struct SeshadriType *t);

// Number of degrees in the type (the abelian variety dimension), or 0 if
// `t` is null.
//
// # Safety
// `t` must be null or a live handle from `seshadri_type_new`.
size_t seshadri_type_dimension(const struct SeshadriType *t);

// Writes the pfaffian (the product of the degrees) as a decimal string.
//
// # Safety
// `t` must be a live handle and `out` a valid pointer.
enum SeshadriStatus seshadri_type_pfaffian(const struct SeshadriType *t, char **out);

// Writes whether the type satisfies the exact very-ampleness criterion.
//
// # Safety
// `t` must be a live handle and `out` a valid pointer.
enum SeshadriStatus seshadri_type_very_ample(const struct SeshadriType *t, bool *out);

// Writes the Seshadri lower bound that holds for a very general variety of
// this type.
//
// # Safety
// `t` must be a live handle and `out` a valid pointer.
enum SeshadriStatus seshadri_type_very_general_lower(const struct SeshadriType *t, double *out);

// Writes the lower bound on the largest minimal period length attained over
// all varieties of this type. This is also the squared-radius existence
// threshold used by the random search.
//
// # Safety
// `t` must be a live handle and `out` a valid pointer.
enum SeshadriStatus seshadri_type_max_period_lower(const struct SeshadriType *t, double *out);

// Writes `{"report": ..., "very_ample": ...}` with the elementary Seshadri
// bounds and the very-ampleness verdict for the type.
//
// # Safety
// `t` must be a live handle and `out_json` a valid pointer.
enum SeshadriStatus seshadri_bounds_json(const struct SeshadriType *t, char **out_json);

// Computes the minimal period length of the lattice described by
// `input_json`, a document of the form
// `{"g": 2, "type": [1, 2], "X": [[...]], "Y": [[...]]}` where `X` may be
// omitted for a purely imaginary period matrix. Writes
// `{"m": ..., "witness": [...], "certified_radius": ...,
// "seshadri_lower": ...}`.
//
// # Safety
// `input_json` must be a NUL-terminated string and `out_json` a valid
// pointer.
enum SeshadriStatus seshadri_period_length_json(const char *input_json, char **out_json);

// Counts lattice vectors of squared length at most `r_squared` for the
// lattice described by `input_json` (same document shape as
// `seshadri_period_length_json`). The count excludes zero and is always
// even.
//
// # Safety
// `input_json` must be a NUL-terminated string and `out_count` a valid
// pointer.
enum SeshadriStatus seshadri_count_periods(const char *input_json,
                                           double r_squared,
                                           uint64_t *out_count);

// Writes `{"rows": [...]}` with the abelian-surface bound table for
// polarizations `(1, d)`, `d` from 1 to `dmax`.
//
// # Safety
// `out_json` must be a valid pointer.
enum SeshadriStatus seshadri_surface_table_json(int64_t dmax, char **out_json);

// Writes the fundamental solution of `l^2 - n k^2 = 1` as
// `{"n": ..., "ell0": "...", "k0": "...", "period": ...,
// "quotients": [...]}`. The solution components are decimal strings because
// they overflow any fixed-width integer for many `n`.
//
// # Safety
// `out_json` must be a valid pointer.
enum SeshadriStatus seshadri_pell_json(int64_t n, char **out_json);

// Writes upper bounds for Prym varieties of curve coverings with the given
// base genus. Pass `gonality <= 0` to omit the gonality refinement. The
// output is `{"dim_p": ..., "seshadri": ..., "minimal_period": ...}`.
//
// # Safety
// `out_json` must be a valid pointer.
enum SeshadriStatus seshadri_prym_json(int64_t genus, int64_t gonality, char **out_json);

// Runs the Monte Carlo average of the period count over the vertical family
// at height `y`. `params_json` looks like
// `{"type": [1], "y": 10.0, "R2": 0.5, "samples": 10000, "seed": 7}`
// (`seed` defaults to 0). The output document matches the command-line
// `average` results.
//
// # Safety
// `params_json` must be a NUL-terminated string and `out_json` a valid
// pointer.
enum SeshadriStatus seshadri_average_json(const char *params_json, char **out_json);

// Runs the random search for a period lattice whose minimal period length
// exceeds `target`. `params_json` looks like
// `{"type": [1, 2], "target": 0.8, "trials": 5000, "seed": 1}` with an
// optional `"y_grid": [2.0, 5.0]`. The output document matches the
// command-line `search` results.
//
// # Safety
// `params_json` must be a NUL-terminated string and `out_json` a valid
// pointer.
enum SeshadriStatus seshadri_search_json(const char *params_json, char **out_json);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* SESHADRI_H */
