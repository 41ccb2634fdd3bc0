#ifndef CONE_ANGLES_H
#define CONE_ANGLES_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CaStatus {
  CA_STATUS_OK = 0,
  CA_STATUS_NULL_POINTER = 1,
  CA_STATUS_DIMENSION_MISMATCH = 2,
  CA_STATUS_DIMENSION_OUT_OF_RANGE = 3,
  CA_STATUS_NON_FINITE = 4,
  CA_STATUS_INVALID_ARGUMENT = 5,
  CA_STATUS_CAP_EXCEEDED = 6,
  CA_STATUS_NUMERICAL = 7,
  CA_STATUS_PARSE = 8,
  CA_STATUS_BUFFER_TOO_SMALL = 9,
  CA_STATUS_PANIC = 10,
} CaStatus;

typedef enum CaMethod {
  CA_METHOD_EXACT = 0,
  CA_METHOD_ITERATIVE = 1,
  CA_METHOD_ORACLE = 2,
} CaMethod;

/**
 * Opaque cone handle.
 */
typedef struct CaCone CaCone;

/**
 * Cosine, angle and flags of an angle computation.
 */
typedef struct CaAngle {
  double cosine;
  double angle;
  bool attained;
  bool flagged;
  /**
   * Whether a certificate was written to the caller's buffers.
   */
  bool has_certificate;
} CaAngle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or null. Valid until the
 * next call on this thread.
 */
const char *ca_last_error(void);

/**
 * Builds a cone from `count` generators of length `dim`, row-major.
 *
 * # Safety
 * `data` must point to `count * dim` doubles and `out` must be writable.
 */
enum CaStatus ca_cone_from_generators(size_t dim,
                                      const double *data,
                                      size_t count,
                                      double tol,
                                      struct CaCone **out);

/**
 * Builds a cone from cone-file JSON text.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` must be writable.
 */
enum CaStatus ca_cone_from_json(const char *json, double tol, struct CaCone **out);

/**
 * Canonical cone-file JSON of `cone`; release with [`ca_string_free`].
 *
 * # Safety
 * `cone` must be a live handle and `out` writable.
 */
enum CaStatus ca_cone_to_json(const struct CaCone *cone_ptr, char **out);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void ca_string_free(char *s);

/**
 * # Safety
 * `cone` must come from this library or be null, and not be used afterwards.
 */
void ca_cone_free(struct CaCone *cone_ptr);

/**
 * Ambient dimension and the numbers of generators and halfspaces.
 *
 * # Safety
 * `cone` must be a live handle; output pointers may be null.
 */
enum CaStatus ca_cone_shape(const struct CaCone *cone_ptr,
                            size_t *dim,
                            size_t *generators,
                            size_t *halfspaces);

/**
 * Copies the unit generators, row-major, into `out` of `capacity` doubles.
 *
 * # Safety
 * `cone` must be a live handle and `out` must hold `capacity` doubles.
 */
enum CaStatus ca_cone_generators(const struct CaCone *cone_ptr, double *out, size_t capacity);

/**
 * Copies the unit halfspace normals `a` (cone is `<a, x> <= 0`).
 *
 * # Safety
 * `cone` must be a live handle and `out` must hold `capacity` doubles.
 */
enum CaStatus ca_cone_halfspaces(const struct CaCone *cone_ptr, double *out, size_t capacity);

/**
 * Membership test for a point of length `dim`.
 *
 * # Safety
 * `cone` must be a live handle, `x` must hold the cone's dimension in
 * doubles and `out` must be writable.
 */
enum CaStatus ca_cone_contains(const struct CaCone *cone_ptr,
                               const double *x,
                               double tol,
                               bool *out);

/**
 * Set equality within `tol`.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
enum CaStatus ca_cone_equals(const struct CaCone *a, const struct CaCone *b, double tol, bool *out);

/**
 * Projection of `x` onto the cone, written to `point`; the polar part
 * `x - point` goes to `residual` if it is non-null.
 *
 * # Safety
 * `x` and `point` (and `residual` if non-null) must hold the cone's
 * dimension in doubles.
 */
enum CaStatus ca_cone_project(const struct CaCone *cone_ptr,
                              const double *x,
                              double *point,
                              double *residual);

/**
 * Dixmier cosine. `samples` is only used by the oracle. Certificates are
 * written when both `x_star` and `y_star` are non-null.
 *
 * # Safety
 * `a`, `b` must be live handles, `out` writable, and non-null certificate
 * buffers must hold the ambient dimension in doubles.
 */
enum CaStatus ca_cos_dixmier(const struct CaCone *a,
                             const struct CaCone *b,
                             enum CaMethod method,
                             size_t samples,
                             struct CaAngle *out,
                             double *x_star,
                             double *y_star);

/**
 * Friedrichs cosine: the Dixmier cosine of the pair reduced by the polar
 * of the intersection.
 *
 * # Safety
 * As for [`ca_cos_dixmier`].
 */
enum CaStatus ca_cos_friedrichs(const struct CaCone *a,
                                const struct CaCone *b,
                                enum CaMethod method,
                                size_t samples,
                                struct CaAngle *out,
                                double *x_star,
                                double *y_star);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONE_ANGLES_H */
