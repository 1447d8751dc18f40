#ifndef PERMALG_H
#define PERMALG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PermalgStatus {
  PERMALG_STATUS_OK = 0,
  /**
   * The input is valid but the answer is negative (e.g. not a Lie element).
   */
  PERMALG_STATUS_NEGATIVE = 1,
  PERMALG_STATUS_INVALID_INPUT = 2,
  PERMALG_STATUS_NULL_POINTER = 3,
  PERMALG_STATUS_INVALID_UTF8 = 4,
  PERMALG_STATUS_PANIC = 5,
} PermalgStatus;

typedef enum PermalgStrategy {
  PERMALG_STRATEGY_LEFTMOST = 0,
  PERMALG_STRATEGY_RIGHTMOST = 1,
} PermalgStrategy;

/**
 * The enveloping perm algebra of a metabelian Lie algebra.
 */
typedef struct PermalgEnvelope PermalgEnvelope;

/**
 * A perm polynomial with the alphabet used to name its generators.
 */
typedef struct PermalgPoly PermalgPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The most recent error message on this thread, or NULL. The pointer is
 * valid until the next call into the library from the same thread.
 */
const char *permalg_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *permalg_version(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void permalg_string_free(char *s);

/**
 * Parses an expression into its canonical perm polynomial. With `names`
 * NULL, generator names are read off the text; otherwise `names` is a
 * comma-separated list fixing the generators and their order.
 *
 * # Safety
 * `expr` and `names` must be NULL or valid NUL-terminated strings; `out`
 * must be a valid pointer.
 */
enum PermalgStatus permalg_poly_parse(const char *expr,
                                      const char *names,
                                      struct PermalgPoly **out);

/**
 * # Safety
 * `p` must be NULL or a handle from this library, not yet freed.
 */
void permalg_poly_free(struct PermalgPoly *p);

/**
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum PermalgStatus permalg_poly_render(const struct PermalgPoly *p, char **out);

/**
 * Number of terms of the canonical form.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum PermalgStatus permalg_poly_term_count(const struct PermalgPoly *p, size_t *out);

/**
 * `a · b` in the free perm algebra. Both operands must share an alphabet.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` a valid pointer.
 */
enum PermalgStatus permalg_poly_mul(const struct PermalgPoly *a,
                                    const struct PermalgPoly *b,
                                    struct PermalgPoly **out);

/**
 * `a + b`. Both operands must share an alphabet.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` a valid pointer.
 */
enum PermalgStatus permalg_poly_add(const struct PermalgPoly *a,
                                    const struct PermalgPoly *b,
                                    struct PermalgPoly **out);

/**
 * # Safety
 * `a`, `b` must be live handles and `out` a valid pointer.
 */
enum PermalgStatus permalg_poly_equal(const struct PermalgPoly *a,
                                      const struct PermalgPoly *b,
                                      bool *out);

/**
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum PermalgStatus permalg_is_lie(const struct PermalgPoly *p, bool *out);

/**
 * Left-normed commutator form of a Lie element; `PERMALG_STATUS_NEGATIVE`
 * if the element is not Lie.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum PermalgStatus permalg_lie_express(const struct PermalgPoly *p, char **out);

/**
 * Anticommutator form; `PERMALG_STATUS_NEGATIVE` outside SJ(X).
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum PermalgStatus permalg_jordan_express(const struct PermalgPoly *p, char **out);

/**
 * Dimension of the degree-`n` component of the free perm algebra on `k`
 * generators.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum PermalgStatus permalg_dimension(size_t k, size_t n, uint64_t *out);

/**
 * Builds the envelope of the metabelian Lie algebra described by `json`.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum PermalgStatus permalg_envelope_from_json(const char *json, struct PermalgEnvelope **out);

/**
 * # Safety
 * `e` must be NULL or a handle from this library, not yet freed.
 */
void permalg_envelope_free(struct PermalgEnvelope *e);

/**
 * Normal form of a dotted expression such as `d(e2)*e1`.
 *
 * # Safety
 * `e` must be a live handle, `expr` a valid string and `out` a valid pointer.
 */
enum PermalgStatus permalg_envelope_normal_form(const struct PermalgEnvelope *e,
                                                const char *expr,
                                                enum PermalgStrategy strategy,
                                                char **out);

/**
 * True when all compositions are trivial and the embedding check passes.
 *
 * # Safety
 * `e` must be a live handle and `out` a valid pointer.
 */
enum PermalgStatus permalg_envelope_check(const struct PermalgEnvelope *e, bool *out);

/**
 * Number of normal-form basis monomials of degree `d`.
 *
 * # Safety
 * `e` must be a live handle and `out` a valid pointer.
 */
enum PermalgStatus permalg_envelope_basis_count(const struct PermalgEnvelope *e,
                                                size_t d,
                                                uint64_t *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* PERMALG_H */
