#ifndef SYMQUOT_H
#define SYMQUOT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible entry point.
 */
typedef enum SqStatus {
  SQ_STATUS_OK = 0,
  /**
   * A required pointer argument was `NULL`.
   */
  SQ_STATUS_NULL_POINTER = 1,
  /**
   * An argument is outside its documented range or two operands disagree
   * on genus or factor count.
   */
  SQ_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The computation was refused because it would be too large.
   */
  SQ_STATUS_RESOURCE_LIMIT = 3,
  /**
   * A result does not fit the C type it must be returned in.
   */
  SQ_STATUS_OVERFLOW = 4,
  /**
   * A change-of-basis computation had no integral solution.
   */
  SQ_STATUS_CHANGE_OF_BASIS = 5,
  /**
   * A string argument was not valid UTF-8 or not valid JSON.
   */
  SQ_STATUS_PARSE = 6,
  /**
   * An internal consistency check failed.
   */
  SQ_STATUS_INTERNAL = 7,
  /**
   * A panic was caught at the boundary.
   */
  SQ_STATUS_PANIC = 8,
} SqStatus;

/**
 * Opaque handle to an integral cohomology class on `X^n`.
 */
typedef struct SqClass SqClass;

/**
 * Opaque handle to a Poincaré polynomial `b_0 + b_1 t + … + b_{2N} t^{2N}`.
 */
typedef struct SqPoincare SqPoincare;

/**
 * Ranks of the Brauer-group comparison for `Pic`, `Sym^d` and `Quot`.
 */
typedef struct SqBrauerRanks {
  uint64_t rank_pic;
  uint64_t rank_sym;
  uint64_t rank_quot;
  /**
   * Non-zero when the three ranks agree.
   */
  bool pass;
} SqBrauerRanks;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on the calling thread, or an
 * empty string after a success. The pointer stays valid until the next call
 * into the library on this thread; do not free it.
 */
const char *sq_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *sq_version(void);

/**
 * Release a string returned by the library.
 *
 * # Safety
 * `s` must be `NULL` or a pointer obtained from this library that has not
 * been freed yet.
 */
void sq_string_free(char *s);

/**
 * Class `[Δ_{jk}]` of the diagonal `x_j = x_k` on `X^n`, slots 1-based.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum SqStatus sq_class_diagonal(uint32_t genus,
                                uint32_t n,
                                uint32_t j,
                                uint32_t k,
                                struct SqClass **out);

/**
 * Class `η` pulled back from the given slot (1-based) of `X^n`.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum SqStatus sq_class_eta(uint32_t genus, uint32_t n, uint32_t slot, struct SqClass **out);

/**
 * Odd class `α_i` (1 ≤ i ≤ 2g) pulled back from the given slot of `X^n`.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum SqStatus sq_class_lambda(uint32_t genus,
                              uint32_t n,
                              uint16_t i,
                              uint32_t slot,
                              struct SqClass **out);

/**
 * Parse a class from its JSON term list, e.g.
 * `[{"letters":["a1","a3"],"coeff":-1}]`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be valid for a write.
 */
enum SqStatus sq_class_from_json(uint32_t genus,
                                 uint32_t n,
                                 const char *json,
                                 struct SqClass **out);

/**
 * Serialize a class as its JSON term list. Free the result with
 * [`sq_string_free`].
 *
 * # Safety
 * `class` must be a live handle; `out` must be valid for a pointer write.
 */
enum SqStatus sq_class_to_json(const struct SqClass *class_, char **out);

/**
 * Cup product `a ∪ b`.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be valid for a pointer write.
 */
enum SqStatus sq_class_cup(const struct SqClass *a, const struct SqClass *b, struct SqClass **out);

/**
 * Sum `a + b`.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be valid for a pointer write.
 */
enum SqStatus sq_class_add(const struct SqClass *a, const struct SqClass *b, struct SqClass **out);

/**
 * Pullback of a class on `X^n` to `X^{n-1}` along the map that copies
 * coordinate `k` (1 ≤ k ≤ n−1) into the last slot.
 *
 * # Safety
 * `class` must be a live handle; `out` must be valid for a pointer write.
 */
enum SqStatus sq_class_insertion_pullback(const struct SqClass *class_,
                                          uint32_t k,
                                          struct SqClass **out);

/**
 * Restriction to `X^{n-1}` obtained by fixing a point in the given slot.
 *
 * # Safety
 * `class` must be a live handle; `out` must be valid for a pointer write.
 */
enum SqStatus sq_class_point_restrict(const struct SqClass *class_,
                                      uint32_t slot,
                                      struct SqClass **out);

/**
 * Degree of the top-dimensional part. Fails with `SQ_STATUS_OVERFLOW` if it
 * does not fit in 64 bits.
 *
 * # Safety
 * `class` must be a live handle; `out` must be valid for a write.
 */
enum SqStatus sq_class_integrate(const struct SqClass *class_, int64_t *out);

/**
 * Number of factors `n` of the ambient `X^n`, or 0 for `NULL`.
 *
 * # Safety
 * `class` must be `NULL` or a live handle.
 */
uint32_t sq_class_factors(const struct SqClass *class_);

/**
 * Number of non-zero terms, or 0 for `NULL`.
 *
 * # Safety
 * `class` must be `NULL` or a live handle.
 */
size_t sq_class_term_count(const struct SqClass *class_);

/**
 * Release a class handle.
 *
 * # Safety
 * `class` must be `NULL` or a handle that has not been freed yet.
 */
void sq_class_free(struct SqClass *class_);

/**
 * `b_k(Sym^d X)` for a curve of genus `genus`.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum SqStatus sq_betti_sym(uint32_t genus, uint32_t d, uint32_t k, uint64_t *out);

/**
 * `b_i` of the Quot scheme of rank-`r`, degree-`d` torsion quotients.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum SqStatus sq_betti_quot(uint32_t genus, uint32_t r, uint32_t d, uint32_t i, uint64_t *out);

/**
 * Poincaré polynomial of `Sym^d X`.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum SqStatus sq_poincare_sym(uint32_t genus, uint32_t d, struct SqPoincare **out);

/**
 * Poincaré polynomial of the Quot scheme.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum SqStatus sq_poincare_quot(uint32_t genus, uint32_t r, uint32_t d, struct SqPoincare **out);

/**
 * Complex dimension `N`; the polynomial has `2N + 1` coefficients.
 * Returns 0 for `NULL`.
 *
 * # Safety
 * `p` must be `NULL` or a live handle.
 */
uint32_t sq_poincare_dim(const struct SqPoincare *p);

/**
 * Coefficient `b_i`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid for a write.
 */
enum SqStatus sq_poincare_coefficient(const struct SqPoincare *p, uint32_t i, uint64_t *out);

/**
 * Release a polynomial handle.
 *
 * # Safety
 * `p` must be `NULL` or a handle that has not been freed yet.
 */
void sq_poincare_free(struct SqPoincare *p);

/**
 * Compare the Brauer-group ranks of `Pic^d X`, `Sym^d X` and the Quot
 * scheme for Picard number `rho` of the Jacobian. Needs `r, d ≥ 2`.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum SqStatus sq_brauer_ranks(uint32_t genus,
                              uint32_t r,
                              uint32_t d,
                              uint64_t rho,
                              struct SqBrauerRanks *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SYMQUOT_H */
