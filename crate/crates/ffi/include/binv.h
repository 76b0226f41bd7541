/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef BINV_H
#define BINV_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BinvStatus {
  BINV_STATUS_OK = 0,
  BINV_STATUS_NULL_ARGUMENT = -1,
  BINV_STATUS_INVALID_UTF8 = -2,
  BINV_STATUS_PARSE = -3,
  BINV_STATUS_UNSUPPORTED_VERSION = -4,
  BINV_STATUS_BUDGET = -5,
  BINV_STATUS_PRECONDITION = -6,
  BINV_STATUS_ARITHMETIC = -7,
  BINV_STATUS_IO = -8,
  BINV_STATUS_PANIC = -99,
} BinvStatus;

/**
 * Opaque polynomial handle.
 */
typedef struct BinvPoly BinvPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Computes the branch-point form H for `genus`. A `budget_bytes` of 0
 * means unlimited.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum BinvStatus binv_h(uint32_t genus, uint64_t budget_bytes, struct BinvPoly **out);

/**
 * Computes the theta-side form K for `genus`. A `budget_bytes` of 0
 * means unlimited.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum BinvStatus binv_k(uint32_t genus, uint64_t budget_bytes, struct BinvPoly **out);

/**
 * Parses a `BINV 1` document.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum BinvStatus binv_deserialize(const char *text, struct BinvPoly **out);

/**
 * Canonical `BINV 1` text of `p`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum BinvStatus binv_serialize(const struct BinvPoly *p, char **out);

/**
 * Lowercase hex SHA-256 of the canonical serialization.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum BinvStatus binv_hash(const struct BinvPoly *p, char **out);

/**
 * Number of nonzero terms, or 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t binv_num_terms(const struct BinvPoly *p);

/**
 * 1 if equal, 0 if not, -1 if either handle is null.
 *
 * # Safety
 * Both arguments must be null or live handles.
 */
int32_t binv_equal(const struct BinvPoly *a, const struct BinvPoly *b);

/**
 * # Safety
 * `p` must be null or a handle not yet freed.
 */
void binv_free(struct BinvPoly *p);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void binv_string_free(char *s);

/**
 * Message of the last failure on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *binv_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BINV_H */
