#ifndef EDBOUND_H
#define EDBOUND_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EdStatus {
  ED_STATUS_OK = 0,
  ED_STATUS_NULL_POINTER = 1,
  ED_STATUS_INVALID_UTF8 = 2,
  ED_STATUS_SYNTAX = 3,
  ED_STATUS_SEMANTIC = 4,
  ED_STATUS_TOO_LARGE = 5,
  ED_STATUS_NOT_PRIME = 6,
  ED_STATUS_UNSUPPORTED = 7,
  ED_STATUS_COMPUTE = 8,
  ED_STATUS_PANIC = 9,
} EdStatus;

typedef enum EdSylowTag {
  ED_SYLOW_TAG_CYCLIC = 0,
  ED_SYLOW_TAG_DIHEDRAL = 1,
  ED_SYLOW_TAG_ELEMENTARY_ABELIAN = 2,
  ED_SYLOW_TAG_EXPLICIT = 3,
} EdSylowTag;

/**
 * Opaque group handle. Create with `ed_group_parse`, release with `ed_group_free`.
 */
typedef struct EdGroup EdGroup;

/**
 * Sylow class as returned by `ed_group_sylow`. `rank` is 0 unless the tag
 * is `ElementaryAbelian`.
 */
typedef struct EdSylow {
  enum EdSylowTag tag;
  uint64_t order;
  uint32_t rank;
} EdSylow;

/**
 * Essential-dimension bound. `upper` is meaningful only when `has_upper`.
 */
typedef struct EdBoundC {
  uint64_t lower;
  uint64_t upper;
  bool has_upper;
  bool conditional;
  bool exact;
} EdBoundC;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *ed_last_error_message(void);

/**
 * Parses a group spec such as `psl2:961` or `perm:4;(0 1),(0 1 2 3)`.
 * A `cap` of 0 selects the default enumeration cap.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a valid pointer.
 */
enum EdStatus ed_group_parse(const char *spec, uint64_t cap, struct EdGroup **out);

/**
 * # Safety
 * `g` must come from `ed_group_parse` and not have been freed. NULL is ignored.
 */
void ed_group_free(struct EdGroup *g);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum EdStatus ed_group_order(const struct EdGroup *g, uint64_t *out);

/**
 * Tameness at `l`, where `l` is 0 or a prime.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum EdStatus ed_group_is_tame(const struct EdGroup *g, uint64_t l, bool *out);

/**
 * Weak tameness at `l`, where `l` is 0 or a prime.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum EdStatus ed_group_is_weakly_tame(const struct EdGroup *g, uint64_t l, bool *out);

/**
 * Largest s such that the group has an element of order l^s.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum EdStatus ed_group_max_element_order(const struct EdGroup *g, uint64_t l, uint32_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum EdStatus ed_group_sylow(const struct EdGroup *g, uint64_t l, struct EdSylow *out);

/**
 * JSON bound report over `field` (`C`, `Q`, `R`, `Qsqrt:p`, `Fpbar:p`,
 * `Fp-at-p:p`). Release the string with `ed_string_free`.
 *
 * # Safety
 * `g` must be a live handle, `field` a NUL-terminated string and `out` a
 * valid pointer.
 */
enum EdStatus ed_group_report_json(const struct EdGroup *g, const char *field, char **out);

/**
 * # Safety
 * `s` must come from this library and not have been freed. NULL is ignored.
 */
void ed_string_free(char *s);

bool ed_is_prime(uint64_t n);

/**
 * Smallest m in 1..=m_max with q = m p^n + 1 prime. `found` is false when
 * the search is exhausted.
 *
 * # Safety
 * `m`, `q` and `found` must be valid pointers.
 */
enum EdStatus ed_dirichlet(uint64_t p,
                           uint32_t n,
                           uint64_t m_max,
                           uint64_t *m,
                           uint64_t *q,
                           bool *found);

/**
 * Local essential dimension of PSL2(q) over the complex numbers.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum EdStatus ed_local_psl2(uint64_t q, struct EdBoundC *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EDBOUND_H */
