#ifndef MAXTRANS_H
#define MAXTRANS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MtAlgorithm {
  MT_ALGORITHM_V1 = 1,
  MT_ALGORITHM_V2 = 2,
} MtAlgorithm;

typedef enum MtStatus {
  MT_STATUS_OK = 0,
  MT_STATUS_NULL_POINTER = 1,
  MT_STATUS_INVALID_ARGUMENT = 2,
  MT_STATUS_PARSE = 3,
  MT_STATUS_BUDGET_EXCEEDED = 4,
  MT_STATUS_UTF8 = 5,
  MT_STATUS_INTERNAL = 6,
} MtStatus;

/**
 * Opaque relation handle.
 */
typedef struct MtRelation MtRelation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread; empty if none. The
 * pointer stays valid until the next failing call on this thread.
 */
const char *mt_last_error(void);

/**
 * Empty relation on `n >= 1` vertices.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum MtStatus mt_relation_new(size_t n, struct MtRelation **out);

/**
 * # Safety
 * `r` must be null or a handle from this library not yet freed.
 */
void mt_relation_free(struct MtRelation *r);

/**
 * # Safety
 * `r` must be a live handle; `out` null or valid for a pointer write.
 */
enum MtStatus mt_relation_clone(const struct MtRelation *r, struct MtRelation **out);

/**
 * Adds arc `(i, j)`.
 *
 * # Safety
 * `r` must be a live handle.
 */
enum MtStatus mt_relation_insert(struct MtRelation *r, size_t i, size_t j);

/**
 * # Safety
 * `r` must be a live handle; `out` valid for a write.
 */
enum MtStatus mt_relation_contains(const struct MtRelation *r, size_t i, size_t j, bool *out);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `r` must be null or a live handle.
 */
size_t mt_relation_n(const struct MtRelation *r);

/**
 * Arc count, or 0 for a null handle.
 *
 * # Safety
 * `r` must be null or a live handle.
 */
size_t mt_relation_arc_count(const struct MtRelation *r);

/**
 * Parses an edge list or 0/1 matrix, detected from the first non-comment line.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` valid for a pointer write.
 */
enum MtStatus mt_relation_parse(const char *text, struct MtRelation **out);

/**
 * Edge-list text (1-based vertices). Free with `mt_string_free`.
 *
 * # Safety
 * `r` must be a live handle; `out` valid for a pointer write.
 */
enum MtStatus mt_relation_to_edge_list(const struct MtRelation *r, char **out);

/**
 * Matrix text, one row of 0/1 characters per line. Free with `mt_string_free`.
 *
 * # Safety
 * `r` must be a live handle; `out` valid for a pointer write.
 */
enum MtStatus mt_relation_to_matrix(const struct MtRelation *r, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void mt_string_free(char *s);

/**
 * # Safety
 * `r` must be a live handle; `out` valid for a write.
 */
enum MtStatus mt_is_transitive(const struct MtRelation *r, bool *out);

/**
 * # Safety
 * `r` must be a live handle; `out` valid for a pointer write.
 */
enum MtStatus mt_closure(const struct MtRelation *r, struct MtRelation **out);

/**
 * Maximal transitive sub-relation in O(n^2 + nm). `algorithm` is one of the
 * `MtAlgorithm` values.
 *
 * # Safety
 * `r` must be a live handle; `out` valid for a pointer write.
 */
enum MtStatus mt_maximal(const struct MtRelation *r, uint32_t algorithm, struct MtRelation **out);

/**
 * Transitive sub-relation with at least a quarter of the non-loop arcs.
 *
 * # Safety
 * `r` must be a live handle; `out` valid for a pointer write.
 */
enum MtStatus mt_quarter_approx(const struct MtRelation *r, struct MtRelation **out);

/**
 * Exact maximum transitive sub-relation; fails with `BudgetExceeded` when the
 * arc count is above `arc_budget`.
 *
 * # Safety
 * `r` must be a live handle; `out` valid for a pointer write.
 */
enum MtStatus mt_maximum_exact(const struct MtRelation *r,
                               size_t arc_budget,
                               struct MtRelation **out);

/**
 * Exact maximum directed cut. `forward` receives e(U, V) and `backward`
 * e(V, U). When `sides` is non-null it must hold n bytes and receives 0 for
 * vertices in U and 1 for vertices in V.
 *
 * # Safety
 * `r` must be a live handle; `forward` and `backward` valid for writes;
 * `sides` null or valid for n writes.
 */
enum MtStatus mt_max_dicut(const struct MtRelation *r,
                           size_t vertex_budget,
                           size_t *forward,
                           size_t *backward,
                           uint8_t *sides);

/**
 * DIMACS CNF whose max-ones models are the maximum transitive sub-relations.
 * Free with `mt_string_free`.
 *
 * # Safety
 * `r` must be a live handle; `out` valid for a pointer write.
 */
enum MtStatus mt_encode_cnf(const struct MtRelation *r, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MAXTRANS_H */
