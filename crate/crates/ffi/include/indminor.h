#ifndef INDMINOR_H
#define INDMINOR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum IndminorStatus {
  INDMINOR_STATUS_OK = 0,
  INDMINOR_STATUS_NULL_POINTER = 1,
  INDMINOR_STATUS_INVALID_UTF8 = 2,
  INDMINOR_STATUS_PARSE = 3,
  INDMINOR_STATUS_INVALID_ARGUMENT = 4,
  INDMINOR_STATUS_BUDGET_EXHAUSTED = 5,
  INDMINOR_STATUS_TOO_LARGE = 6,
  /**
   * The input is outside the class the routine assumes.
   */
  INDMINOR_STATUS_NOT_IN_CLASS = 7,
  INDMINOR_STATUS_EXPRESSION = 8,
  /**
   * A Rust panic was caught at the boundary.
   */
  INDMINOR_STATUS_INTERNAL = 9,
} IndminorStatus;

typedef enum IndminorIsoAlgorithm {
  /**
   * Cograph certificates when both graphs are P4-free, else the general engine.
   */
  INDMINOR_ISO_ALGORITHM_AUTO = 0,
  INDMINOR_ISO_ALGORITHM_GEM = 1,
  INDMINOR_ISO_ALGORITHM_COP32K1 = 2,
  INDMINOR_ISO_ALGORITHM_GENERAL = 3,
  INDMINOR_ISO_ALGORITHM_ORACLE = 4,
} IndminorIsoAlgorithm;

typedef enum IndminorTarget {
  INDMINOR_TARGET_RESTRICTED_SPLIT = 0,
  INDMINOR_TARGET_COBIPARTITE = 1,
  INDMINOR_TARGET_K3U_K1_FREE = 2,
} IndminorTarget;

typedef enum IndminorCwKind {
  INDMINOR_CW_KIND_COGRAPH = 0,
  INDMINOR_CW_KIND_GEM_FREE = 1,
} IndminorCwKind;

/**
 * Opaque graph handle.
 */
typedef struct IndminorGraph IndminorGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; valid until the next
 * call on this thread. Never null.
 */
const char *indminor_last_error_message(void);

/**
 * Parses a graph6 string into a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum IndminorStatus indminor_graph_from_graph6(const char *text, struct IndminorGraph **out);

/**
 * Builds a graph on `n` vertices from `m` edges given as `2m` endpoints.
 *
 * # Safety
 * `endpoints` must point to `2 * m` values (or be null when `m` is 0).
 */
enum IndminorStatus indminor_graph_from_edges(size_t n,
                                              const size_t *endpoints,
                                              size_t m,
                                              struct IndminorGraph **out);

/**
 * Releases a graph handle. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and not be used afterwards.
 */
void indminor_graph_free(struct IndminorGraph *g);

/**
 * Number of vertices; 0 for null.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t indminor_graph_vertex_count(const struct IndminorGraph *g);

/**
 * Number of edges; 0 for null.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t indminor_graph_edge_count(const struct IndminorGraph *g);

/**
 * graph6 encoding; release with [`indminor_string_free`].
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum IndminorStatus indminor_graph_to_graph6(const struct IndminorGraph *g, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void indminor_string_free(char *s);

/**
 * Classifies the class excluding `pattern`. `json_out` receives the
 * verdict as JSON (`gi`, `cw`, `rules`); `gi_polynomial` and
 * `cw_bounded` receive the two answers.
 *
 * # Safety
 * `pattern` must be a live handle; the outputs must be writable or null.
 */
enum IndminorStatus indminor_classify(const struct IndminorGraph *pattern,
                                      bool *gi_polynomial,
                                      bool *cw_bounded,
                                      char **json_out);

/**
 * Decides isomorphism. `fallback` (may be null) is set when a
 * class-specific algorithm had to defer to the general engine.
 *
 * # Safety
 * `g1`, `g2` must be live handles; `isomorphic` must be writable.
 */
enum IndminorStatus indminor_iso(const struct IndminorGraph *g1,
                                 const struct IndminorGraph *g2,
                                 enum IndminorIsoAlgorithm algorithm,
                                 bool *isomorphic,
                                 bool *fallback);

/**
 * Applies an isomorphism-preserving reduction; the result is a new handle
 * whose first vertices are the input vertices in order.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum IndminorStatus indminor_reduce(const struct IndminorGraph *g,
                                    enum IndminorTarget target,
                                    struct IndminorGraph **out);

/**
 * Whether `g` has no `K3 ∪ K1` induced minor.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum IndminorStatus indminor_is_k3uk1_free(const struct IndminorGraph *g, bool *out);

/**
 * Whether `g` has no induced `P4`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum IndminorStatus indminor_is_p4_free(const struct IndminorGraph *g, bool *out);

/**
 * Builds a clique-width expression in text form; release with
 * [`indminor_string_free`]. `width` may be null.
 *
 * # Safety
 * `g` must be a live handle; `expression` must be writable.
 */
enum IndminorStatus indminor_cw_build(const struct IndminorGraph *g,
                                      enum IndminorCwKind kind,
                                      char **expression,
                                      size_t *width);

/**
 * Checks that the expression text builds exactly `g`. `width` may be null.
 *
 * # Safety
 * `expression` must be a NUL-terminated string, `g` a live handle and
 * `valid` writable.
 */
enum IndminorStatus indminor_cw_verify(const char *expression,
                                       const struct IndminorGraph *g,
                                       bool *valid,
                                       size_t *width);

/**
 * Width bound guaranteed by the gem-free expression builder.
 */
size_t indminor_gem_free_width_bound(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INDMINOR_H */
