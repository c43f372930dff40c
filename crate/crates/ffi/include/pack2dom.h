#ifndef PACK2DOM_H
#define PACK2DOM_H

#pragma once

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stddef.h>
#include <stdbool.h>
#include <stdint.h>

/**
 * Result code of every fallible call.
 */
typedef enum P2dStatus {
  P2D_STATUS_OK = 0,
  P2D_STATUS_NULL_POINTER = 1,
  P2D_STATUS_INVALID_UTF8 = 2,
  P2D_STATUS_PARSE = 3,
  P2D_STATUS_BOUND_EXCEEDED = 4,
  P2D_STATUS_INVALID_PARAMS = 5,
  P2D_STATUS_IO = 6,
  P2D_STATUS_PANIC = 7,
} P2dStatus;

/**
 * Why a graph is not a member of the T(s, t) family.
 */
typedef enum P2dReject {
  P2D_REJECT_NONE = 0,
  P2D_REJECT_NOT_A_TREE = 1,
  P2D_REJECT_NO_CENTER = 2,
  P2D_REJECT_BAD_LEG = 3,
  P2D_REJECT_TOO_FEW_TWO_LEGS = 4,
  P2D_REJECT_NO_LEAF_LEG = 5,
} P2dReject;

/**
 * Opaque graph handle.
 */
typedef struct P2dGraph P2dGraph;

/**
 * Outcome of `p2d_recognize`. When `member` is false, `s`, `t` and `r` are 0.
 */
typedef struct P2dRecognition {
  bool member;
  uintptr_t s;
  uintptr_t t;
  uintptr_t r;
  enum P2dReject reason;
} P2dRecognition;

/**
 * Message for the last failed call on this thread, or NULL. Valid until
 * the next call into this library on the same thread.
 */
const char *p2d_last_error(void);

/**
 * Parses one graph6 string.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum P2dStatus p2d_graph_from_graph6(const char *text, struct P2dGraph **out);

/**
 * Builds a graph on `n` vertices from `m` pairs stored flat in `edges`
 * (`edges[2i]`, `edges[2i + 1]`). Duplicate edges collapse.
 *
 * # Safety
 * `edges` must point to `2 * m` readable values (it may be NULL when `m` is 0);
 * `out` must be writable.
 */
enum P2dStatus p2d_graph_from_edges(uintptr_t n,
                                    const uintptr_t *edges,
                                    uintptr_t m,
                                    struct P2dGraph **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `g` must come from this library and not have been freed.
 */
void p2d_graph_free(struct P2dGraph *g);

/**
 * Number of vertices; 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
uintptr_t p2d_graph_order(const struct P2dGraph *g);

/**
 * Number of edges; 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
uintptr_t p2d_graph_size(const struct P2dGraph *g);

/**
 * Domination number.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum P2dStatus p2d_gamma(const struct P2dGraph *g, uintptr_t *out);

/**
 * Vertex cover number.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum P2dStatus p2d_beta(const struct P2dGraph *g, uintptr_t *out);

/**
 * Independence number.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum P2dStatus p2d_alpha(const struct P2dGraph *g, uintptr_t *out);

/**
 * Maximum edge 2-packing size.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum P2dStatus p2d_nu2(const struct P2dGraph *g, uintptr_t *out);

/**
 * Builds T(s, t) with the vertex layout documented for `generate_family`.
 *
 * # Safety
 * `out` must be writable.
 */
enum P2dStatus p2d_generate_family(uintptr_t s, uintptr_t t, struct P2dGraph **out);

/**
 * Decides membership in the T(s, t) family.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum P2dStatus p2d_recognize(const struct P2dGraph *g, struct P2dRecognition *out);

/**
 * graph6 encoding of the graph as labeled.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum P2dStatus p2d_graph_to_graph6(const struct P2dGraph *g, char **out);

/**
 * Canonical graph6 string; equal for exactly the isomorphic graphs.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum P2dStatus p2d_canonical_form(const struct P2dGraph *g, char **out);

/**
 * Surveys every connected graph on `n` vertices and returns the summary
 * as JSON. `workers` of 0 selects the default thread count.
 *
 * # Safety
 * `out` must be writable.
 */
enum P2dStatus p2d_survey_builtin(uintptr_t n, uintptr_t workers, char **out);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void p2d_string_free(char *s);

#endif  /* PACK2DOM_H */
