/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef EVENHOLE_H
#define EVENHOLE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum EhStatus {
  EH_STATUS_OK = 0,
  EH_STATUS_NULL_POINTER = 1,
  EH_STATUS_INVALID_GRAPH = 2,
  EH_STATUS_PARSE = 3,
  EH_STATUS_SIZE_LIMIT = 4,
  /**
   * The graph is outside the class; JSON outputs are still written.
   */
  EH_STATUS_NOT_IN_CLASS = 5,
  EH_STATUS_INTERNAL = 6,
} EhStatus;

/**
 * Opaque graph handle.
 */
typedef struct EhGraph EhGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`2 * edge_count` entries, 0-based).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (or be null when
 * `edge_count` is 0) and `out` must be writable.
 */
enum EhStatus eh_graph_new(size_t n, const size_t *edges, size_t edge_count, struct EhGraph **out);

/**
 * Parses DIMACS `.col` text.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` must be writable.
 */
enum EhStatus eh_graph_from_dimacs(const char *text, struct EhGraph **out);

/**
 * Parses the edge-list JSON format `{"n": .., "edges": [[u, v], ..]}`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` must be writable.
 */
enum EhStatus eh_graph_from_edge_json(const char *text, struct EhGraph **out);

/**
 * Releases a graph. Null is ignored.
 *
 * # Safety
 * `g` must come from one of the constructors and not be used afterwards.
 */
void eh_graph_free(struct EhGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t eh_graph_vertex_count(const struct EhGraph *g);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t eh_graph_edge_count(const struct EhGraph *g);

/**
 * Writes whether the graph is in the class to `in_class`.
 *
 * # Safety
 * `g` must be a live handle and `in_class` writable.
 */
enum EhStatus eh_recognize(const struct EhGraph *g, bool *in_class);

/**
 * Full recognition report as JSON, including the partition or the
 * rejection witness.
 *
 * # Safety
 * `g` must be a live handle and `out` writable. Free the result with
 * `eh_string_free`.
 */
enum EhStatus eh_recognize_json(const struct EhGraph *g, char **out);

/**
 * Optimal coloring. `colors` receives one color per vertex and must hold
 * `eh_graph_vertex_count(g)` entries; `num_colors` receives the count.
 * Returns `NotInClass` without touching the outputs when refused.
 *
 * # Safety
 * `g` must be a live handle; `colors` and `num_colors` must be writable.
 */
enum EhStatus eh_color(const struct EhGraph *g, size_t *colors, size_t *num_colors);

/**
 * Coloring or refusal as JSON.
 *
 * # Safety
 * `g` must be a live handle and `out` writable. Free the result with
 * `eh_string_free`.
 */
enum EhStatus eh_color_json(const struct EhGraph *g, char **out);

/**
 * Clique-width expression or refusal as JSON.
 *
 * # Safety
 * `g` must be a live handle and `out` writable. Free the result with
 * `eh_string_free`.
 */
enum EhStatus eh_cwd_json(const struct EhGraph *g, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void eh_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next library call on the same thread.
 */
const char *eh_last_error(void);

/**
 * Library version as a static string.
 */
const char *eh_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EVENHOLE_H */
