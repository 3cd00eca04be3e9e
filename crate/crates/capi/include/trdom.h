/* C interface to the trdom exact domination solvers. */

#ifndef TRDOM_H
#define TRDOM_H

/* Generated by cbindgen from trdom-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible entry point.
typedef enum TrdomStatus {
  TrdomStatus_Ok = 0,
  TrdomStatus_NullArgument = 1,
  TrdomStatus_ParseError = 2,
  TrdomStatus_Infeasible = 3,
  TrdomStatus_SizeLimit = 4,
  TrdomStatus_InvalidArgument = 5,
  TrdomStatus_InternalPanic = 6,
} TrdomStatus;

// Parameter selector mirroring the solver's six base parameters.
typedef enum TrdomParameter {
  TrdomParameter_Domination = 0,
  TrdomParameter_TotalDomination = 1,
  TrdomParameter_Roman2 = 2,
  TrdomParameter_TotalRoman = 3,
  TrdomParameter_TotalRoman2 = 4,
  TrdomParameter_DoubleDomination = 5,
} TrdomParameter;

// Opaque graph handle.
typedef struct TrdomGraph TrdomGraph;

// Result of one exact solve.
typedef struct TrdomSolveResult {
  // Exact optimal weight; meaningful only when `feasible` is true.
  uint64_t value;
  // 1 when a feasible labeling exists.
  uint8_t feasible;
  // Search nodes visited (deterministic).
  uint64_t nodes;
} TrdomSolveResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a graph from text in either supported format (edge list or
// graph6, auto-detected) and stores a fresh handle in `out`.
//
// # Safety
// `text` must be a valid NUL-terminated string and `out` a valid pointer.
enum TrdomStatus trdom_graph_parse(const char *text, struct TrdomGraph **out);

// Builds a named family member, e.g. "path:6", "hs:3", "frn:5,8".
//
// # Safety
// `spec` must be a valid NUL-terminated string and `out` a valid pointer.
enum TrdomStatus trdom_graph_family(const char *spec, struct TrdomGraph **out);

// Frees a graph handle. Passing NULL is a no-op.
//
// # Safety
// `g` must be a pointer previously returned by this library, or NULL.
void trdom_graph_free(struct TrdomGraph *g);

// Number of vertices; 0 for NULL.
//
// # Safety
// `g` must be a valid handle or NULL.
uint64_t trdom_graph_order(const struct TrdomGraph *g);

// Number of edges; 0 for NULL.
//
// # Safety
// `g` must be a valid handle or NULL.
uint64_t trdom_graph_size(const struct TrdomGraph *g);

// Exact solve under the given vertex cap (0 picks the default).
//
// # Safety
// `g` must be a valid handle and `out` a valid pointer.
enum TrdomStatus trdom_compute(const struct TrdomGraph *g,
                               enum TrdomParameter parameter,
                               uint64_t limit,
                               struct TrdomSolveResult *out);

// Writes the witness labels of an exact solve into `buf` (one byte per
// vertex). `buf_len` must be at least the graph order.
//
// # Safety
// `g` must be a valid handle; `buf` must point to `buf_len` writable bytes.
enum TrdomStatus trdom_compute_witness(const struct TrdomGraph *g,
                                       enum TrdomParameter parameter,
                                       uint64_t limit,
                                       uint8_t *buf,
                                       uint64_t buf_len);

// Runs the full theorem suite and returns the verdicts as a JSON document
// allocated by the library; free it with `trdom_string_free`.
//
// # Safety
// `g` must be a valid handle and `out_json` a valid pointer.
enum TrdomStatus trdom_verify_all(const struct TrdomGraph *g, char **out_json);

// Graph6 encoding of the graph; free with `trdom_string_free`.
//
// # Safety
// `g` must be a valid handle and `out` a valid pointer.
enum TrdomStatus trdom_graph_to_graph6(const struct TrdomGraph *g, char **out);

// Frees a string allocated by this library. Passing NULL is a no-op.
//
// # Safety
// `s` must be a string previously returned by this library, or NULL.
void trdom_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRDOM_H */
