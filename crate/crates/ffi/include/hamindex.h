#ifndef HAMINDEX_H
#define HAMINDEX_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
enum HamindexStatus
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  HamindexStatus_Ok = 0,
  /**
   * A required pointer was null or a length inconsistent.
   */
  HamindexStatus_NullArgument = 1,
  /**
   * The graph construction or input data was invalid.
   */
  HamindexStatus_InvalidInput = 2,
  /**
   * A resource cap (bag width, recursion fuel) was exceeded.
   */
  HamindexStatus_ResourceLimit = 3,
  /**
   * The Hamiltonian index is undefined for path graphs.
   */
  HamindexStatus_PathInput = 4,
  /**
   * The graph is disconnected where a connected one is required.
   */
  HamindexStatus_Disconnected = 5,
};
#ifndef __cplusplus
typedef int32_t HamindexStatus;
#endif // __cplusplus

/**
 * Opaque graph handle.
 */
typedef struct HamindexGraph HamindexGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Build a graph on `num_vertices` vertices from `num_edges` pairs laid out
 * as [u0, v0, u1, v1, ...], 0-indexed. Repeated pairs are parallel edges.
 * On success writes a handle to `out`; free it with hamindex_graph_free.
 *
 * # Safety
 * `edges` must point to 2 * num_edges readable u32 values (or be null when
 * num_edges is 0) and `out` must be a valid pointer.
 */
HamindexStatus hamindex_graph_new(uint32_t num_vertices,
                                  const uint32_t *edges,
                                  uintptr_t num_edges,
                                  struct HamindexGraph **out);

/**
 * Free a graph handle. Null is a no-op.
 *
 * # Safety
 * `g` must be a handle from hamindex_graph_new, freed at most once.
 */
void hamindex_graph_free(struct HamindexGraph *g);

/**
 * Eulerian Steiner subgraph: is there an Eulerian subgraph containing all
 * `num_terminals` terminals? Writes 1/0 to `answer`.
 *
 * # Safety
 * `g` must be a live handle; `terminals` must point to `num_terminals`
 * readable u32 values (or be null when that count is 0); `answer` must be
 * a valid pointer.
 */
HamindexStatus hamindex_solve_ess(const struct HamindexGraph *g,
                                  const uint32_t *terminals,
                                  uintptr_t num_terminals,
                                  int32_t *answer);

/**
 * Spanning Eulerian subgraph (supereulerian test). Writes 1/0 to `answer`.
 *
 * # Safety
 * `g` must be a live handle and `answer` a valid pointer.
 */
HamindexStatus hamindex_solve_ses(const struct HamindexGraph *g, int32_t *answer);

/**
 * Dominating Eulerian subgraph. Writes 1/0 to `answer`.
 *
 * # Safety
 * `g` must be a live handle and `answer` a valid pointer.
 */
HamindexStatus hamindex_solve_des(const struct HamindexGraph *g, int32_t *answer);

/**
 * Hamiltonian cycle. Writes 1/0 to `answer`.
 *
 * # Safety
 * `g` must be a live handle and `answer` a valid pointer.
 */
HamindexStatus hamindex_solve_hc(const struct HamindexGraph *g, int32_t *answer);

/**
 * Exact Hamiltonian index h(G). Writes the value to `out_h`.
 *
 * # Safety
 * `g` must be a live handle and `out_h` a valid pointer.
 */
HamindexStatus hamindex_index(const struct HamindexGraph *g, uint64_t *out_h);

/**
 * Decide h(G) <= r. Writes 1/0 to `answer`.
 *
 * # Safety
 * `g` must be a live handle and `answer` a valid pointer.
 */
HamindexStatus hamindex_index_at_most(const struct HamindexGraph *g, uint64_t r, int32_t *answer);

/**
 * Extract a witness subgraph for the spanning-Eulerian problem as edge
 * indices into the input edge list. Writes at most `cap` indices to `buf`
 * and the full count to `count`; returns InvalidInput when no witness
 * exists.
 *
 * # Safety
 * `g` must be a live handle, `buf` must hold `cap` writable u64 values
 * (or be null when cap is 0), and `count` must be a valid pointer.
 */
HamindexStatus hamindex_ses_witness(const struct HamindexGraph *g,
                                    uint64_t *buf,
                                    uintptr_t cap,
                                    uintptr_t *count);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* HAMINDEX_H */
