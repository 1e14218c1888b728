#ifndef HYPERFORGE_H
#define HYPERFORGE_H

#pragma once

/* Generated by cbindgen from the hyperforge-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes of every fallible function.
typedef enum HfStatus {
  // Success.
  HF_STATUS_OK = 0,
  // A required pointer argument was null.
  HF_STATUS_NULL_POINTER = 1,
  // A string argument was not valid UTF-8, or a number was out of range.
  HF_STATUS_INVALID_ARGUMENT = 2,
  // The geometry violates a structural invariant.
  HF_STATUS_INVALID_GEOMETRY = 3,
  // The presentation is malformed.
  HF_STATUS_INVALID_PRESENTATION = 4,
  // Coset enumeration exceeded its ceiling.
  HF_STATUS_OVERFLOW = 5,
  // A combinatorial search exceeded its ceiling.
  HF_STATUS_SIZE_LIMIT_EXCEEDED = 6,
  // The pair of types is not a leaf.
  HF_STATUS_NOT_A_LEAF = 7,
  // A bipartite-only construction was applied to a non-bipartite graph.
  HF_STATUS_NOT_BIPARTITE = 8,
  // A precondition of a construction does not hold.
  HF_STATUS_PRECONDITION_FAILED = 9,
  // The parameter combination is not supported.
  HF_STATUS_UNSUPPORTED_CASE = 10,
  // A computed object violates a property it is known to have.
  HF_STATUS_PROPERTY_VIOLATION = 11,
  // An input/output or JSON error.
  HF_STATUS_IO = 12,
  // The library panicked; this is a defect.
  HF_STATUS_PANIC = 13,
} HfStatus;

// Opaque incidence geometry.
typedef struct HfGeometry HfGeometry;

// Opaque permutation group in its regular representation.
typedef struct HfGroup HfGroup;

// Flag-based properties of a geometry, scanned over at most `max_flags`
// flags (0 for the default ceiling).
typedef struct HfFlagReport {
  // Every maximal flag is a chamber.
  bool is_geometry;
  // Every residue of corank at least two is connected.
  bool residually_connected;
  // Every corank-one residue has exactly two elements.
  bool thin;
  // Every corank-one residue has at least two elements.
  bool firm;
} HfFlagReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the last failure on this thread (empty after a
// success). The pointer stays valid until the next library call on this
// thread.
const char *hf_last_error(void);

// Releases a string returned by the library. Null is accepted.
//
// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void hf_string_free(char *s);

// Parses a geometry from its JSON form.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum HfStatus hf_geometry_from_json(const char *json, struct HfGeometry **out);

// Writes the canonical JSON form of a geometry; free it with
// [`hf_string_free`].
//
// # Safety
// `g` must be a live geometry handle; `out` must be writable.
enum HfStatus hf_geometry_to_json(const struct HfGeometry *g, char **out);

// Releases a geometry. Null is accepted.
//
// # Safety
// `g` must be null or a live geometry handle, not used afterwards.
void hf_geometry_free(struct HfGeometry *g);

// Rank (number of types) of a geometry.
//
// # Safety
// `g` must be a live geometry handle; `out` must be writable.
enum HfStatus hf_geometry_rank(const struct HfGeometry *g, uintptr_t *out);

// Number of elements of type `t`.
//
// # Safety
// `g` must be a live geometry handle; `out` must be writable.
enum HfStatus hf_geometry_type_count(const struct HfGeometry *g, uintptr_t t, uintptr_t *out);

// Computes the flag report of a geometry.
//
// # Safety
// `g` must be a live geometry handle; `out` must be writable.
enum HfStatus hf_geometry_flag_report(const struct HfGeometry *g,
                                      uintptr_t max_flags,
                                      struct HfFlagReport *out);

// Evaluates the leaf conditions B1 and B2 at the leaf `(i, j)`.
//
// # Safety
// `g` must be a live geometry handle; `b1` and `b2` must be writable.
enum HfStatus hf_geometry_leaf_conditions(const struct HfGeometry *g,
                                          uintptr_t i,
                                          uintptr_t j,
                                          bool *b1,
                                          bool *b2);

// Applies the halving construction at the leaf `(i, j)`; `force` skips the
// precondition checks.
//
// # Safety
// `g` must be a live geometry handle; `out` must be writable.
enum HfStatus hf_geometry_halve(const struct HfGeometry *g,
                                uintptr_t i,
                                uintptr_t j,
                                bool force,
                                struct HfGeometry **out);

// Whether two geometries are isomorphic by a type-preserving map.
//
// # Safety
// `a` and `b` must be live geometry handles; `out` must be writable.
enum HfStatus hf_geometry_isomorphic(const struct HfGeometry *a,
                                     const struct HfGeometry *b,
                                     bool *out);

// Enumerates a presented group (JSON `{"ngens":…,"relators":…}`) in its
// regular representation, with at most `max_cosets` cosets (0 for the
// default ceiling).
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum HfStatus hf_group_from_presentation(const char *json,
                                         uintptr_t max_cosets,
                                         struct HfGroup **out);

// Builds the automorphism group of the cubic toroid with parameters
// `(n, k, s)`, verifying that it is a regular polytope.
//
// # Safety
// `out` must be writable.
enum HfStatus hf_group_cubic_toroid(uintptr_t n,
                                    uintptr_t k,
                                    uintptr_t s,
                                    uintptr_t max_cosets,
                                    struct HfGroup **out);

// Releases a group. Null is accepted.
//
// # Safety
// `g` must be null or a live group handle, not used afterwards.
void hf_group_free(struct HfGroup *g);

// Order of a group.
//
// # Safety
// `g` must be a live group handle; `out` must be writable.
enum HfStatus hf_group_order(const struct HfGroup *g, uint64_t *out);

// The halving subgroup at `(i, j)`: generator `i` replaced by
// `g_i g_j g_i`.
//
// # Safety
// `g` must be a live group handle; `out` must be writable.
enum HfStatus hf_group_halve(const struct HfGroup *g,
                             uintptr_t i,
                             uintptr_t j,
                             struct HfGroup **out);

// The coset geometry of the maximal parabolic subgroups of a group.
//
// # Safety
// `g` must be a live group handle; `out` must be writable.
enum HfStatus hf_group_coset_geometry(const struct HfGroup *g, struct HfGeometry **out);

// Runs the family verification for `(n, k, s)` up to `depth`; writes the
// verdict and the JSON report (free with [`hf_string_free`]). `report` may
// be null when the report is not wanted.
//
// # Safety
// `passed` must be writable; `report` must be null or writable.
enum HfStatus hf_verify_family(uintptr_t n,
                               uintptr_t k,
                               uintptr_t s,
                               uintptr_t depth,
                               bool *passed,
                               char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERFORGE_H */
