#pragma once

#include "dpr/plane_graph.hpp"

#include <vector>

namespace dpr {

using Path = std::vector<Vertex>;
/// Ordered tuple of paths (pairs mode) or a path set (s-t mode, kept sorted).
using Linkage = std::vector<Path>;
using Sequence = std::vector<Linkage>;

/// Consecutive vertices adjacent and no vertex repeated.
bool is_simple_path(const PlaneGraph& g, const Path& p);

/**
 * @brief Check the linkage conditions for @p inst.
 *
 * Pairs mode: path i runs from s_i to t_i and paths are pairwise disjoint.
 * s-t mode: every path runs from s to t, internal vertices pairwise disjoint.
 * Failure codes: NotAPath(i), WrongEndpoints(i), SharedVertex(v, i, j),
 * InvalidInput (wrong number of paths).
 */
Status validate_linkage(const Instance& inst, const Linkage& L);

/// Sorted copy; the canonical form of an s-t linkage.
Linkage canonical_st(Linkage L);

/// Exactly one coordinate differs (pairs mode) or exactly one path is
/// exchanged (s-t mode, set semantics).
bool adjacent(const Linkage& A, const Linkage& B, bool st_mode = false);

/// Every element valid and consecutive elements adjacent. Failure codes:
/// InvalidLinkage(index), NotAdjacent(index) where index is the first
/// element of the offending pair.
Status verify_sequence(const Instance& inst, const Sequence& seq);

/// Equality with s-t set semantics when @p st_mode.
bool same_linkage(const Linkage& A, const Linkage& B, bool st_mode = false);

/// Subpath of @p p from vertex @p a to vertex @p b (both on p, a first).
Path subpath(const Path& p, Vertex a, Vertex b);

} // namespace dpr
