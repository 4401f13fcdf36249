#pragma once

#include "dpr/plane_graph.hpp"

#include <optional>
#include <vector>

namespace dpr {

/// A vertex cut with its source-side certificate.
struct VertexCut {
    std::vector<Vertex> cut;  ///< sorted
    std::vector<Vertex> side; ///< vertices reachable from the sources in G - cut, sorted
    int size() const { return static_cast<int>(cut.size()); }
};

/// Outcome of a bounded cut search: a cut, or a certificate that the
/// minimum is at least @c bound.
struct CutResult {
    std::optional<VertexCut> cut;
    int bound = 0; ///< minimum cut value when @c cut is set, else lower bound
};

/**
 * @brief Maximum number of vertex-disjoint paths from @p sources to @p sinks,
 * with @p protected_vertices uncuttable, capped at @p limit.
 *
 * Also returns the source-side minimal and sink-side minimal minimum cuts.
 * Flow value equals @p limit when the cap was hit. Source and sink vertices
 * are always protected.
 */
struct FlowCuts {
    int value = 0;
    bool unbounded = false;        ///< a source is adjacent to a sink
    std::vector<Vertex> source_cut;
    std::vector<Vertex> source_side; ///< X: reached from sources without crossing the cut
    std::vector<Vertex> sink_cut;
    std::vector<Vertex> sink_side;   ///< Y
    std::vector<std::vector<Vertex>> paths; ///< the routed disjoint paths
};
FlowCuts vertex_flow(const PlaneGraph& g, const std::vector<Vertex>& sources, const std::vector<Vertex>& sinks,
    int limit);

/// Terminal separator of size exactly k for a pairs instance, or a bound k+1.
/// @throws Error NoLinkagePossible when the minimum is below k.
CutResult min_terminal_separator(const Instance& inst);

/// Minimum s-t vertex cut, searched up to @p limit.
/// @throws Error AdjacentTerminals
CutResult min_st_separator(const PlaneGraph& g, Vertex s, Vertex t, int limit = 1 << 30);

enum class Side { Source, Sink };

/// Inclusionwise minimal X (s in X, N(X) an s-t cut of size k); the sink
/// side gives Y with t in Y. Sorted.
/// @throws Error CutNotK, AdjacentTerminals
std::vector<Vertex> minimal_side_set(const PlaneGraph& g, Vertex s, Vertex t, int k, Side side);

/// Open neighbourhood of a vertex set, sorted.
std::vector<Vertex> neighbourhood(const PlaneGraph& g, const std::vector<Vertex>& X);

/// True when every path from @p from to @p to meets @p cut.
bool separates(const PlaneGraph& g, const std::vector<Vertex>& cut, const std::vector<Vertex>& from,
    const std::vector<Vertex>& to);

} // namespace dpr
