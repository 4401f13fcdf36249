#pragma once

#include "dpr/two_face.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dpr {

/// Outcome of the s-t decision with the separators that were used.
struct StVerdict {
    bool yes = true;
    std::string reason;
    std::optional<std::vector<Vertex>> U; ///< N(X), X minimal on the s side
    std::optional<std::vector<Vertex>> W; ///< N(Y), Y minimal on the t side
};

/**
 * @brief Decide reconfigurability of two s-t linkages in a plane graph.
 *
 * Without an s-t separator of size k, or when the minimal separators next to
 * s and next to t overlap, the answer is YES. Otherwise paths are matched at
 * U and must meet W at the same vertex in P and Q; the part strictly between
 * the separators is then decided as a pairs instance.
 * @throws Error InvalidInput for an instance that is not s-t or invalid linkages.
 */
StVerdict decide_st(const Instance& inst, const Linkage& P, const Linkage& Q);

/**
 * @brief Graph with chosen vertices replaced by concentric ring grids.
 *
 * Every edge at an apex is subdivided into @c rings vertices (ring 0 closest
 * to the apex), consecutive subdivision vertices of the same ring are joined
 * in rotation order and the apex is deleted.
 */
struct GridExpansion {
    struct Grid {
        Vertex apex = -1;
        bool source = true; ///< paths start at this apex
        int spokes = 0;
        int rings = 0;
        std::vector<Vertex> ids; ///< ids[ring * spokes + column]
        Vertex at(int ring, int column) const;
        /// Face bounded by ring 0.
        int inner_face(const PlaneGraph& g) const;
    };
    PlaneGraph graph;
    std::vector<Vertex> to_base;   ///< expanded vertex -> base vertex, -1 on grids
    std::vector<Vertex> from_base; ///< base vertex -> expanded vertex, -1 for apexes
    std::vector<int> grid_of;      ///< expanded vertex -> grid index, -1 off grids
    std::vector<Grid> grids;
};

/// Replace each apex of @p apexes (vertex, is_source) by a grid of @p rings rings.
GridExpansion expand_vertices(const PlaneGraph& g, const std::vector<std::pair<Vertex, bool>>& apexes, int rings);

/**
 * @brief Route paths through a grid.
 *
 * Path j starts on ring 0 at column @p inner[j] and leaves the outermost ring
 * at column @p outer[j]; @p winding adds whole turns. Paths keep their
 * cyclic order and move along a ring only into columns that no other path
 * occupies on that ring. Returns vertices from ring 0 outwards, or nullopt
 * when the rings do not suffice.
 * @throws Error InvalidInput when inner and outer orders disagree cyclically.
 */
std::optional<std::vector<Path>> route_grid(const GridExpansion::Grid& grid, const std::vector<int>& inner,
    const std::vector<int>& outer, int winding);

/// Unwound routing: the winding whose largest per-path shift is smallest.
int natural_winding(const GridExpansion::Grid& grid, const std::vector<int>& inner, const std::vector<int>& outer);

/// s-t instance expanded at both terminals into a two-face pairs instance.
struct StExpansion {
    PlaneGraph instance_base; ///< the graph before expansion
    GridExpansion grids;
    Instance instance; ///< pairs (s_i, t_i): s_i on ring 0 column i, t_i on ring 0 column k-1-i
    /**
     * Lift an s-t linkage: the path of rank r in clockwise order at s is
     * given pair (r + rotation) mod k; @p windings are turns added to the
     * least-turning routes, per grid (s, then t).
     */
    std::optional<Linkage> lift(const Linkage& L, int rotation, const std::vector<int>& windings) const;
    /// Project a linkage of the expanded instance to an s-t linkage (sorted).
    Linkage project(const Linkage& L) const;
};

/**
 * @brief Replace s and t by grids of @p rings rings.
 *
 * The result has |V| - 2 + rings * (deg s + deg t) vertices.
 * @throws Error AdjacentST, DegreeTooSmall (degree below k + 1)
 */
StExpansion grid_expand(const PlaneGraph& g, Vertex s, Vertex t, int k, int rings);

/**
 * @brief Reconfiguration sequence of s-t linkages, or nullopt for NO.
 *
 * Separator-free instances are expanded at s and t, the lifted target is
 * rewound until mu vanishes, and the two-face sequence is projected back.
 * Otherwise the parts next to s and next to t are expanded at their apex
 * alone and the middle part runs through the two-face engine.
 */
std::optional<Sequence> sequence_st(const Instance& inst, const Linkage& P, const Linkage& Q);

} // namespace dpr
