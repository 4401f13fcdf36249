#pragma once

#include "dpr/generators.hpp"

#include <array>
#include <optional>
#include <random>
#include <vector>

namespace dpr {

enum class NclKind { And, Or };

/**
 * @brief Cubic AND/OR constraint graph.
 *
 * An OR vertex meets three weight-2 edges; an AND vertex meets one weight-2
 * and two weight-1 edges. incident[v] lists the edges at v; for a plane
 * AND/OR graph this is the clockwise order.
 */
struct NclGraph {
    struct Edge {
        int u = -1;
        int v = -1;
        int weight = 2;
    };
    std::vector<NclKind> kind;
    std::vector<Edge> edges;
    std::vector<std::array<int, 3>> incident;

    int num_vertices() const { return static_cast<int>(kind.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    int other(int e, int v) const { return edges[e].u == v ? edges[e].v : edges[e].u; }
    /// The weight-2 edge at an AND vertex.
    int heavy_edge(int v) const;
};

/**
 * @brief AND/OR graph from clockwise neighbour lists; edges listed in
 * @p light get weight 1, all others weight 2. Kinds follow from weights.
 * @throws Error InvalidNcl
 */
NclGraph ncl_from_rotation(const std::vector<std::array<int, 3>>& neighbours,
    const std::vector<std::pair<int, int>>& light);

/// Orientation of every edge: toward[e] is the head of edge e.
struct NclConfig {
    std::vector<int> toward;
    bool operator==(const NclConfig&) const = default;
};

/// Degree, weight and kind consistency. Fails with InvalidNcl.
Status ncl_check_graph(const NclGraph& h);

/// Total weight of the edges pointing at @p v.
int incoming_weight(const NclGraph& h, const NclConfig& c, int v);

/// Incoming weight at least two everywhere; InvalidNcl carries the first violating vertex.
Status ncl_validate(const NclGraph& h, const NclConfig& c);

/// Whether incident orders form a plane embedding of the AND/OR graph.
bool ncl_planar(const NclGraph& h);

/// Configuration with edge @p e reversed.
NclConfig ncl_flip(const NclGraph& h, const NclConfig& c, int e);

/// Edges whose reversal keeps the configuration valid.
std::vector<int> legal_flips(const NclGraph& h, const NclConfig& c);

/**
 * @brief Random plane AND/OR graph on @p vertices vertices (even, at least 4).
 *
 * Starts from K4 and repeatedly joins two subdivided edges of one face; the
 * boundaries of up to two vertex-disjoint faces become weight-1 cycles.
 */
NclGraph random_ncl_graph(std::mt19937_64& rng, int vertices);

/// A random valid configuration found by randomized backtracking, or nullopt.
std::optional<NclConfig> random_ncl_config(std::mt19937_64& rng, const NclGraph& h);

/// @p steps random legal flips starting at @p c.
NclConfig random_ncl_walk(std::mt19937_64& rng, const NclGraph& h, NclConfig c, int steps);

/// Largest |layout[u] - layout[v]| over the edges of @p h.
int ncl_bandwidth(const NclGraph& h, const std::vector<int>& layout);

/// Largest |layout[u] - layout[v]| over the edges of @p g.
int layout_bandwidth(const PlaneGraph& g, const std::vector<int>& layout);

/**
 * @brief Two-path s-t instance simulating an AND/OR graph.
 *
 * The red path P1 runs through the gadgets of AND vertices and weight-2
 * edges, the blue path P2 through the gadgets of all vertices and weight-1
 * edges. The graph is abstract (generally not planar) with maximum degree 4.
 */
struct NclStReduction {
    NclGraph h;
    Instance instance;
    std::vector<std::array<Vertex, 2>> white;     ///< per edge: w at edges[e].u, w at edges[e].v
    std::vector<std::array<Vertex, 2>> edge_pair; ///< red (weight 2) or blue (weight 1) pair of each edge gadget
    std::vector<std::array<Vertex, 2>> red;       ///< per AND vertex, else -1
    std::vector<std::array<Vertex, 2>> blue;      ///< per vertex
    std::vector<Vertex> black;                    ///< per AND vertex, else -1
    std::vector<int> red_order;  ///< gadgets on P1: vertex v as v, edge e as |V| + e
    std::vector<int> blue_order; ///< gadgets on P2
    std::vector<int> layout;     ///< injective layout of the graph in bandwidth mode, else empty

    /// {P1, P2} created from a valid configuration.
    Linkage created(const NclConfig& c) const;
    /// Orientations read off the edge gadgets. @throws Error MalformedLinkage
    NclConfig canonical(const Linkage& L) const;
    /// Steps from created(c) to created(c with e reversed); at most five steps.
    Sequence flip(const NclConfig& c, int e) const;
};

/**
 * @brief Build the s-t reduction. With @p layout (an injective layout of
 * the vertices of @p h), gadgets are chained in layout order and the
 * emitted graph layout has bandwidth at most 8 (4c + 3) + 7 for layout
 * bandwidth c.
 * @throws Error InvalidNcl
 */
NclStReduction gen_ncl_stpaths(const NclGraph& h, const std::vector<int>* layout = nullptr);

/// Reduction with linkages created from @p sigma and @p tau. @throws Error InvalidNcl
GeneratedInstance gen_ncl_stpaths(const NclGraph& h, const NclConfig& sigma, const NclConfig& tau);

/**
 * @brief Plane pairs instance simulating a plane AND/OR graph.
 *
 * Pairs are (s_e, t_e) per edge, then (s_v, t_v) per vertex, then
 * (so_v, to_v) per OR vertex.
 */
struct NclPlanarReduction {
    /// Gadget vertices of an H vertex; a, b, c, d, so, to only at OR vertices.
    struct Gadget {
        Vertex s = -1, t = -1, a = -1, b = -1, c = -1, d = -1, so = -1, to = -1;
    };
    NclGraph h;
    Instance instance;
    std::vector<std::array<Vertex, 2>> white; ///< per edge: w at edges[e].u, w at edges[e].v
    std::vector<std::array<Vertex, 2>> edge_ends; ///< s_e, t_e
    std::vector<Gadget> gadget;
    std::vector<int> edge_index;   ///< pair of each edge
    std::vector<int> vertex_index; ///< pair (s_v, t_v)
    std::vector<int> or_index;     ///< pair (so_v, to_v), -1 at AND vertices

    Linkage created(const NclConfig& c) const;
    /// @throws Error MalformedLinkage
    NclConfig canonical(const Linkage& L) const;
    /// Shortest step sequence from created(c) to created(c with e reversed)
    /// that only moves paths of the gadgets of e and its endpoints.
    Sequence flip(const NclConfig& c, int e) const;
};

/// @throws Error InvalidNcl, NotPlanarH
NclPlanarReduction gen_ncl_planar(const NclGraph& h);

/// Plane reduction with linkages created from @p sigma and @p tau.
GeneratedInstance gen_ncl_planar(const NclGraph& h, const NclConfig& sigma, const NclConfig& tau);

} // namespace dpr
