#pragma once

#include "dpr/errors.hpp"

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dpr {

using Vertex = int;

/// A face traced to the left of its darts. A face of a graph that is not
/// 2-connected may repeat vertices.
struct Face {
    int id = -1;
    std::vector<int> darts;      ///< closed dart walk
    std::vector<Vertex> walk;    ///< tail of each dart, same length as @c darts

    bool contains(Vertex v) const;
};

/**
 * @brief Simple undirected graph with a clockwise rotation system.
 *
 * Vertices are dense integers 0..n-1 with string names for I/O. Dart ids are
 * offset(v) + position of the head in rotation(v). The face to the left of
 * dart (u->v) continues with dart (v->w), w the clockwise successor of u
 * around v.
 *
 * A graph built without Euler validation (an abstract graph) still traces
 * faces but @c embedded() is false and face data carries no meaning.
 */
class PlaneGraph {
public:
    PlaneGraph() = default;

    int num_vertices() const { return static_cast<int>(rotation_.size()); }
    int num_edges() const { return num_darts() / 2; }
    int num_darts() const { return static_cast<int>(dart_head_.size()); }
    bool embedded() const { return embedded_; }

    const std::string& name(Vertex v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<Vertex> find(const std::string& name) const;
    Vertex at(const std::string& name) const;

    const std::vector<Vertex>& rotation(Vertex v) const { return rotation_[v]; }
    int degree(Vertex v) const { return static_cast<int>(rotation_[v].size()); }
    /// Index of @p u in rotation(v), or -1.
    int position(Vertex v, Vertex u) const;
    bool has_edge(Vertex u, Vertex v) const { return position(u, v) >= 0; }
    /// Clockwise successor / predecessor of neighbour @p u around @p v.
    Vertex succ(Vertex v, Vertex u) const;
    Vertex pred(Vertex v, Vertex u) const;

    int dart(Vertex u, Vertex v) const;
    Vertex tail(int d) const { return dart_tail_[d]; }
    Vertex head(int d) const { return dart_head_[d]; }
    int twin(int d) const { return twin_[d]; }
    /// Face to the left of dart @p d.
    int face_of(int d) const { return dart_face_[d]; }
    int left_face(Vertex u, Vertex v) const { return dart_face_[dart(u, v)]; }
    int right_face(Vertex u, Vertex v) const { return dart_face_[dart(v, u)]; }

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int f) const { return faces_[f]; }
    int num_faces() const { return static_cast<int>(faces_.size()); }
    int num_components() const { return num_components_; }

    /// Faces whose boundary contains every vertex of @p vs, in id order.
    std::vector<int> faces_containing(const std::vector<Vertex>& vs) const;

    /// Induced subgraph on @p keep (rotation restricted). @p map_out, when
    /// given, receives the old-to-new vertex map (-1 for dropped vertices).
    PlaneGraph induced(const std::vector<Vertex>& keep, std::vector<Vertex>* map_out = nullptr) const;

    friend PlaneGraph make_graph(std::vector<std::string> names,
        std::vector<std::vector<Vertex>> rotation, bool require_planar);

private:
    void trace();

    std::vector<std::string> names_;
    std::unordered_map<std::string, Vertex> index_;
    std::vector<std::vector<Vertex>> rotation_;
    std::vector<int> offset_;
    std::vector<Vertex> dart_tail_;
    std::vector<Vertex> dart_head_;
    std::vector<int> twin_;
    std::vector<int> dart_face_;
    std::vector<Face> faces_;
    int num_components_ = 0;
    bool embedded_ = false;
};

/**
 * @brief Build a graph from integer rotation lists.
 *
 * Validates symmetry and simplicity; when @p require_planar is set, each
 * component must satisfy V - E + F = 2.
 * @throws Error AsymmetricRotation, MultiEdgeOrLoop, NotPlanarEmbedding,
 *         UnknownVertex
 */
PlaneGraph make_graph(std::vector<std::string> names, std::vector<std::vector<Vertex>> rotation,
    bool require_planar = true);

/// Build a plane graph from named vertices and named clockwise rotations.
PlaneGraph build_plane_graph(const std::vector<std::string>& vertices,
    const std::map<std::string, std::vector<std::string>>& rotation);

/// Build an abstract (non-embedded) graph from named adjacency lists.
PlaneGraph build_abstract_graph(const std::vector<std::string>& vertices,
    const std::map<std::string, std::vector<std::string>>& adjacency);

/// Clockwise rotation lists from planar coordinates (y axis pointing up).
std::vector<std::vector<Vertex>> rotation_from_positions(const std::vector<std::vector<Vertex>>& adjacency,
    const std::vector<std::pair<double, double>>& positions);

/// Graphviz export; rotations are kept as comments.
std::string to_dot(const PlaneGraph& g);

enum class InstanceKind { OneFace, TwoFace, St, General };
const char* to_string(InstanceKind kind);

/// Terminal specification: ordered pairs, or a single (s, t) with multiplicity k.
struct Terminals {
    bool st = false;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    Vertex s = -1;
    Vertex t = -1;
    int k = 0;

    int count() const { return st ? k : static_cast<int>(pairs.size()); }
    static Terminals from_pairs(std::vector<std::pair<Vertex, Vertex>> p);
    static Terminals from_st(Vertex s, Vertex t, int k);
};

/// A graph with terminals and its classification.
struct Instance {
    PlaneGraph graph;
    Terminals terminals;
    InstanceKind kind = InstanceKind::General;
    int face_one = -1; ///< the shared face of a one-face instance
    int face_S = -1;   ///< source face of a two-face instance
    int face_T = -1;   ///< sink face of a two-face instance

    int k() const { return terminals.count(); }
    bool st() const { return terminals.st; }
    Vertex source(int i) const { return terminals.st ? terminals.s : terminals.pairs[i].first; }
    Vertex sink(int i) const { return terminals.st ? terminals.t : terminals.pairs[i].second; }
    std::vector<Vertex> sources() const;
    std::vector<Vertex> sinks() const;
};

/**
 * @brief Classify terminal placement.
 *
 * One-face wins when all terminals share a face. Otherwise two-face when
 * all sources share a face S and all sinks share a different face T.
 * @throws Error TerminalNotInGraph, InvalidInput (repeated terminal)
 */
Instance classify_instance(const PlaneGraph& g, const Terminals& terminals);

/// Two-face instance with designated faces (the caller names S and T).
Instance make_two_face(const PlaneGraph& g, const Terminals& terminals, int face_S, int face_T);

} // namespace dpr
