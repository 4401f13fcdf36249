#pragma once

#include "dpr/crossings.hpp"

#include <unordered_set>
#include <vector>

namespace dpr {

/// Vertex of the strip: a vertex of G and the copy it lies in.
struct LiftedVertex {
    Vertex v = -1;
    int copy = 0;
    bool operator==(const LiftedVertex&) const = default;
};

using LiftedPath = std::vector<LiftedVertex>;

/// Range of copies covered by a finite piece of the strip.
struct Window {
    int lo = 0;
    int hi = 0;
};

/**
 * @brief Finite piece of the universal cover of a two-face instance.
 *
 * The cover is cut along a reference curve C from S to T; copies of the
 * cut annulus are glued along C. A lifted dart (d, c) runs from
 * (tail d, c) to (head d, c + shift(d)). Faces other than S and T lift to
 * faces (F, j), j the copy of the tail of the first dart of F's walk.
 */
class Strip {
public:
    /// Strip for @p inst with C chosen to avoid the edges of @p avoid.
    Strip(const Instance& inst, const Linkage& avoid);

    const Instance& instance() const { return *inst_; }
    const ReferenceCurve& curve() const { return C_; }

    /// Lift of @p p starting in copy @p copy.
    LiftedPath lift(const Path& p, int copy = 0) const;
    static Path project(const LiftedPath& p);

    /// Copies touched by the lifts, widened by a margin.
    Window window(const std::vector<LiftedPath>& paths) const;

    /**
     * @brief Left side of a lifted S-T path: one flag per window node.
     *
     * Nodes are the lifted faces other than S and T, followed by one node
     * per lifted boundary dart of S and of T standing for the part of S or
     * T just beside it. The path is closed up by rays from its ends into S
     * and T, so the two sides are well defined even where S and T touch.
     */
    std::vector<char> left_region(const LiftedPath& p, const Window& w) const;

    /// L(lift P) is contained in L(lift Q); both lifted from copy 0.
    bool precedes(const Path& P, const Path& Q) const;

    /// Join of one pair: the path in the union of the two lifts whose left
    /// region is the union of theirs.
    /// @throws Error MuNonzero when the lifts end in different copies.
    Path join_path(const Path& P, const Path& Q) const;

    /// Pairwise join, validated as a linkage.
    Linkage join(const Linkage& P, const Linkage& Q) const;

    /**
     * @brief One reconfiguration step from @p P towards @p target with
     * P strictly below the result and the result below @p target.
     * @throws Error NoImprovingStep
     */
    Linkage improve_step(const Linkage& P, const Linkage& target) const;

    /// Repeated improving steps from @p P up to @p target, both included.
    Sequence climb(const Linkage& P, const Linkage& target) const;

    /// Number of window faces left of the lift of @p p.
    long long left_size(const Path& p, const Window& w) const;

private:
    /// Dart positions along the boundary of S or T.
    struct Rim {
        int face = -1;
        std::vector<int> darts;
        std::vector<int> offset; ///< copy of the tail of darts[t] relative to darts[0], first lap
        std::vector<int> pos;    ///< per dart of G: index in darts, or -1
        int turn = 0;            ///< copy change over one lap
    };
    struct Layout {
        Window w;
        int inner = 0;  ///< number of lifted interior faces
        int lap_lo[2];
        int laps[2];
        int base[2];
        int total = 0;
    };

    Layout layout(const Window& w) const;
    int inner_node(int fidx, int copy, const Layout& L) const { return (copy - L.w.lo) * num_inner_ + fidx; }
    int rim_node(int r, int t, int lap, const Layout& L) const;
    long long edge_key(int d, int copy) const;
    std::unordered_set<long long> edge_set(const LiftedPath& p) const;
    // Node on the left of lifted dart (d, c), or -1 outside the window.
    int left_node(int d, int copy, const Layout& L) const;
    // Rim node just after the corner where the ray from @p x enters rim r.
    int ray_node(int r, const LiftedVertex& x, const Layout& L) const;
    std::vector<LiftedVertex> face_walk(int fidx, int copy) const;

    const Instance* inst_;
    ReferenceCurve C_;
    std::vector<int> inner_;  ///< interior face ids
    std::vector<int> fidx_;   ///< face id -> index in inner_, -1 for S and T
    std::vector<int> offset_; ///< per dart: copy of its tail relative to its face's first dart
    int num_inner_ = 0;
    Rim rim_[2]; ///< S and T
};

} // namespace dpr
