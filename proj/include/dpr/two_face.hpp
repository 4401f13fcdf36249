#pragma once

#include "dpr/strip.hpp"

#include <optional>

namespace dpr {

/// Outcome of the two-face decision with its certificate.
struct TwoFaceVerdict {
    bool yes = true;
    std::optional<int> mu;                  ///< mu(P, Q) when no size-k separator exists at the top
    std::optional<std::vector<Vertex>> separator; ///< top-level size-k terminal separator
    std::string reason;
};

/**
 * @brief Decide reconfigurability of a two-face instance.
 *
 * Without a terminal separator of size k the answer is mu(P, Q) = 0. With
 * one, every pair must cross it at the same vertex in P and Q; the instance
 * then splits at the separator and both halves are decided recursively.
 * @throws Error InvalidInput for invalid linkages or a non two-face instance.
 */
TwoFaceVerdict decide_two_face(const Instance& inst, const Linkage& P, const Linkage& Q);

/// Pieces of a two-face instance between consecutive size-k separators.
struct TwoFacePiece {
    Instance instance;
    std::vector<Vertex> to_parent; ///< piece vertex -> vertex of the input graph
    Linkage P;
    Linkage Q;
};

/**
 * @brief Reconfiguration sequence, or nullopt when the answer is NO.
 *
 * Separator-free pieces climb from P and from Q to the join of P and Q in
 * the universal cover; pieces are stitched across the separators.
 */
std::optional<Sequence> sequence_two_face(const Instance& inst, const Linkage& P, const Linkage& Q);

/// The pieces a YES instance is split into (one piece when separator-free).
std::vector<TwoFacePiece> two_face_pieces(const Instance& inst, const Linkage& P, const Linkage& Q);

/// Decision for a restricted planar pairs instance (one-face, two-face, or
/// disconnected into such parts); no input validation.
bool decide_planar_pairs(const Instance& inst, const Linkage& P, const Linkage& Q);

/// Sequence for a YES instance accepted by decide_planar_pairs.
Sequence sequence_planar_pairs(const Instance& inst, const Linkage& P, const Linkage& Q);

/// Restriction of @p inst to @p keep with terminals @p pairs (given in the
/// parent's ids); S and T are located as faces containing the new sources
/// and sinks, preferring the parent's faces.
Instance restrict_instance(const Instance& inst, const std::vector<Vertex>& keep,
    const std::vector<std::pair<Vertex, Vertex>>& pairs, std::vector<Vertex>& to_parent);

} // namespace dpr
