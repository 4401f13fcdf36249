#pragma once

#include "dpr/linkage.hpp"
#include "dpr/words.hpp"

#include <vector>

namespace dpr {

/// Maximal common subwalk of P and Q. Indices refer to positions on P
/// (p_first <= p_last, in P's direction) and on Q.
struct SharedSubwalk {
    int p_first = 0;
    int p_last = 0;
    int q_first = 0; ///< Q-position of P[p_first]
    int q_last = 0;  ///< Q-position of P[p_last]
    int q_min() const { return q_first < q_last ? q_first : q_last; }
    int q_max() const { return q_first < q_last ? q_last : q_first; }
};

/// All maximal shared subwalks of P with Q, in P order.
std::vector<SharedSubwalk> shared_subwalks(const Path& P, const Path& Q);

/**
 * @brief Local intersection sign of P with Q at one shared subwalk.
 *
 * The left side of Q at an interior vertex v consists of the neighbours met
 * strictly between Q's incoming and outgoing neighbour when turning
 * clockwise from the incoming one. +1 when P enters from the left and leaves
 * to the right, -1 for the reverse, 0 for a touch.
 * @throws Error DegenerateAtTerminal when the subwalk holds an endpoint of P
 *         or of Q.
 */
int crossing_sign(const PlaneGraph& g, const Path& P, const Path& Q, const SharedSubwalk& sw);

/// Nonzero crossings of the family with Q_j in Q_j order, skipping subwalks
/// that contain an endpoint of Q_j or of the crossing path. Indices 1-based.
CrossingSequence crossing_sequence(const PlaneGraph& g, const Linkage& family, const Path& Qj, int j);

/// Algebraic intersection number.
/// @throws Error SharedEndpoint when an endpoint of one path lies on the other.
int mu(const PlaneGraph& g, const Path& P, const Path& Q);

/// Matrix M[i][j] = mu(P_i, Q_j) for i != j (diagonal left 0).
std::vector<std::vector<int>> mu_matrix(const PlaneGraph& g, const Linkage& P, const Linkage& Q);

/// Common value of mu(P_i, Q_j) over i != j (0 when k = 1).
/// @throws Error InconsistentMu when the values differ.
int mu_two_face(const Instance& inst, const Linkage& P, const Linkage& Q);

/**
 * @brief Dual walk from face S to face T.
 *
 * @c darts[i] is the i-th crossed dart, oriented so that the curve passes
 * from the face on its right to the face on its left. Walking a dart that
 * equals some darts[i] therefore crosses the curve with sign +1, walking
 * its twin with sign -1.
 */
struct ReferenceCurve {
    std::vector<int> darts;
    std::vector<int> faces; ///< S, then each face entered; ends at T
    std::vector<int> shift; ///< per dart of the graph: +1, -1 or 0
};

/// Shortest dual walk from S to T crossing no edge of @p avoid.
/// @throws Error NoDualPath
ReferenceCurve reference_curve(const Instance& inst, const Linkage& avoid);

/// Signed crossing count of a walk with C; walking once around S with S on
/// the right gives +1.
int lift_index(const PlaneGraph& g, const ReferenceCurve& C, const Path& walk);

} // namespace dpr
