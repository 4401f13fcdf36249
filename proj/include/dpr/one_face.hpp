#pragma once

#include "dpr/linkage.hpp"

namespace dpr {

/// One-face instances are always reconfigurable; validates the linkages.
/// @throws Error InvalidInput when the instance is not one-face or a
///         linkage is invalid.
bool decide_one_face(const Instance& inst, const Linkage& P, const Linkage& Q);

/**
 * @brief Reconfiguration sequence for a one-face instance.
 *
 * Splits at components and cut vertices; on a 2-connected piece moves the
 * first pair whose boundary arc carries no other terminal onto that arc,
 * recurses on the rest and finally moves the pair onto its target. Every
 * pair moves at most twice, so the sequence has at most 2k+1 elements.
 */
Sequence sequence_one_face(const Instance& inst, const Linkage& P, const Linkage& Q);

/// Sequence for pairs whose terminals share a face of @p g, without
/// classification; used on sub-instances of other engines.
Sequence sequence_common_face(const PlaneGraph& g, const Linkage& P, const Linkage& Q);

} // namespace dpr
