#pragma once

#include "dpr/linkage.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace dpr {

constexpr std::size_t kOracleLimit = 2'000'000;

/// Calls @p visit for every simple a-b path that avoids vertices marked in
/// @p blocked (a and b must be unmarked). Returning false from @p visit
/// stops the enumeration.
void for_each_path(const PlaneGraph& g, Vertex a, Vertex b, std::vector<char>& blocked,
    const std::function<bool(const Path&)>& visit);

/// All linkages (s-t linkages canonicalized).
/// @throws Error TooMany when more than @p limit exist.
std::vector<Linkage> enumerate_linkages(const Instance& inst, std::size_t limit = kOracleLimit);

/// Linkages adjacent to @p L: one path replaced by another that avoids the rest.
std::vector<Linkage> neighbours(const Instance& inst, const Linkage& L);

/// Reachability in the reconfiguration graph by breadth-first search.
/// @throws Error TooMany past @p limit visited linkages.
bool oracle_decide(const Instance& inst, const Linkage& P, const Linkage& Q, std::size_t limit = kOracleLimit);

/// A shortest reconfiguration sequence, or nullopt when none exists.
std::optional<Sequence> oracle_shortest(const Instance& inst, const Linkage& P, const Linkage& Q,
    std::size_t limit = kOracleLimit);

/// Size of the connected component of @p P in the reconfiguration graph.
std::size_t component_size(const Instance& inst, const Linkage& P, std::size_t limit = kOracleLimit);

} // namespace dpr
