#pragma once

#include "dpr/linkage.hpp"
#include "dpr/words.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dpr {

using Json = nlohmann::json;

/// Instance file contents: the instance and the linkages it may carry.
struct InstanceFile {
    Instance instance;
    std::optional<Linkage> P;
    std::optional<Linkage> Q;
};

/**
 * @brief Instance to JSON.
 *
 * Keys: "vertices", "rotation" (or "adjacency" for an abstract graph),
 * "terminals" ({"pairs"} or {"s","t","k"}), "faces_hint" for two-face
 * instances, and "P", "Q" when given. Vertices are referred to by name.
 */
Json instance_to_json(const Instance& inst, const Linkage* P = nullptr, const Linkage* Q = nullptr);

/**
 * @brief Instance from JSON. A "faces_hint" names boundary vertices of S
 * and T and forces a two-face reading; otherwise the instance is classified.
 * @throws Error InvalidInput, UnknownVertex and the graph construction errors
 */
InstanceFile instance_from_json(const Json& j);

/// Paths as arrays of vertex names.
Json linkage_to_json(const PlaneGraph& g, const Linkage& L);
/// Paths given by vertex names or integer ids. @throws Error InvalidInput, UnknownVertex
Linkage linkage_from_json(const PlaneGraph& g, const Json& j);

Json sequence_to_json(const PlaneGraph& g, const Sequence& seq);
/// A sequence, or an object whose "sequence" member is one.
Sequence sequence_from_json(const PlaneGraph& g, const Json& j);

/**
 * @brief Crossing data: {"k": n, "sequences": [{"j": j, "crossings":
 * [[i, sign], ...]}, ...]}.
 * @throws Error InvalidInput
 */
std::vector<CrossingSequence> crossings_from_json(const Json& j);
Json crossings_to_json(const std::vector<CrossingSequence>& sequences);

/// Parse a JSON file. @throws Error InvalidInput
Json read_json_file(const std::string& path);

} // namespace dpr
