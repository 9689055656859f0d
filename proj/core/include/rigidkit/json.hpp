#pragma once

// JSON forms of the library's values and reports. Object keys come out
// sorted and no field depends on timing or thread count, so a report
// serializes to the same bytes on every run.

#include "rigidkit/collision.hpp"
#include "rigidkit/graph.hpp"
#include "rigidkit/hom.hpp"
#include "rigidkit/omega.hpp"
#include "rigidkit/phi.hpp"
#include "rigidkit/rigid_search.hpp"
#include "rigidkit/symmetrize.hpp"
#include "rigidkit/witness.hpp"

#include <nlohmann/json.hpp>

namespace rigidkit {

using Json = nlohmann::json;

inline constexpr const char* version = RIGIDKIT_VERSION;

/// {"n": .., "edges": [[u, v], ...]} with edges sorted.
Json to_json(const Digraph& g);
Digraph digraph_from_json(const Json& j);

/// {"domain": [...], "image": [...]}
Json to_json(const VertexMap& m);
Json to_json(const RigidityCertificate& c);
Json to_json(const WitnessReport& r);
Json to_json(const CollisionResult& r);
Json to_json(const OmegaCertificate& c);
Json to_json(const OmegaSweepReport& r);
Json to_json(const PhiSweepReport& r);
Json to_json(const SearchReport& r);
Json to_json(const FaithfulResult& r);
Json to_json(const FaithfulSweepReport& r);

}  // namespace rigidkit
