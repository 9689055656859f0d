#pragma once

#include "rigidkit/graph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace rigidkit {

/// A witness set B together with its local relation R_B: (a, b) in R_B iff
/// (f_B(a), f_B(b)) is an edge, where f_B enumerates B in ascending order.
struct LocalRelation {
    std::vector<Vertex> set;
    Digraph relation;
};

struct Collision {
    /// Indices into CollisionResult::witnesses.
    std::size_t first = 0;
    std::size_t second = 0;
    /// f_second o f_first^-1, domain = first set.
    VertexMap map;
    /// The map was re-checked as an isomorphism between the two induced
    /// substructures, in both directions.
    bool verified = false;
};

struct CollisionResult {
    /// Distinct input sets, sorted, in first-appearance order.
    std::vector<LocalRelation> witnesses;
    std::optional<Collision> collision;
};

/// Groups witnesses by (|B|, R_B) and reports the first pair of distinct
/// sets sharing a key. Only the canonical ascending bijection is tried, so
/// witnesses isomorphic under some other bijection are not matched.
/// Throws WitnessError for an empty set.
CollisionResult find_witness_collision(const Digraph& g, const std::vector<std::vector<Vertex>>& witnesses);

}  // namespace rigidkit
