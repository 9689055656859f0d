#pragma once

#include "rigidkit/graph.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace rigidkit {

/// Forces f(source) = target.
struct Pin {
    Vertex source;
    Vertex target;

    friend bool operator==(const Pin&, const Pin&) = default;
};

struct HomQuery {
    std::vector<Pin> pins;
    /// Stop after this many homomorphisms (in search order).
    std::optional<std::size_t> limit;
    /// Worker threads; results never depend on this.
    unsigned workers = 1;
};

/// All maps f with (a, b) in source => (f(a), f(b)) in target that satisfy
/// every pin, sorted lexicographically by image vector.
///
/// Search is backtracking with bitset candidate domains: the unassigned
/// vertex with the fewest candidates goes next (ties: more assigned
/// neighbours, then higher degree, then lower index), candidates are tried
/// in ascending order, and each assignment prunes the domains of unassigned
/// neighbours against the target's in/out neighbourhoods. On targets of up
/// to 4096 vertices the pruning is carried on to arc consistency. With a
/// limit, the first `limit` maps in that search order are kept and then
/// sorted.
///
/// Throws OutOfRangeError for a pin outside either vertex set.
std::vector<VertexMap> enumerate_homs(const Digraph& source, const Digraph& target, const HomQuery& query = {});

std::size_t count_homs(const Digraph& source, const Digraph& target, const HomQuery& query = {});

bool hom_exists(const Digraph& source, const Digraph& target, std::span<const Pin> pins = {});

/// Sequential visitor in search order. `visit` receives the image vector and
/// returns false to stop. Returns the number of maps visited.
std::size_t for_each_hom(const Digraph& source, const Digraph& target, std::span<const Pin> pins,
                         const std::function<bool(std::span<const Vertex>)>& visit);

/// Direct edge-by-edge check; image must have source.size() entries.
bool is_homomorphism(const Digraph& source, const Digraph& target, std::span<const Vertex> image);

struct RigidityCertificate {
    bool rigid = true;
    /// First non-identity endomorphism found, when not rigid.
    std::optional<VertexMap> counterexample;
    std::size_t maps_examined = 0;
};

RigidityCertificate is_rigid(const Digraph& g);

}  // namespace rigidkit
