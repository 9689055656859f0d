#pragma once

#include "rigidkit/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rigidkit {

/// How a digraph becomes an undirected graph: every vertex is replaced by a
/// copy of `vertex_gadget`, every arc (u, v) by a copy of `arc_gadget` whose
/// tail anchor is glued to u's tail port and head anchor to v's head port.
/// Non-anchor arc-gadget vertices are fresh for every arc.
struct GadgetScheme {
    UGraph vertex_gadget;
    Vertex tail_port = 0;
    Vertex head_port = 0;
    UGraph arc_gadget;
    Vertex tail_anchor = 0;
    Vertex head_anchor = 1;
};

/// An 8-vertex rigid graph whose triangles cover it and are chained through
/// shared vertices, ports on two non-adjacent vertices, and a single edge per
/// arc. Link edges never lie on a triangle, so every copy of the vertex
/// gadget must map onto a copy of itself.
GadgetScheme default_scheme();

/// Throws SchemeError unless both gadgets are connected, ports and anchors
/// are in range, the anchors differ, and the symmetrized single arc is
/// connected and rigid (so no automorphism exchanges tail and head).
void validate_scheme(const GadgetScheme& scheme);

/// Text form: a line "arc T H" followed by an edge-list block for the arc
/// gadget, then optionally "vertex T H" followed by an edge-list block for
/// the vertex gadget (default: one vertex, both ports 0). Edge lists may
/// give each undirected edge once or both ways.
GadgetScheme parse_scheme(std::string_view text);
std::string encode_scheme(const GadgetScheme& scheme);

struct SymmetrizedGraph {
    UGraph graph;
    /// Vertex of the input -> its tail-port node.
    std::vector<Vertex> carrier;
};

SymmetrizedGraph symmetrize(const Digraph& d, const GadgetScheme& scheme);

inline constexpr std::size_t max_faithful_vertices = 4;

struct FaithfulResult {
    std::size_t digraph_homs = 0;
    std::size_t symmetric_homs = 0;
    bool equal = false;
};

/// Counts homomorphisms on both sides. Throws BoundError when either input
/// has more than max_faithful_vertices vertices.
FaithfulResult verify_faithful(const Digraph& d1, const Digraph& d2, const GadgetScheme& scheme);

struct FaithfulMismatch {
    Digraph first;
    Digraph second;
    FaithfulResult counts;
};

struct FaithfulSweepReport {
    std::size_t pairs_checked = 0;
    std::size_t pairs_equal = 0;
    std::vector<FaithfulMismatch> mismatches;
    bool pass = true;
};

/// All ordered pairs of the 64 loopless digraphs on 3 labelled vertices.
FaithfulSweepReport faithful_sweep3(const GadgetScheme& scheme, unsigned workers = 1);

/// `count` pairs of uniformly random loopless digraphs on `n` vertices.
FaithfulSweepReport faithful_random(const GadgetScheme& scheme, std::size_t n, std::size_t count, std::uint64_t seed,
                                    unsigned workers = 1);

}  // namespace rigidkit
