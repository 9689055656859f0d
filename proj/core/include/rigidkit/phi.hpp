#pragma once

#include "rigidkit/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace rigidkit {

using Bits = std::vector<bool>;

/// Unordered non-adjacent pairs {a, b}, a < b, of a symmetric base, sorted.
/// Completions of the base are indexed by one bit per pair in this order.
struct NonEdgeSet {
    std::vector<Edge> pairs;

    std::size_t size() const noexcept { return pairs.size(); }
};

NonEdgeSet compute_T(const UGraph& base);

/// A completion of `base`: every base edge kept, each non-adjacent pair
/// oriented by its bit (false: (min, max); true: (max, min)).
struct PhiMember {
    Bits bits;
    Digraph realized;
};

/// Throws ArityError when bits.size() differs from the number of non-edges.
PhiMember build_phi_member(const UGraph& base, const Bits& bits);

/// Result of checking the three membership clauses on an arbitrary relation.
struct PhiCheck {
    bool member = true;
    /// 1: a base edge is missing; 2: some distinct pair is unrelated;
    /// 3: a pair is related both ways without being a base edge.
    std::optional<int> violated_clause;
    std::optional<Edge> offending_pair;
};

/// Direct enumeration over all ordered pairs. Throws ArityError on a size
/// mismatch.
PhiCheck check_phi_conditions(const UGraph& base, const Digraph& s);
bool is_phi_member(const UGraph& base, const Digraph& s);

/// Exact 2^|T|; throws BoundError beyond 63 pairs.
std::uint64_t phi_count(const UGraph& base);

inline constexpr std::size_t max_enumerable_bits = 24;

/// Visits every member in bit-vector order (bit 0 least significant).
/// Throws BoundError above max_enumerable_bits pairs.
void for_each_phi_member(const UGraph& base, const std::function<void(const PhiMember&)>& visit);

/// One direction per undirected base edge, indexed by UGraph::pairs() order
/// with the same bit convention as completions.
Digraph orientation(const UGraph& base, const Bits& bits);

void for_each_orientation(const UGraph& base, const std::function<void(const Bits&, const Digraph&)>& visit);

Bits random_bits(std::size_t length, std::mt19937_64& rng);

/// `count` pairwise-distinct uniform bit vectors, in draw order. Throws
/// BoundError if fewer than `count` vectors exist.
std::vector<Bits> sample_distinct_bits(std::size_t length, std::size_t count, std::mt19937_64& rng);

std::string bits_to_string(const Bits& bits);
/// Throws ParseError (line 1) on characters other than '0'/'1'.
Bits bits_from_string(std::string_view text);

/// Pairwise check over sampled pairs of distinct completions.
struct PhiPairResult {
    Bits first;
    Bits second;
    std::size_t hom_count = 0;
    /// The identity S1 -> S2 is a homomorphism (never, for distinct members).
    bool identity_is_hom = false;
    /// Every homomorphism found was also an endomorphism of the base.
    bool base_endomorphisms = true;
};

struct PhiSweepReport {
    std::uint64_t seed = 0;
    std::size_t non_edges = 0;
    std::vector<PhiPairResult> pairs;
    std::size_t total_homs = 0;
    bool hom_free = true;
    bool identity_never_hom = true;
    bool homs_are_base_endomorphisms = true;
};

PhiSweepReport phi_sweep(const UGraph& base, std::size_t samples, std::uint64_t seed, unsigned workers = 1);

/// Same for orientations of the base (each undirected edge given one direction).
PhiSweepReport orientation_sweep(const UGraph& base, std::size_t samples, std::uint64_t seed, unsigned workers = 1);

}  // namespace rigidkit
