#pragma once

#include "rigidkit/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace rigidkit {

/// Edges (i, j) for all i < j.
Digraph transitive_tournament(std::size_t n);

enum class SearchMode { exhaustive, random };

inline constexpr std::size_t max_exhaustive_symmetric = 7;
inline constexpr std::size_t max_exhaustive_directed = 5;

/// Edge probabilities cycled through in random mode, by sample index.
inline constexpr double random_densities[] = {0.3, 0.4, 0.5, 0.6};

struct SearchOptions {
    std::size_t n = 0;
    bool symmetric = true;
    SearchMode mode = SearchMode::exhaustive;
    /// Random mode: number of samples.
    std::size_t budget = 0;
    std::uint64_t seed = 0;
    /// Random mode: stop after this many finds.
    std::optional<std::size_t> max_finds;
    /// Exhaustive mode: keep only graphs whose adjacency bits are minimal
    /// over all vertex permutations.
    bool reject_isomorphs = false;
    unsigned workers = 1;
};

struct SearchReport {
    std::size_t n = 0;
    bool symmetric = true;
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t seed = 0;
    std::size_t graphs_examined = 0;
    std::vector<Digraph> rigid_found;
    bool exhausted = false;
};

/// Exhaustive mode walks every loopless labelled (di)graph on n vertices;
/// random mode draws `budget` edge sets, sample j at density
/// random_densities[j % 4] from a generator seeded by (seed, j).
/// Throws BoundError for exhaustive requests above the size caps and
/// ArityError for n = 0.
SearchReport search_rigid(const SearchOptions& options);

/// The graph drawn for random sample `index`.
Digraph random_search_sample(std::size_t n, bool symmetric, std::uint64_t seed, std::uint64_t index);

/// The graph with the given adjacency bits over the canonical pair order
/// (pairs a < b for symmetric graphs, ordered pairs a != b otherwise).
Digraph graph_from_mask(std::size_t n, bool symmetric, std::uint64_t mask);

}  // namespace rigidkit
