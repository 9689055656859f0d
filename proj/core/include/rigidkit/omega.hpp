#pragma once

#include "rigidkit/graph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace rigidkit {

/// The successor relation on {0, ..., M-1} plus the chord (0, 2).
struct OmegaPrefix {
    std::size_t bound = 0;
    Digraph graph;
};

OmegaPrefix omega_prefix(std::size_t bound);

/// A(i) = {0, ..., i+2}.
std::vector<Vertex> omega_witness(Vertex i);

struct OmegaCertificate {
    Vertex i = 0;
    std::size_t bound = 0;
    std::vector<Vertex> witness;
    std::size_t hom_count = 0;
    bool adequate = false;
    std::optional<VertexMap> counterexample;
};

/// Enumerates every homomorphism from the relation induced on A(i) into the
/// prefix of size `bound`; adequate iff the inclusion is the only one.
/// Throws BoundError when bound < i + 3.
OmegaCertificate verify_omega(Vertex i, std::size_t bound);

inline constexpr std::size_t default_omega_slack = 10;

struct OmegaSweepEntry {
    Vertex i = 0;
    /// verdicts[s] is the verdict at bound i + 3 + s.
    std::vector<bool> verdicts;
    std::vector<std::size_t> hom_counts;
    bool stable = true;
    /// Verdict at the largest bound, i + 3 + slack.
    bool adequate = false;
};

struct OmegaSweepReport {
    std::size_t i_max = 0;
    std::size_t slack = default_omega_slack;
    std::vector<OmegaSweepEntry> entries;
    bool pass = true;
};

/// Every i in [0, i_max] at every bound in [i + 3, i + 3 + slack].
OmegaSweepReport omega_sweep(std::size_t i_max, std::size_t slack = default_omega_slack, unsigned workers = 1);

}  // namespace rigidkit
