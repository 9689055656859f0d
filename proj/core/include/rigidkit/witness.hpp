#pragma once

#include "rigidkit/graph.hpp"
#include "rigidkit/union.hpp"

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace rigidkit {

/// A relation plus a partition into blocks, used by component witnesses.
/// Searches are confined to the weak components ("parts") of the relation:
/// a connected witness can only land inside one part.
class Structure {
  public:
    /// Blocks are the weak components.
    explicit Structure(Digraph g);
    /// Blocks are the union's components.
    explicit Structure(const UnionStructure& u);

    const Digraph& graph() const noexcept { return graph_; }
    std::size_t size() const noexcept { return graph_.size(); }
    const std::vector<std::vector<Vertex>>& blocks() const noexcept { return blocks_; }
    std::size_t block_of(Vertex v) const { return block_of_.at(v); }

    const std::vector<std::vector<Vertex>>& parts() const noexcept { return parts_; }
    std::size_t part_of(Vertex v) const { return part_of_.at(v); }
    /// Induced relation on part p, labelled as in parts()[p].
    const Digraph& part_graph(std::size_t p) const { return part_graphs_.at(p); }

  private:
    void index();

    Digraph graph_;
    std::vector<std::vector<Vertex>> blocks_;
    std::vector<std::size_t> block_of_;
    std::vector<std::vector<Vertex>> parts_;
    std::vector<std::size_t> part_of_;
    std::vector<Digraph> part_graphs_;
};

/// Per-vertex witness sets A(x), stored as distinct sets plus an index per
/// vertex.
class WitnessProvider {
  public:
    /// A(x) = the block containing x.
    static WitnessProvider component(const Structure& s);
    /// A(x) = every vertex.
    static WitnessProvider full(std::size_t n);
    /// sets[x] is A(x); must have one entry per vertex. Sets are sorted and
    /// deduplicated. Throws ArityError on a count mismatch.
    static WitnessProvider explicit_sets(std::size_t n, std::vector<std::vector<Vertex>> sets);

    std::size_t size() const noexcept { return of_vertex_.size(); }
    const std::vector<Vertex>& operator()(Vertex x) const { return sets_.at(of_vertex_.at(x)); }
    const std::vector<std::vector<Vertex>>& distinct_sets() const noexcept { return sets_; }
    std::size_t set_index(Vertex x) const { return of_vertex_.at(x); }

  private:
    std::vector<std::vector<Vertex>> sets_;
    std::vector<std::size_t> of_vertex_;
};

/// A(x, y) for an ordered pair x != y.
using PairWitness = std::function<std::vector<Vertex>(Vertex x, Vertex y)>;

enum class WitnessMode { diamond, star };

struct WitnessOptions {
    /// Witness sets may have at most `bound` vertices, or fewer than `bound`
    /// when strict.
    std::size_t bound = std::numeric_limits<std::size_t>::max();
    bool strict = false;
    unsigned workers = 1;
    /// Search one part at a time when a witness is weakly connected.
    bool confine = true;
};

struct WitnessEntry {
    Vertex x = 0;
    /// Only for star entries.
    std::optional<Vertex> y;
    /// Index into WitnessReport::witnesses.
    std::size_t witness = 0;
    bool pass = true;
    /// Domain is the witness set (original labels), image in the structure.
    std::optional<VertexMap> counterexample;
};

struct WitnessReport {
    WitnessMode mode = WitnessMode::diamond;
    std::size_t bound = 0;
    bool strict = false;
    std::vector<std::vector<Vertex>> witnesses;
    std::vector<WitnessEntry> entries;
    bool pass = true;
};

/// For every x: the only homomorphism from the substructure induced on A(x)
/// into the whole structure is the inclusion. Throws WitnessError when
/// x is not in A(x) or A(x) violates the bound.
WitnessReport verify_diamond(const Structure& s, const WitnessProvider& witnesses, const WitnessOptions& options);

/// For every ordered x != y: no homomorphism from the substructure induced on
/// A(x, y) into the whole structure sends x to y.
WitnessReport verify_star(const Structure& s, const PairWitness& witnesses, const WitnessOptions& options);

/// Star condition with A(x, y) := A(x).
WitnessReport verify_star(const Structure& s, const WitnessProvider& witnesses, const WitnessOptions& options);

/// True when every two distinct vertices are related in at least one direction.
bool is_tournament_complete(const Digraph& g);

}  // namespace rigidkit
