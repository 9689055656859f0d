#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rigidkit {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// A finite irreflexive binary relation on [0, n).
///
/// Edges are stored once, sorted lexicographically, with CSR out- and
/// in-adjacency built alongside. Immutable after construction.
class Digraph {
  public:
    Digraph() = default;

    /// Validates and deduplicates. Throws OutOfRangeError for an endpoint
    /// >= n and LoopError for (v, v).
    Digraph(std::size_t n, std::vector<Edge> edges);

    std::size_t size() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    bool has_edge(Vertex u, Vertex v) const noexcept;
    bool related(Vertex u, Vertex v) const noexcept { return has_edge(u, v) || has_edge(v, u); }

    std::span<const Vertex> out_neighbours(Vertex v) const noexcept {
        return {out_.data() + out_offsets_[v], out_.data() + out_offsets_[v + 1]};
    }
    std::span<const Vertex> in_neighbours(Vertex v) const noexcept {
        return {in_.data() + in_offsets_[v], in_.data() + in_offsets_[v + 1]};
    }
    std::size_t out_degree(Vertex v) const noexcept { return out_offsets_[v + 1] - out_offsets_[v]; }
    std::size_t in_degree(Vertex v) const noexcept { return in_offsets_[v + 1] - in_offsets_[v]; }

    bool is_symmetric() const noexcept;

    friend bool operator==(const Digraph& a, const Digraph& b) noexcept {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

  private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> out_offsets_{0};
    std::vector<Vertex> out_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<Vertex> in_;
};

Digraph make_digraph(std::size_t n, std::vector<Edge> edges);

/// A symmetric Digraph: (u, v) present iff (v, u) present.
class UGraph {
  public:
    UGraph() = default;

    /// Throws ArityError if g is not symmetric.
    explicit UGraph(Digraph g);

    /// Builds from unordered pairs; each {u, v} becomes both arcs.
    static UGraph from_pairs(std::size_t n, const std::vector<Edge>& pairs);

    const Digraph& digraph() const noexcept { return graph_; }
    std::size_t size() const noexcept { return graph_.size(); }
    bool adjacent(Vertex u, Vertex v) const noexcept { return graph_.has_edge(u, v); }

    /// Unordered edges {u, v} with u < v, sorted.
    std::vector<Edge> pairs() const;

    friend bool operator==(const UGraph&, const UGraph&) = default;

  private:
    Digraph graph_;
};

UGraph symmetric_closure(const Digraph& g);

/// A total map from a sorted domain of source vertices into a target.
struct VertexMap {
    std::vector<Vertex> domain;
    std::vector<Vertex> image;

    static VertexMap identity(std::size_t n);
    static VertexMap from_image(std::vector<Vertex> image);

    std::size_t size() const noexcept { return domain.size(); }
    bool is_identity() const noexcept;
    /// Image of v; throws OutOfRangeError if v is not in the domain.
    Vertex at(Vertex v) const;

    friend bool operator==(const VertexMap&, const VertexMap&) = default;
    friend auto operator<=>(const VertexMap&, const VertexMap&) = default;
};

/// Induced substructure on `subset`, relabelled to [0, |subset|) in ascending
/// original order. The returned label map sends new labels to old ones.
struct Substructure {
    Digraph graph;
    std::vector<Vertex> labels;
};

Substructure induced_substructure(const Digraph& g, std::span<const Vertex> subset);

/// Weakly connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> weak_components(const Digraph& g);

bool is_weakly_connected(const Digraph& g);

// Text formats.

/// "n m" header then m lines "u v", edges sorted.
std::string encode(const Digraph& g);

/// Parses the edge-list format. Blank lines and lines starting with '#'
/// are ignored. Throws ParseError carrying the offending line number.
Digraph decode(std::string_view text);

std::string to_dot(const Digraph& g, std::string_view name = "G");

}  // namespace rigidkit
