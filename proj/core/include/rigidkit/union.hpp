#pragma once

#include "rigidkit/graph.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace rigidkit {

/// Disjoint union of m same-size components. Vertex (c, v) has global index
/// c * n + v; two global vertices are related iff they share a component and
/// are related there.
class UnionStructure {
  public:
    /// Throws ArityError for an empty list, n = 0, or mixed sizes.
    explicit UnionStructure(std::vector<Digraph> components);

    std::size_t component_size() const noexcept { return n_; }
    std::size_t component_count() const noexcept { return components_.size(); }
    std::size_t size() const noexcept { return n_ * components_.size(); }
    const std::vector<Digraph>& components() const noexcept { return components_; }
    const Digraph& component(std::size_t c) const { return components_.at(c); }

    Vertex global(std::size_t c, Vertex v) const noexcept { return static_cast<Vertex>(c * n_ + v); }
    std::pair<std::size_t, Vertex> address(Vertex global) const noexcept {
        return {global / n_, static_cast<Vertex>(global % n_)};
    }

    bool has_edge(Vertex a, Vertex b) const noexcept;

    /// The flat relation on m * n vertices.
    const Digraph& flat() const noexcept { return flat_; }

    /// Global vertex ranges of each component.
    std::vector<std::vector<Vertex>> blocks() const;

  private:
    std::size_t n_ = 0;
    std::vector<Digraph> components_;
    Digraph flat_;
};

UnionStructure build_union(std::vector<Digraph> components);

}  // namespace rigidkit
