#include "rigidkit/union.hpp"

#include "rigidkit/errors.hpp"

namespace rigidkit {

UnionStructure::UnionStructure(std::vector<Digraph> components) : components_(std::move(components)) {
    if (components_.empty())
        throw ArityError("a union needs at least one component");
    n_ = components_.front().size();
    if (n_ == 0)
        throw ArityError("components must have at least one vertex");
    for (std::size_t c = 0; c < components_.size(); ++c)
        if (components_[c].size() != n_)
            throw ArityError("component " + std::to_string(c) + " has " + std::to_string(components_[c].size()) +
                             " vertices, expected " + std::to_string(n_));

    std::vector<Edge> edges;
    for (std::size_t c = 0; c < components_.size(); ++c)
        for (auto [u, v] : components_[c].edges())
            edges.emplace_back(global(c, u), global(c, v));
    flat_ = Digraph(size(), std::move(edges));
}

bool UnionStructure::has_edge(Vertex a, Vertex b) const noexcept {
    if (a >= size() || b >= size())
        return false;
    auto [ca, va] = address(a);
    auto [cb, vb] = address(b);
    return ca == cb && components_[ca].has_edge(va, vb);
}

std::vector<std::vector<Vertex>> UnionStructure::blocks() const {
    std::vector<std::vector<Vertex>> result(components_.size());
    for (std::size_t c = 0; c < components_.size(); ++c)
        for (Vertex v = 0; v < n_; ++v)
            result[c].push_back(global(c, v));
    return result;
}

UnionStructure build_union(std::vector<Digraph> components) { return UnionStructure(std::move(components)); }

}  // namespace rigidkit
