#include "rigidkit/graph.hpp"

#include "rigidkit/errors.hpp"

#include <algorithm>
#include <numeric>

namespace rigidkit {

namespace {

void build_csr(std::size_t n, std::span<const Edge> edges, bool outgoing,
               std::vector<std::size_t>& offsets, std::vector<Vertex>& targets) {
    offsets.assign(n + 1, 0);
    for (auto [u, v] : edges)
        ++offsets[(outgoing ? u : v) + 1];
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    targets.resize(edges.size());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (auto [u, v] : edges) {
        if (outgoing)
            targets[cursor[u]++] = v;
        else
            targets[cursor[v]++] = u;
    }
    // Edges are sorted by (u, v), so out-lists are already ascending; in-lists
    // are filled in ascending u as well.
}

}  // namespace

Digraph::Digraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (auto [u, v] : edges_) {
        if (u >= n_ || v >= n_)
            throw OutOfRangeError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has an endpoint outside [0," + std::to_string(n_) + ")");
        if (u == v)
            throw LoopError("loop (" + std::to_string(u) + "," + std::to_string(v) + ") rejected");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    build_csr(n_, edges_, true, out_offsets_, out_);
    build_csr(n_, edges_, false, in_offsets_, in_);
}

bool Digraph::has_edge(Vertex u, Vertex v) const noexcept {
    if (u >= n_ || v >= n_)
        return false;
    auto out = out_neighbours(u);
    return std::binary_search(out.begin(), out.end(), v);
}

bool Digraph::is_symmetric() const noexcept {
    return std::all_of(edges_.begin(), edges_.end(), [this](const Edge& e) { return has_edge(e.second, e.first); });
}

Digraph make_digraph(std::size_t n, std::vector<Edge> edges) { return Digraph(n, std::move(edges)); }

UGraph::UGraph(Digraph g) : graph_(std::move(g)) {
    if (!graph_.is_symmetric())
        throw ArityError("relation is not symmetric");
}

UGraph UGraph::from_pairs(std::size_t n, const std::vector<Edge>& pairs) {
    std::vector<Edge> arcs;
    arcs.reserve(2 * pairs.size());
    for (auto [u, v] : pairs) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return UGraph(Digraph(n, std::move(arcs)));
}

std::vector<Edge> UGraph::pairs() const {
    std::vector<Edge> result;
    for (auto [u, v] : graph_.edges())
        if (u < v)
            result.emplace_back(u, v);
    return result;
}

UGraph symmetric_closure(const Digraph& g) {
    std::vector<Edge> arcs(g.edges().begin(), g.edges().end());
    for (auto [u, v] : g.edges())
        arcs.emplace_back(v, u);
    return UGraph(Digraph(g.size(), std::move(arcs)));
}

VertexMap VertexMap::identity(std::size_t n) {
    VertexMap m;
    m.domain.resize(n);
    std::iota(m.domain.begin(), m.domain.end(), Vertex{0});
    m.image = m.domain;
    return m;
}

VertexMap VertexMap::from_image(std::vector<Vertex> image) {
    VertexMap m;
    m.domain.resize(image.size());
    std::iota(m.domain.begin(), m.domain.end(), Vertex{0});
    m.image = std::move(image);
    return m;
}

bool VertexMap::is_identity() const noexcept { return domain == image; }

Vertex VertexMap::at(Vertex v) const {
    auto it = std::lower_bound(domain.begin(), domain.end(), v);
    if (it == domain.end() || *it != v)
        throw OutOfRangeError("vertex " + std::to_string(v) + " is not in the map's domain");
    return image[static_cast<std::size_t>(it - domain.begin())];
}

Substructure induced_substructure(const Digraph& g, std::span<const Vertex> subset) {
    std::vector<Vertex> labels(subset.begin(), subset.end());
    for (Vertex v : labels)
        if (v >= g.size())
            throw OutOfRangeError("vertex " + std::to_string(v) + " outside [0," + std::to_string(g.size()) + ")");
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    std::vector<Edge> edges;
    for (std::size_t a = 0; a < labels.size(); ++a)
        for (Vertex w : g.out_neighbours(labels[a])) {
            auto it = std::lower_bound(labels.begin(), labels.end(), w);
            if (it != labels.end() && *it == w)
                edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(it - labels.begin()));
        }
    return {Digraph(labels.size(), std::move(edges)), std::move(labels)};
}

std::vector<std::vector<Vertex>> weak_components(const Digraph& g) {
    std::vector<int> component(g.size(), -1);
    std::vector<std::vector<Vertex>> result;
    std::vector<Vertex> stack;
    for (Vertex start = 0; start < g.size(); ++start) {
        if (component[start] >= 0)
            continue;
        auto id = static_cast<int>(result.size());
        result.emplace_back();
        component[start] = id;
        stack.push_back(start);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            result.back().push_back(v);
            for (auto nbrs : {g.out_neighbours(v), g.in_neighbours(v)})
                for (Vertex w : nbrs)
                    if (component[w] < 0) {
                        component[w] = id;
                        stack.push_back(w);
                    }
        }
        std::sort(result.back().begin(), result.back().end());
    }
    return result;
}

bool is_weakly_connected(const Digraph& g) { return g.size() > 0 && weak_components(g).size() == 1; }

}  // namespace rigidkit
