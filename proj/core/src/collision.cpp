#include "rigidkit/collision.hpp"

#include "rigidkit/errors.hpp"
#include "rigidkit/hom.hpp"

#include <algorithm>
#include <map>

namespace rigidkit {

CollisionResult find_witness_collision(const Digraph& g, const std::vector<std::vector<Vertex>>& witnesses) {
    CollisionResult result;
    std::map<std::vector<Vertex>, std::size_t> seen_sets;
    std::map<std::pair<std::size_t, std::vector<Edge>>, std::size_t> by_relation;

    for (const auto& input : witnesses) {
        if (input.empty())
            throw WitnessError("witness sets must be nonempty");
        auto sub = induced_substructure(g, input);
        if (!seen_sets.try_emplace(sub.labels, result.witnesses.size()).second)
            continue;
        auto index = result.witnesses.size();
        result.witnesses.push_back({sub.labels, sub.graph});

        std::pair key{sub.graph.size(), std::vector<Edge>(sub.graph.edges().begin(), sub.graph.edges().end())};
        auto [it, inserted] = by_relation.try_emplace(std::move(key), index);
        if (inserted || result.collision)
            continue;

        const auto& first = result.witnesses[it->second];
        const auto& second = result.witnesses[index];
        Collision c{it->second, index, VertexMap{first.set, second.set}, false};
        // Identical local relations make the composed map an isomorphism;
        // check it anyway against the ambient relation.
        auto forward = induced_substructure(g, first.set);
        auto backward = induced_substructure(g, second.set);
        std::vector<Vertex> positions(first.set.size());
        for (std::size_t i = 0; i < positions.size(); ++i)
            positions[i] = static_cast<Vertex>(i);
        c.verified = first.set != second.set && is_homomorphism(forward.graph, backward.graph, positions) &&
                     is_homomorphism(backward.graph, forward.graph, positions) &&
                     forward.graph.edge_count() == backward.graph.edge_count();
        result.collision = std::move(c);
    }
    return result;
}

}  // namespace rigidkit
