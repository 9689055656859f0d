#include "rigidkit/errors.hpp"
#include "rigidkit/json.hpp"

namespace rigidkit {

namespace {

Json optional_map(const std::optional<VertexMap>& m) { return m ? to_json(*m) : Json(nullptr); }

}  // namespace

Json to_json(const Digraph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return {{"n", g.size()}, {"edges", std::move(edges)}};
}

Digraph digraph_from_json(const Json& j) {
    try {
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges"))
            edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
        return Digraph(j.at("n").get<std::size_t>(), std::move(edges));
    } catch (const Json::exception& e) {
        throw ParseError(1, std::string("malformed digraph JSON: ") + e.what());
    }
}

Json to_json(const VertexMap& m) { return {{"domain", m.domain}, {"image", m.image}}; }

Json to_json(const RigidityCertificate& c) {
    return {{"verdict", c.rigid ? "rigid" : "not-rigid"},
            {"counterexample", optional_map(c.counterexample)},
            {"maps_examined", c.maps_examined}};
}

Json to_json(const WitnessReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json entry = {{"x", e.x}, {"witness", e.witness}, {"status", e.pass ? "pass" : "fail"}};
        if (e.y)
            entry["y"] = *e.y;
        if (e.counterexample)
            entry["counterexample"] = to_json(*e.counterexample);
        entries.push_back(std::move(entry));
    }
    return {{"mode", r.mode == WitnessMode::diamond ? "diamond" : "star"},
            {"k", r.bound},
            {"strict", r.strict},
            {"witnesses", r.witnesses},
            {"entries", std::move(entries)},
            {"status", r.pass ? "pass" : "fail"}};
}

Json to_json(const CollisionResult& r) {
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses)
        witnesses.push_back({{"set", w.set}, {"local_relation", to_json(w.relation)}});
    Json collision = nullptr;
    if (r.collision)
        collision = {{"first", r.collision->first},
                     {"second", r.collision->second},
                     {"map", to_json(r.collision->map)},
                     {"verified", r.collision->verified}};
    return {{"witnesses", std::move(witnesses)}, {"collision", std::move(collision)}};
}

Json to_json(const OmegaCertificate& c) {
    return {{"i", c.i},
            {"M", c.bound},
            {"witness", c.witness},
            {"hom_count", c.hom_count},
            {"adequate", c.adequate},
            {"counterexample", optional_map(c.counterexample)}};
}

Json to_json(const OmegaSweepReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"i", e.i},
                           {"verdicts", e.verdicts},
                           {"hom_counts", e.hom_counts},
                           {"stable", e.stable},
                           {"adequate", e.adequate}});
    return {{"i_max", r.i_max}, {"slack", r.slack}, {"entries", std::move(entries)}, {"status", r.pass ? "pass" : "fail"}};
}

Json to_json(const PhiSweepReport& r) {
    Json pairs = Json::array();
    for (const auto& p : r.pairs)
        pairs.push_back({{"first", bits_to_string(p.first)},
                         {"second", bits_to_string(p.second)},
                         {"hom_count", p.hom_count},
                         {"identity_is_hom", p.identity_is_hom},
                         {"base_endomorphisms", p.base_endomorphisms}});
    return {{"seed", r.seed},
            {"bits", r.non_edges},
            {"pairs", std::move(pairs)},
            {"total_homs", r.total_homs},
            {"hom_free", r.hom_free},
            {"identity_never_hom", r.identity_never_hom},
            {"homs_are_base_endomorphisms", r.homs_are_base_endomorphisms}};
}

Json to_json(const SearchReport& r) {
    Json found = Json::array();
    for (const auto& g : r.rigid_found)
        found.push_back(to_json(g));
    return {{"n", r.n},
            {"symmetric", r.symmetric},
            {"mode", r.mode == SearchMode::exhaustive ? "exhaustive" : "random"},
            {"seed", r.seed},
            {"graphs_examined", r.graphs_examined},
            {"rigid_count", r.rigid_found.size()},
            {"rigid_found", std::move(found)},
            {"exhausted", r.exhausted}};
}

Json to_json(const FaithfulResult& r) {
    return {{"digraph_homs", r.digraph_homs}, {"symmetric_homs", r.symmetric_homs}, {"equal", r.equal}};
}

Json to_json(const FaithfulSweepReport& r) {
    Json mismatches = Json::array();
    for (const auto& m : r.mismatches)
        mismatches.push_back({{"first", to_json(m.first)}, {"second", to_json(m.second)}, {"counts", to_json(m.counts)}});
    return {{"pairs_checked", r.pairs_checked},
            {"pairs_equal", r.pairs_equal},
            {"mismatches", std::move(mismatches)},
            {"status", r.pass ? "pass" : "fail"}};
}

}  // namespace rigidkit
