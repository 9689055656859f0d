#include "rigidkit/witness.hpp"

#include "rigidkit/errors.hpp"
#include "rigidkit/hom.hpp"
#include "rigidkit/parallel.hpp"

#include <algorithm>
#include <map>

namespace rigidkit {

namespace {

std::vector<Vertex> normalized(std::vector<Vertex> set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

std::size_t position(std::span<const Vertex> sorted, Vertex v) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    if (it == sorted.end() || *it != v)
        return sorted.size();
    return static_cast<std::size_t>(it - sorted.begin());
}

struct Prepared {
    Digraph sub;
    bool connected = false;
};

Prepared prepare(const Structure& s, const std::vector<Vertex>& set) {
    auto sub = induced_substructure(s.graph(), set);
    bool connected = is_weakly_connected(sub.graph);
    return {std::move(sub.graph), connected};
}

void validate(const std::vector<Vertex>& set, Vertex x, std::size_t n, const WitnessOptions& options) {
    if (!set.empty() && set.back() >= n)
        throw OutOfRangeError("witness vertex " + std::to_string(set.back()) + " outside [0," + std::to_string(n) + ")");
    if (position(set, x) == set.size())
        throw WitnessError("witness for vertex " + std::to_string(x) + " does not contain it");
    bool fits = options.strict ? set.size() < options.bound : set.size() <= options.bound;
    if (!fits)
        throw WitnessError("witness for vertex " + std::to_string(x) + " has " + std::to_string(set.size()) +
                           " vertices; bound is " + (options.strict ? "< " : "<= ") + std::to_string(options.bound));
}

// Visits homomorphisms from the witness into the structure, images in global
// labels. A connected witness can only land inside one part, so with
// confinement the parts are searched one at a time (only the pinned vertex's
// part when pinned).
void search_witness(const Structure& s, const Prepared& prepared, bool confine, std::optional<Pin> global_pin,
                    const std::function<bool(std::span<const Vertex>)>& visit) {
    std::vector<Vertex> global;
    if (!(confine && prepared.connected)) {
        std::vector<Pin> pins;
        if (global_pin)
            pins.push_back(*global_pin);
        for_each_hom(prepared.sub, s.graph(), pins, visit);
        return;
    }

    auto search_part = [&](std::size_t b, std::optional<Pin> local_pin) {
        const auto& labels = s.parts()[b];
        std::vector<Pin> pins;
        if (local_pin)
            pins.push_back(*local_pin);
        bool keep_going = true;
        for_each_hom(prepared.sub, s.part_graph(b), pins, [&](std::span<const Vertex> image) {
            global.resize(image.size());
            for (std::size_t i = 0; i < image.size(); ++i)
                global[i] = labels[image[i]];
            keep_going = visit(global);
            return keep_going;
        });
        return keep_going;
    };

    if (global_pin) {
        auto b = s.part_of(global_pin->target);
        auto local = static_cast<Vertex>(position(s.parts()[b], global_pin->target));
        search_part(b, Pin{global_pin->source, local});
        return;
    }
    for (std::size_t b = 0; b < s.parts().size(); ++b)
        if (!search_part(b, std::nullopt))
            return;
}

VertexMap witness_map(const std::vector<Vertex>& set, std::span<const Vertex> image) {
    return VertexMap{set, {image.begin(), image.end()}};
}

}  // namespace

Structure::Structure(Digraph g) : graph_(std::move(g)) {
    blocks_ = weak_components(graph_);
    index();
}

Structure::Structure(const UnionStructure& u) : graph_(u.flat()), blocks_(u.blocks()) { index(); }

void Structure::index() {
    block_of_.assign(graph_.size(), 0);
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        for (Vertex v : blocks_[b])
            block_of_[v] = b;
    parts_ = weak_components(graph_);
    part_of_.assign(graph_.size(), 0);
    for (std::size_t p = 0; p < parts_.size(); ++p) {
        for (Vertex v : parts_[p])
            part_of_[v] = p;
        part_graphs_.push_back(induced_substructure(graph_, parts_[p]).graph);
    }
}

WitnessProvider WitnessProvider::component(const Structure& s) {
    WitnessProvider p;
    p.sets_ = s.blocks();
    p.of_vertex_.resize(s.size());
    for (Vertex v = 0; v < s.size(); ++v)
        p.of_vertex_[v] = s.block_of(v);
    return p;
}

WitnessProvider WitnessProvider::full(std::size_t n) {
    WitnessProvider p;
    p.sets_.emplace_back(n);
    for (Vertex v = 0; v < n; ++v)
        p.sets_[0][v] = v;
    p.of_vertex_.assign(n, 0);
    return p;
}

WitnessProvider WitnessProvider::explicit_sets(std::size_t n, std::vector<std::vector<Vertex>> sets) {
    if (sets.size() != n)
        throw ArityError("expected one witness set per vertex (" + std::to_string(n) + "), got " +
                         std::to_string(sets.size()));
    WitnessProvider p;
    std::map<std::vector<Vertex>, std::size_t> interned;
    for (auto& set : sets) {
        auto key = normalized(std::move(set));
        auto [it, inserted] = interned.try_emplace(key, p.sets_.size());
        if (inserted)
            p.sets_.push_back(key);
        p.of_vertex_.push_back(it->second);
    }
    return p;
}

bool is_tournament_complete(const Digraph& g) {
    for (Vertex a = 0; a < g.size(); ++a)
        for (Vertex b = a + 1; b < g.size(); ++b)
            if (!g.related(a, b))
                return false;
    return true;
}

WitnessReport verify_diamond(const Structure& s, const WitnessProvider& witnesses, const WitnessOptions& options) {
    if (witnesses.size() != s.size())
        throw ArityError("witness provider covers " + std::to_string(witnesses.size()) + " vertices, structure has " +
                         std::to_string(s.size()));
    WitnessReport report;
    report.mode = WitnessMode::diamond;
    report.bound = options.bound;
    report.strict = options.strict;
    report.witnesses = witnesses.distinct_sets();

    for (Vertex x = 0; x < s.size(); ++x)
        validate(witnesses(x), x, s.size(), options);

    // The condition depends only on the set, not on x, so each distinct set
    // is searched once.
    std::vector<std::optional<VertexMap>> outcome(report.witnesses.size());
    parallel_for(report.witnesses.size(), options.workers, [&](std::size_t w) {
        const auto& set = report.witnesses[w];
        auto prepared = prepare(s, set);
        search_witness(s, prepared, options.confine, std::nullopt, [&](std::span<const Vertex> image) {
            if (std::equal(image.begin(), image.end(), set.begin(), set.end()))
                return true;
            outcome[w] = witness_map(set, image);
            return false;
        });
    });

    for (Vertex x = 0; x < s.size(); ++x) {
        auto w = witnesses.set_index(x);
        WitnessEntry entry{x, std::nullopt, w, !outcome[w].has_value(), outcome[w]};
        report.pass = report.pass && entry.pass;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

WitnessReport verify_star(const Structure& s, const PairWitness& witnesses, const WitnessOptions& options) {
    WitnessReport report;
    report.mode = WitnessMode::star;
    report.bound = options.bound;
    report.strict = options.strict;

    std::map<std::vector<Vertex>, std::size_t> interned;
    for (Vertex x = 0; x < s.size(); ++x)
        for (Vertex y = 0; y < s.size(); ++y) {
            if (x == y)
                continue;
            auto set = normalized(witnesses(x, y));
            validate(set, x, s.size(), options);
            auto [it, inserted] = interned.try_emplace(set, report.witnesses.size());
            if (inserted)
                report.witnesses.push_back(std::move(set));
            report.entries.push_back(WitnessEntry{x, y, it->second, true, std::nullopt});
        }

    std::vector<Prepared> prepared(report.witnesses.size());
    parallel_for(prepared.size(), options.workers,
                 [&](std::size_t w) { prepared[w] = prepare(s, report.witnesses[w]); });

    parallel_for(report.entries.size(), options.workers, [&](std::size_t i) {
        auto& entry = report.entries[i];
        const auto& set = report.witnesses[entry.witness];
        Pin pin{static_cast<Vertex>(position(set, entry.x)), *entry.y};
        search_witness(s, prepared[entry.witness], options.confine, pin, [&](std::span<const Vertex> image) {
            entry.pass = false;
            entry.counterexample = witness_map(set, image);
            return false;
        });
    });

    for (const auto& entry : report.entries)
        report.pass = report.pass && entry.pass;
    return report;
}

WitnessReport verify_star(const Structure& s, const WitnessProvider& witnesses, const WitnessOptions& options) {
    if (witnesses.size() != s.size())
        throw ArityError("witness provider covers " + std::to_string(witnesses.size()) + " vertices, structure has " +
                         std::to_string(s.size()));
    return verify_star(s, PairWitness([&](Vertex x, Vertex) { return witnesses(x); }), options);
}

}  // namespace rigidkit
