#include "rigidkit/phi.hpp"

#include "rigidkit/errors.hpp"
#include "rigidkit/hom.hpp"
#include "rigidkit/parallel.hpp"

#include <set>

namespace rigidkit {

namespace {

Edge oriented(const Edge& pair, bool flipped) { return flipped ? Edge{pair.second, pair.first} : pair; }

void require_enumerable(std::size_t bits) {
    if (bits > max_enumerable_bits)
        throw BoundError(std::to_string(bits) + " free pairs exceed the enumeration cap of " +
                         std::to_string(max_enumerable_bits));
}

Bits bits_of(std::uint64_t index, std::size_t length) {
    Bits bits(length);
    for (std::size_t i = 0; i < length; ++i)
        bits[i] = (index >> i) & 1U;
    return bits;
}

using Builder = Digraph (*)(const UGraph&, const Bits&);

Digraph realize_member(const UGraph& base, const Bits& bits) { return build_phi_member(base, bits).realized; }

PhiSweepReport sweep(const UGraph& base, std::size_t length, Builder build, std::size_t samples, std::uint64_t seed,
                     unsigned workers) {
    if (length == 0 && samples > 0)
        throw BoundError("the family has a single member; no distinct pairs to sample");

    PhiSweepReport report;
    report.seed = seed;
    report.non_edges = length;
    report.pairs.resize(samples);

    std::mt19937_64 rng(seed);
    for (auto& pair : report.pairs) {
        pair.first = random_bits(length, rng);
        do
            pair.second = random_bits(length, rng);
        while (pair.second == pair.first);
    }

    const Digraph& base_graph = base.digraph();
    parallel_for(samples, workers, [&](std::size_t i) {
        auto& pair = report.pairs[i];
        Digraph s1 = build(base, pair.first);
        Digraph s2 = build(base, pair.second);
        auto identity = VertexMap::identity(s1.size());
        pair.identity_is_hom = is_homomorphism(s1, s2, identity.image);
        pair.hom_count = for_each_hom(s1, s2, {}, [&](std::span<const Vertex> image) {
            if (!is_homomorphism(base_graph, base_graph, image))
                pair.base_endomorphisms = false;
            return true;
        });
    });

    for (const auto& pair : report.pairs) {
        report.total_homs += pair.hom_count;
        report.identity_never_hom = report.identity_never_hom && !pair.identity_is_hom;
        report.homs_are_base_endomorphisms = report.homs_are_base_endomorphisms && pair.base_endomorphisms;
    }
    report.hom_free = report.total_homs == 0;
    return report;
}

}  // namespace

NonEdgeSet compute_T(const UGraph& base) {
    NonEdgeSet t;
    for (Vertex a = 0; a < base.size(); ++a)
        for (Vertex b = a + 1; b < base.size(); ++b)
            if (!base.adjacent(a, b))
                t.pairs.emplace_back(a, b);
    return t;
}

PhiMember build_phi_member(const UGraph& base, const Bits& bits) {
    auto t = compute_T(base);
    if (bits.size() != t.size())
        throw ArityError("expected " + std::to_string(t.size()) + " bits, got " + std::to_string(bits.size()));
    std::vector<Edge> edges(base.digraph().edges().begin(), base.digraph().edges().end());
    for (std::size_t i = 0; i < t.size(); ++i)
        edges.push_back(oriented(t.pairs[i], bits[i]));
    PhiMember member{bits, Digraph(base.size(), std::move(edges))};
    if (!check_phi_conditions(base, member.realized).member)
        throw Error("internal: completion violates the membership clauses");
    return member;
}

PhiCheck check_phi_conditions(const UGraph& base, const Digraph& s) {
    if (s.size() != base.size())
        throw ArityError("relation has " + std::to_string(s.size()) + " vertices, base has " +
                         std::to_string(base.size()));
    auto fail = [](int clause, Vertex a, Vertex b) { return PhiCheck{false, clause, Edge{a, b}}; };
    const auto n = static_cast<Vertex>(s.size());
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            if (base.adjacent(a, b) && !s.has_edge(a, b))
                return fail(1, a, b);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            if (a != b && !s.has_edge(a, b) && !s.has_edge(b, a))
                return fail(2, a, b);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            if (s.has_edge(a, b) && s.has_edge(b, a) && !(base.adjacent(a, b) && base.adjacent(b, a)))
                return fail(3, a, b);
    return {};
}

bool is_phi_member(const UGraph& base, const Digraph& s) { return check_phi_conditions(base, s).member; }

std::uint64_t phi_count(const UGraph& base) {
    auto pairs = compute_T(base).size();
    if (pairs > 63)
        throw BoundError("2^" + std::to_string(pairs) + " does not fit in 64 bits");
    return std::uint64_t{1} << pairs;
}

void for_each_phi_member(const UGraph& base, const std::function<void(const PhiMember&)>& visit) {
    auto length = compute_T(base).size();
    require_enumerable(length);
    for (std::uint64_t index = 0; index < (std::uint64_t{1} << length); ++index)
        visit(build_phi_member(base, bits_of(index, length)));
}

Digraph orientation(const UGraph& base, const Bits& bits) {
    auto pairs = base.pairs();
    if (bits.size() != pairs.size())
        throw ArityError("expected " + std::to_string(pairs.size()) + " bits, got " + std::to_string(bits.size()));
    std::vector<Edge> arcs;
    arcs.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        arcs.push_back(oriented(pairs[i], bits[i]));
    return Digraph(base.size(), std::move(arcs));
}

void for_each_orientation(const UGraph& base, const std::function<void(const Bits&, const Digraph&)>& visit) {
    auto length = base.pairs().size();
    require_enumerable(length);
    for (std::uint64_t index = 0; index < (std::uint64_t{1} << length); ++index) {
        auto bits = bits_of(index, length);
        visit(bits, orientation(base, bits));
    }
}

Bits random_bits(std::size_t length, std::mt19937_64& rng) {
    Bits bits(length);
    for (std::size_t i = 0; i < length; ++i)
        bits[i] = (rng() >> 63) != 0;
    return bits;
}

std::vector<Bits> sample_distinct_bits(std::size_t length, std::size_t count, std::mt19937_64& rng) {
    if (length < 64 && count > (std::uint64_t{1} << length))
        throw BoundError("cannot draw " + std::to_string(count) + " distinct vectors of length " +
                         std::to_string(length));
    std::vector<Bits> result;
    std::set<Bits> seen;
    while (result.size() < count) {
        auto bits = random_bits(length, rng);
        if (seen.insert(bits).second)
            result.push_back(std::move(bits));
    }
    return result;
}

std::string bits_to_string(const Bits& bits) {
    std::string s;
    s.reserve(bits.size());
    for (bool b : bits)
        s.push_back(b ? '1' : '0');
    return s;
}

Bits bits_from_string(std::string_view text) {
    Bits bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw ParseError(1, std::string("bit string may only contain 0 and 1, got '") + c + "'");
        bits.push_back(c == '1');
    }
    return bits;
}

PhiSweepReport phi_sweep(const UGraph& base, std::size_t samples, std::uint64_t seed, unsigned workers) {
    return sweep(base, compute_T(base).size(), realize_member, samples, seed, workers);
}

PhiSweepReport orientation_sweep(const UGraph& base, std::size_t samples, std::uint64_t seed, unsigned workers) {
    return sweep(base, base.pairs().size(), orientation, samples, seed, workers);
}

}  // namespace rigidkit
