#include "rigidkit/symmetrize.hpp"

#include "rigidkit/errors.hpp"
#include "rigidkit/hom.hpp"
#include "rigidkit/parallel.hpp"
#include "rigidkit/rigid_search.hpp"

#include <random>
#include <sstream>

namespace rigidkit {

namespace {

std::string_view next_line(std::string_view& text, std::size_t& line_no) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    return line;
}

bool blank(std::string_view line) {
    auto first = line.find_first_not_of(" \t\r");
    return first == std::string_view::npos || line[first] == '#';
}

struct Section {
    std::string keyword;
    Vertex first = 0;
    Vertex second = 0;
    UGraph graph;
};

// Reads "<keyword> A B" and the edge-list block after it.
Section read_section(std::string_view& text, std::size_t& line_no) {
    std::string_view line;
    do {
        if (text.empty())
            throw ParseError(line_no, "unexpected end of gadget scheme");
        line = next_line(text, line_no);
    } while (blank(line));

    Section section;
    std::istringstream header{std::string(line)};
    long long a = -1, b = -1;
    std::string extra;
    if (!(header >> section.keyword >> a >> b) || (header >> extra) || a < 0 || b < 0)
        throw ParseError(line_no, "expected '<arc|vertex> T H', got '" + std::string(line) + "'");
    section.first = static_cast<Vertex>(a);
    section.second = static_cast<Vertex>(b);

    // The edge-list block: header then exactly m edge lines.
    std::string block;
    std::size_t start = line_no + 1;
    std::optional<std::size_t> remaining;
    while (!remaining || *remaining > 0) {
        if (text.empty())
            throw ParseError(line_no, "edge list for '" + section.keyword + "' ends early");
        auto l = next_line(text, line_no);
        if (blank(l))
            continue;
        block.append(l).push_back('\n');
        if (!remaining) {
            std::istringstream counts{std::string(l)};
            std::size_t n = 0, m = 0;
            if (!(counts >> n >> m))
                throw ParseError(line_no, "expected 'n m' header");
            remaining = m;
        } else {
            --*remaining;
        }
    }
    try {
        section.graph = symmetric_closure(decode(block));
    } catch (const ParseError& e) {
        throw ParseError(start + e.line() - 1, e.what());
    }
    return section;
}

const UGraph& single_vertex() {
    static const UGraph g(Digraph(1, {}));
    return g;
}

std::size_t count_with_limit(const Digraph& source, const Digraph& target, std::size_t limit) {
    HomQuery query;
    query.limit = limit;
    return count_homs(source, target, query);
}

FaithfulSweepReport run_sweep(const std::vector<std::pair<Digraph, Digraph>>& pairs, const GadgetScheme& scheme,
                              unsigned workers) {
    std::vector<FaithfulResult> results(pairs.size());
    parallel_for(pairs.size(), workers,
                 [&](std::size_t i) { results[i] = verify_faithful(pairs[i].first, pairs[i].second, scheme); });
    FaithfulSweepReport report;
    report.pairs_checked = pairs.size();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (results[i].equal)
            ++report.pairs_equal;
        else
            report.mismatches.push_back({pairs[i].first, pairs[i].second, results[i]});
    }
    report.pass = report.mismatches.empty();
    return report;
}

}  // namespace

GadgetScheme default_scheme() {
    static const GadgetScheme scheme = [] {
        GadgetScheme s;
        s.vertex_gadget = UGraph::from_pairs(8, {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {0, 7}, {1, 3}, {1, 4}, {2, 4},
                                                 {2, 5}, {2, 6}, {3, 4}, {3, 6}, {3, 7}, {5, 6}, {5, 7}, {6, 7}});
        s.tail_port = 0;
        s.head_port = 3;
        s.arc_gadget = UGraph::from_pairs(2, {{0, 1}});
        s.tail_anchor = 0;
        s.head_anchor = 1;
        return s;
    }();
    return scheme;
}

void validate_scheme(const GadgetScheme& scheme) {
    const auto vn = scheme.vertex_gadget.size();
    const auto an = scheme.arc_gadget.size();
    if (vn == 0 || scheme.tail_port >= vn || scheme.head_port >= vn)
        throw SchemeError("vertex gadget ports must name vertices of a nonempty gadget");
    if (scheme.tail_anchor >= an || scheme.head_anchor >= an)
        throw SchemeError("arc gadget anchors out of range");
    if (scheme.tail_anchor == scheme.head_anchor)
        throw SchemeError("arc gadget anchors must differ");
    if (!is_weakly_connected(scheme.vertex_gadget.digraph()))
        throw SchemeError("vertex gadget is not connected");
    if (!is_weakly_connected(scheme.arc_gadget.digraph()))
        throw SchemeError("arc gadget is not connected");

    auto arc = symmetrize(Digraph(2, {{0, 1}}), scheme);
    if (!is_weakly_connected(arc.graph.digraph()))
        throw SchemeError("a symmetrized arc is not connected");
    if (!is_rigid(arc.graph.digraph()).rigid)
        throw SchemeError("a symmetrized arc has a non-identity endomorphism; tail and head are not distinguished");
}

GadgetScheme parse_scheme(std::string_view text) {
    std::size_t line_no = 0;
    GadgetScheme scheme;
    auto arc = read_section(text, line_no);
    if (arc.keyword != "arc")
        throw ParseError(line_no, "scheme must start with an 'arc' section");
    scheme.arc_gadget = std::move(arc.graph);
    scheme.tail_anchor = arc.first;
    scheme.head_anchor = arc.second;

    scheme.vertex_gadget = single_vertex();
    while (!text.empty()) {
        if (blank(text.substr(0, text.find('\n')))) {
            next_line(text, line_no);
            continue;
        }
        auto vertex = read_section(text, line_no);
        if (vertex.keyword != "vertex")
            throw ParseError(line_no, "expected a 'vertex' section, got '" + vertex.keyword + "'");
        scheme.vertex_gadget = std::move(vertex.graph);
        scheme.tail_port = vertex.first;
        scheme.head_port = vertex.second;
    }
    validate_scheme(scheme);
    return scheme;
}

std::string encode_scheme(const GadgetScheme& scheme) {
    std::ostringstream out;
    out << "arc " << scheme.tail_anchor << ' ' << scheme.head_anchor << '\n' << encode(scheme.arc_gadget.digraph());
    out << "vertex " << scheme.tail_port << ' ' << scheme.head_port << '\n'
        << encode(scheme.vertex_gadget.digraph());
    return out.str();
}

SymmetrizedGraph symmetrize(const Digraph& d, const GadgetScheme& scheme) {
    const auto g = scheme.vertex_gadget.size();
    const auto interior = scheme.arc_gadget.size() - 2;
    const auto total = d.size() * g + d.edge_count() * interior;

    std::vector<Edge> pairs;
    SymmetrizedGraph result;
    for (Vertex v = 0; v < d.size(); ++v) {
        const auto base = static_cast<Vertex>(v * g);
        result.carrier.push_back(base + scheme.tail_port);
        for (auto [a, b] : scheme.vertex_gadget.pairs())
            pairs.emplace_back(base + a, base + b);
    }

    auto next = static_cast<Vertex>(d.size() * g);
    for (auto [u, v] : d.edges()) {
        std::vector<Vertex> place(scheme.arc_gadget.size());
        for (Vertex a = 0; a < place.size(); ++a) {
            if (a == scheme.tail_anchor)
                place[a] = static_cast<Vertex>(u * g + scheme.tail_port);
            else if (a == scheme.head_anchor)
                place[a] = static_cast<Vertex>(v * g + scheme.head_port);
            else
                place[a] = next++;
        }
        for (auto [a, b] : scheme.arc_gadget.pairs())
            pairs.emplace_back(place[a], place[b]);
    }
    result.graph = UGraph::from_pairs(total, pairs);
    return result;
}

FaithfulResult verify_faithful(const Digraph& d1, const Digraph& d2, const GadgetScheme& scheme) {
    if (d1.size() > max_faithful_vertices || d2.size() > max_faithful_vertices)
        throw BoundError("faithfulness checks are capped at " + std::to_string(max_faithful_vertices) +
                         " vertices per digraph");
    FaithfulResult result;
    result.digraph_homs = count_homs(d1, d2);
    // One past the expected count is enough to detect any surplus.
    result.symmetric_homs = count_with_limit(symmetrize(d1, scheme).graph.digraph(),
                                             symmetrize(d2, scheme).graph.digraph(), result.digraph_homs + 1);
    result.equal = result.digraph_homs == result.symmetric_homs;
    return result;
}

FaithfulSweepReport faithful_sweep3(const GadgetScheme& scheme, unsigned workers) {
    std::vector<Digraph> all;
    for (std::uint64_t mask = 0; mask < 64; ++mask)
        all.push_back(graph_from_mask(3, false, mask));
    std::vector<std::pair<Digraph, Digraph>> pairs;
    for (const auto& a : all)
        for (const auto& b : all)
            pairs.emplace_back(a, b);
    return run_sweep(pairs, scheme, workers);
}

FaithfulSweepReport faithful_random(const GadgetScheme& scheme, std::size_t n, std::size_t count, std::uint64_t seed,
                                    unsigned workers) {
    const auto bits = n * (n - 1);
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Digraph, Digraph>> pairs;
    for (std::size_t i = 0; i < count; ++i) {
        auto draw = [&] { return graph_from_mask(n, false, bits >= 64 ? rng() : rng() & ((std::uint64_t{1} << bits) - 1)); };
        auto first = draw();
        pairs.emplace_back(std::move(first), draw());
    }
    return run_sweep(pairs, scheme, workers);
}

}  // namespace rigidkit
