#include "rigidkit/errors.hpp"
#include "rigidkit/graph.hpp"

#include <charconv>
#include <optional>
#include <sstream>

namespace rigidkit {

namespace {

// Splits a line into exactly two unsigned integers, or nullopt.
std::optional<std::pair<std::uint64_t, std::uint64_t>> parse_pair(std::string_view line) {
    std::uint64_t values[2];
    std::size_t pos = 0;
    for (auto& value : values) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
            ++pos;
        auto [end, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
        if (ec != std::errc{})
            return std::nullopt;
        pos = static_cast<std::size_t>(end - line.data());
    }
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
        ++pos;
    if (pos != line.size())
        return std::nullopt;
    return std::pair{values[0], values[1]};
}

bool skippable(std::string_view line) {
    auto first = line.find_first_not_of(" \t\r");
    return first == std::string_view::npos || line[first] == '#';
}

}  // namespace

std::string encode(const Digraph& g) {
    std::ostringstream out;
    out << g.size() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

Digraph decode(std::string_view text) {
    std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    std::size_t last_line = 0;

    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (skippable(line))
            continue;
        last_line = line_no;

        auto pair = parse_pair(line);
        if (!pair)
            throw ParseError(line_no, "expected two non-negative integers, got '" + std::string(line) + "'");
        if (!header) {
            header = pair;
            continue;
        }
        auto [u, v] = *pair;
        if (edges.size() == header->second)
            throw ParseError(line_no, "more edge lines than the declared " + std::to_string(header->second));
        if (u >= header->first || v >= header->first)
            throw ParseError(line_no, "endpoint out of range for n = " + std::to_string(header->first));
        if (u == v)
            throw ParseError(line_no, "loop (" + std::to_string(u) + "," + std::to_string(v) + ") rejected");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!header)
        throw ParseError(line_no == 0 ? 1 : line_no, "missing 'n m' header");
    if (edges.size() != header->second)
        throw ParseError(last_line, "declared " + std::to_string(header->second) + " edges, found " +
                                        std::to_string(edges.size()));
    return Digraph(header->first, std::move(edges));
}

std::string to_dot(const Digraph& g, std::string_view name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    for (Vertex v = 0; v < g.size(); ++v)
        out << "  " << v << ";\n";
    for (auto [u, v] : g.edges())
        out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace rigidkit
