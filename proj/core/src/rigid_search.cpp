#include "rigidkit/rigid_search.hpp"

#include "rigidkit/errors.hpp"
#include "rigidkit/hom.hpp"
#include "rigidkit/parallel.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

namespace rigidkit {

namespace {

constexpr std::size_t chunk_size = 4096;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::vector<Edge> pair_order(std::size_t n, bool symmetric) {
    std::vector<Edge> pairs;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = symmetric ? a + 1 : 0; b < n; ++b)
            if (a != b)
                pairs.emplace_back(a, b);
    return pairs;
}

// For each vertex permutation, where each pair index goes.
class PermutationTable {
  public:
    PermutationTable(std::size_t n, bool symmetric) {
        auto pairs = pair_order(n, symmetric);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        do {
            std::vector<std::uint8_t> row(pairs.size());
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                Edge image{perm[pairs[i].first], perm[pairs[i].second]};
                if (symmetric && image.first > image.second)
                    std::swap(image.first, image.second);
                row[i] = static_cast<std::uint8_t>(std::lower_bound(pairs.begin(), pairs.end(), image) - pairs.begin());
            }
            rows_.push_back(std::move(row));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    bool is_canonical(std::uint64_t mask) const {
        for (const auto& row : rows_) {
            std::uint64_t image = 0;
            for (std::size_t i = 0; i < row.size(); ++i)
                if ((mask >> i) & 1U)
                    image |= std::uint64_t{1} << row[i];
            if (image < mask)
                return false;
        }
        return true;
    }

  private:
    std::vector<std::vector<std::uint8_t>> rows_;
};

SearchReport exhaustive(const SearchOptions& options) {
    auto cap = options.symmetric ? max_exhaustive_symmetric : max_exhaustive_directed;
    if (options.n > cap)
        throw BoundError("exhaustive search is capped at n = " + std::to_string(cap) + " for " +
                         (options.symmetric ? "symmetric" : "directed") + " graphs (2^" +
                         std::to_string(pair_order(cap, options.symmetric).size()) +
                         " labelled graphs); use random mode beyond that");

    auto pairs = pair_order(options.n, options.symmetric).size();
    std::uint64_t total = std::uint64_t{1} << pairs;
    std::optional<PermutationTable> table;
    if (options.reject_isomorphs)
        table.emplace(options.n, options.symmetric);

    auto chunks = static_cast<std::size_t>((total + chunk_size - 1) / chunk_size);
    std::vector<std::vector<std::uint64_t>> found(chunks);
    parallel_for(chunks, options.workers, [&](std::size_t c) {
        auto end = std::min<std::uint64_t>(total, (c + 1) * std::uint64_t{chunk_size});
        for (std::uint64_t mask = c * std::uint64_t{chunk_size}; mask < end; ++mask) {
            if (table && !table->is_canonical(mask))
                continue;
            if (is_rigid(graph_from_mask(options.n, options.symmetric, mask)).rigid)
                found[c].push_back(mask);
        }
    });

    SearchReport report{options.n, options.symmetric, SearchMode::exhaustive, options.seed,
                        static_cast<std::size_t>(total), {}, true};
    for (const auto& chunk : found)
        for (auto mask : chunk)
            report.rigid_found.push_back(graph_from_mask(options.n, options.symmetric, mask));
    return report;
}

SearchReport random(const SearchOptions& options) {
    SearchReport report{options.n, options.symmetric, SearchMode::random, options.seed, 0, {}, false};
    const auto wanted = options.max_finds.value_or(std::numeric_limits<std::size_t>::max());
    if (wanted == 0)
        return report;

    // Finds are consumed in sample order, so where the scan stops does not
    // depend on the round size.
    const std::size_t round = chunk_size * std::max(1U, options.workers);
    for (std::size_t start = 0; start < options.budget; start += round) {
        auto count = std::min(round, options.budget - start);
        std::vector<std::optional<Digraph>> slot(count);
        parallel_for(count, options.workers, [&](std::size_t k) {
            auto g = random_search_sample(options.n, options.symmetric, options.seed, start + k);
            if (is_rigid(g).rigid)
                slot[k] = std::move(g);
        });
        for (std::size_t k = 0; k < count; ++k) {
            report.graphs_examined = start + k + 1;
            if (slot[k]) {
                report.rigid_found.push_back(std::move(*slot[k]));
                if (report.rigid_found.size() == wanted)
                    return report;
            }
        }
    }
    return report;
}

}  // namespace

Digraph transitive_tournament(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Digraph(n, std::move(edges));
}

Digraph graph_from_mask(std::size_t n, bool symmetric, std::uint64_t mask) {
    auto pairs = pair_order(n, symmetric);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1U) {
            edges.push_back(pairs[i]);
            if (symmetric)
                edges.emplace_back(pairs[i].second, pairs[i].first);
        }
    return Digraph(n, std::move(edges));
}

Digraph random_search_sample(std::size_t n, bool symmetric, std::uint64_t seed, std::uint64_t index) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index + 1)));
    const double p = random_densities[index % std::size(random_densities)];
    std::vector<Edge> edges;
    for (const auto& pair : pair_order(n, symmetric))
        if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) {
            edges.push_back(pair);
            if (symmetric)
                edges.emplace_back(pair.second, pair.first);
        }
    return Digraph(n, std::move(edges));
}

SearchReport search_rigid(const SearchOptions& options) {
    if (options.n == 0)
        throw ArityError("search needs n >= 1");
    return options.mode == SearchMode::exhaustive ? exhaustive(options) : random(options);
}

}  // namespace rigidkit
