#include "rigidkit/hom.hpp"
#include "rigidkit/phi.hpp"
#include "rigidkit/rigid_search.hpp"
#include "rigidkit/symmetrize.hpp"
#include "rigidkit/union.hpp"
#include "rigidkit/witness.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace rigidkit;

namespace {

Digraph random_graph(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && coin(rng))
                edges.emplace_back(u, v);
    return Digraph(n, std::move(edges));
}

const UGraph& rigid_base() {
    static const UGraph base = [] {
        SearchOptions o;
        o.n = 8;
        o.mode = SearchMode::random;
        o.budget = 1'000'000;
        o.max_finds = 1;
        return UGraph(search_rigid(o).rigid_found.at(0));
    }();
    return base;
}

}  // namespace

static void BM_CountHomsRandom(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto source = random_graph(n / 2, 0.3, 1);
    auto target = random_graph(n, 0.5, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_homs(source, target));
}
BENCHMARK(BM_CountHomsRandom)->Arg(8)->Arg(12)->Arg(16);

static void BM_IsRigidTournament(benchmark::State& state) {
    auto g = transitive_tournament(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(is_rigid(g));
}
BENCHMARK(BM_IsRigidTournament)->Arg(8)->Arg(32)->Arg(128);

static void BM_ExhaustiveSymmetric(benchmark::State& state) {
    SearchOptions o;
    o.n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(search_rigid(o));
}
BENCHMARK(BM_ExhaustiveSymmetric)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_DiamondUnion(benchmark::State& state) {
    std::mt19937_64 rng(3);
    std::vector<Digraph> parts;
    for (const auto& bits : sample_distinct_bits(compute_T(rigid_base()).size(), state.range(0), rng))
        parts.push_back(build_phi_member(rigid_base(), bits).realized);
    Structure s(build_union(parts));
    auto witnesses = WitnessProvider::component(s);
    WitnessOptions o;
    o.bound = 8;
    o.confine = state.range(1) != 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_diamond(s, witnesses, o));
}
BENCHMARK(BM_DiamondUnion)->Args({8, 1})->Args({8, 0})->Args({32, 1})->Unit(benchmark::kMillisecond);

static void BM_SymmetrizedHomFree(benchmark::State& state) {
    std::mt19937_64 rng(5);
    auto bits = sample_distinct_bits(rigid_base().pairs().size(), 2, rng);
    auto a = symmetrize(orientation(rigid_base(), bits[0]), default_scheme()).graph.digraph();
    auto b = symmetrize(orientation(rigid_base(), bits[1]), default_scheme()).graph.digraph();
    for (auto _ : state)
        benchmark::DoNotOptimize(hom_exists(a, b));
}
BENCHMARK(BM_SymmetrizedHomFree)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
