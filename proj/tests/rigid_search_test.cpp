#include "rigidkit/errors.hpp"
#include "rigidkit/hom.hpp"
#include "rigidkit/rigid_search.hpp"
#include "support/oracle.hpp"

#include <gtest/gtest.h>

using namespace rigidkit;

namespace {

SearchReport exhaustive(std::size_t n, bool symmetric, bool reject = false) {
    SearchOptions o;
    o.n = n;
    o.symmetric = symmetric;
    o.reject_isomorphs = reject;
    return search_rigid(o);
}

std::size_t class_count(std::size_t n, bool symmetric) { return exhaustive(n, symmetric, true).rigid_found.size(); }

}  // namespace

TEST(Tournament, Definition) {
    EXPECT_EQ(transitive_tournament(3), Digraph(3, {{0, 1}, {0, 2}, {1, 2}}));
    EXPECT_EQ(transitive_tournament(1).edge_count(), 0u);
    EXPECT_TRUE(is_rigid(transitive_tournament(5)).rigid);
}

TEST(Exhaustive, SingletonIsRigid) {
    auto r = exhaustive(1, true);
    EXPECT_EQ(r.rigid_found.size(), 1u);
    EXPECT_TRUE(r.exhausted);
}

TEST(Exhaustive, NoSmallRigidGraphs) {
    for (std::size_t n = 2; n <= 5; ++n) {
        auto r = exhaustive(n, true);
        EXPECT_EQ(r.rigid_found.size(), 0u) << n;
        EXPECT_EQ(r.graphs_examined, std::size_t{1} << (n * (n - 1) / 2));
    }
}

TEST(Exhaustive, DirectedMatchesNaiveOracle) {
    for (std::size_t n = 1; n <= 4; ++n) {
        std::size_t expected = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1))); ++mask)
            expected += oracle::naive_rigid(graph_from_mask(n, false, mask));
        auto r = exhaustive(n, false);
        EXPECT_EQ(r.rigid_found.size(), expected) << n;
        for (const auto& g : r.rigid_found)
            EXPECT_TRUE(oracle::naive_rigid(g));
    }
}

TEST(Exhaustive, IsomorphRejection) {
    // Rigid graphs have n! distinct labellings.
    const std::size_t factorial[] = {1, 1, 2, 6, 24, 120};
    for (std::size_t n = 1; n <= 4; ++n) {
        auto all = exhaustive(n, false).rigid_found.size();
        auto classes = class_count(n, false);
        EXPECT_EQ(classes * factorial[n], all) << n;
    }
}

TEST(Exhaustive, SizeCaps) {
    EXPECT_THROW(exhaustive(8, true), BoundError);
    EXPECT_THROW(exhaustive(6, false), BoundError);
    EXPECT_THROW(exhaustive(0, true), ArityError);
}

TEST(Random, FindsCertifiedRigidGraph) {
    const auto& base = oracle::rigid_base();
    EXPECT_EQ(base.size(), 8u);
    EXPECT_TRUE(is_rigid(base.digraph()).rigid);
    EXPECT_TRUE(is_weakly_connected(base.digraph()));
}

TEST(Random, SamplesAreReproducible) {
    for (std::uint64_t j = 0; j < 10; ++j)
        EXPECT_EQ(random_search_sample(7, true, 5, j), random_search_sample(7, true, 5, j));
    EXPECT_NE(random_search_sample(7, true, 5, 0), random_search_sample(7, true, 6, 0));
}

TEST(Random, WorkersDoNotChangeFinds) {
    SearchOptions o;
    o.n = 7;
    o.mode = SearchMode::random;
    o.budget = 3000;
    o.seed = 2;
    auto a = search_rigid(o);
    o.workers = 4;
    auto b = search_rigid(o);
    EXPECT_EQ(a.rigid_found, b.rigid_found);
    EXPECT_EQ(a.graphs_examined, 3000u);
    for (const auto& g : a.rigid_found)
        EXPECT_TRUE(oracle::naive_rigid(g));
}

TEST(Random, IsolatedVertexDestroysRigidity) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = oracle::random_digraph(1 + trial % 5, 0.5, rng);
        std::vector<Edge> edges(g.edges().begin(), g.edges().end());
        EXPECT_FALSE(is_rigid(Digraph(g.size() + 1, edges)).rigid);
    }
    auto rigid = transitive_tournament(4);
    std::vector<Edge> edges(rigid.edges().begin(), rigid.edges().end());
    EXPECT_FALSE(is_rigid(Digraph(5, edges)).rigid);
}

TEST(Masks, PairOrder) {
    EXPECT_EQ(graph_from_mask(3, true, 0b001), Digraph(3, {{0, 1}, {1, 0}}));
    EXPECT_EQ(graph_from_mask(3, false, 0b1), Digraph(3, {{0, 1}}));
}
