#include "rigidkit/errors.hpp"
#include "rigidkit/hom.hpp"
#include "rigidkit/rigid_search.hpp"
#include "support/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace rigidkit;
using oracle::Image;

namespace {

const Digraph arc(2, {{0, 1}});
const Digraph t3(3, {{0, 1}, {0, 2}, {1, 2}});
const Digraph cycle3(3, {{0, 1}, {1, 2}, {2, 0}});

std::vector<Image> images(const std::vector<VertexMap>& maps) {
    std::vector<Image> out;
    for (const auto& m : maps)
        out.push_back(m.image);
    return out;
}

void expect_matches_oracle(const Digraph& s, const Digraph& t, const std::vector<Pin>& pins = {}) {
    HomQuery q;
    q.pins = pins;
    EXPECT_EQ(images(enumerate_homs(s, t, q)), oracle::naive_homs(s, t, pins))
        << "source\n" << encode(s) << "target\n" << encode(t);
}

}  // namespace

TEST(Homs, ArcIntoTriangle) {
    auto homs = enumerate_homs(arc, t3);
    EXPECT_EQ(images(homs), (std::vector<Image>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(Homs, CycleEndomorphismsAreRotations) {
    EXPECT_EQ(images(enumerate_homs(cycle3, cycle3)), (std::vector<Image>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
}

TEST(Homs, PinToSinkHasNoHoms) {
    HomQuery q;
    q.pins = {{0, 2}};
    EXPECT_EQ(count_homs(arc, t3, q), 0u);
}

TEST(Homs, PinOutOfRange) {
    HomQuery q;
    q.pins = {{5, 0}};
    EXPECT_THROW(enumerate_homs(arc, t3, q), OutOfRangeError);
    q.pins = {{0, 5}};
    EXPECT_THROW(enumerate_homs(arc, t3, q), OutOfRangeError);
}

TEST(Homs, EmptyTarget) {
    EXPECT_EQ(count_homs(arc, Digraph(0, {})), 0u);
    EXPECT_EQ(count_homs(Digraph(0, {}), t3), 1u);
}

TEST(Homs, AllThreeVertexPairsMatchOracle) {
    for (std::uint64_t a = 0; a < 64; ++a)
        for (std::uint64_t b = 0; b < 64; b += 7)
            expect_matches_oracle(graph_from_mask(3, false, a), graph_from_mask(3, false, b));
}

TEST(Homs, RandomPairsWithPinsMatchOracle) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        auto s = oracle::random_digraph(1 + rng() % 4, 0.2 + 0.1 * (trial % 5), rng);
        auto t = oracle::random_digraph(1 + rng() % 4, 0.2 + 0.1 * (trial % 5), rng);
        std::vector<Pin> pins;
        if (trial % 3 == 1)
            pins.push_back({static_cast<Vertex>(rng() % s.size()), static_cast<Vertex>(rng() % t.size())});
        expect_matches_oracle(s, t, pins);
    }
}

TEST(Homs, IdentityIsAlwaysPresent) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = oracle::random_digraph(6, 0.3, rng);
        auto homs = enumerate_homs(g, g);
        EXPECT_TRUE(std::binary_search(homs.begin(), homs.end(), VertexMap::identity(6)));
    }
}

TEST(Homs, CompositionIsHom) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = oracle::random_digraph(3, 0.4, rng);
        auto b = oracle::random_digraph(4, 0.4, rng);
        auto c = oracle::random_digraph(4, 0.4, rng);
        for (const auto& f : enumerate_homs(a, b))
            for (const auto& g : enumerate_homs(b, c)) {
                Image h;
                for (auto v : f.image)
                    h.push_back(g.image[v]);
                EXPECT_TRUE(is_homomorphism(a, c, h));
            }
    }
}

TEST(Homs, WorkersDoNotChangeResults) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 15; ++trial) {
        auto s = oracle::random_digraph(5, 0.25, rng);
        auto t = oracle::random_digraph(7, 0.5, rng);
        HomQuery one, four;
        four.workers = 4;
        EXPECT_EQ(enumerate_homs(s, t, one), enumerate_homs(s, t, four));
        one.limit = four.limit = 3;
        EXPECT_EQ(enumerate_homs(s, t, one), enumerate_homs(s, t, four));
    }
}

TEST(Homs, LimitKeepsASubset) {
    std::mt19937_64 rng(29);
    auto s = oracle::random_digraph(4, 0.2, rng);
    auto t = oracle::random_digraph(5, 0.6, rng);
    auto all = enumerate_homs(s, t);
    ASSERT_GT(all.size(), 3u);
    HomQuery q;
    q.limit = 3;
    auto some = enumerate_homs(s, t, q);
    EXPECT_EQ(some.size(), 3u);
    EXPECT_TRUE(std::is_sorted(some.begin(), some.end()));
    for (const auto& m : some)
        EXPECT_TRUE(std::binary_search(all.begin(), all.end(), m));
}

TEST(Homs, VisitorStopsEarly) {
    std::size_t seen = 0;
    auto visited = for_each_hom(Digraph(3, {}), Digraph(3, {}), {}, [&](std::span<const Vertex>) {
        return ++seen < 5;
    });
    EXPECT_EQ(visited, 5u);
    EXPECT_TRUE(hom_exists(arc, t3));
    EXPECT_FALSE(hom_exists(t3, cycle3));
}

TEST(Rigidity, Singleton) { EXPECT_TRUE(is_rigid(Digraph(1, {})).rigid); }

TEST(Rigidity, TwoIsolatedVertices) {
    auto cert = is_rigid(Digraph(2, {}));
    EXPECT_FALSE(cert.rigid);
    ASSERT_TRUE(cert.counterexample);
    EXPECT_EQ(cert.counterexample->image, (Image{0, 0}));
}

TEST(Rigidity, UndirectedEdgeSwaps) {
    auto cert = is_rigid(Digraph(2, {{0, 1}, {1, 0}}));
    EXPECT_FALSE(cert.rigid);
    ASSERT_TRUE(cert.counterexample);
    EXPECT_EQ(cert.counterexample->image, (Image{1, 0}));
}

TEST(Rigidity, TransitiveTournaments) {
    for (std::size_t n = 1; n <= 6; ++n) {
        auto g = transitive_tournament(n);
        EXPECT_TRUE(is_rigid(g).rigid);
        EXPECT_TRUE(oracle::naive_rigid(g));
    }
}

TEST(Rigidity, CounterexampleIsVerified) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_digraph(5, 0.4, rng);
        auto cert = is_rigid(g);
        EXPECT_EQ(cert.rigid, oracle::naive_rigid(g));
        EXPECT_EQ(cert.rigid, !cert.counterexample.has_value());
        if (cert.counterexample) {
            EXPECT_FALSE(cert.counterexample->is_identity());
            EXPECT_TRUE(is_homomorphism(g, g, cert.counterexample->image));
        }
    }
}

TEST(Homs, LargeTargetsUseSparseFiltering) {
    // 1100 copies of a 4-vertex target exceed the dense-row threshold.
    std::mt19937_64 rng(47);
    const Digraph small(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 1}});
    std::vector<Edge> edges;
    for (Vertex c = 0; c < 1100; ++c)
        for (auto [u, v] : small.edges())
            edges.emplace_back(4 * c + u, 4 * c + v);
    const Digraph big(4400, edges);
    for (int trial = 0; trial < 5; ++trial) {
        auto s = oracle::random_digraph(3, 0.5, rng);
        if (!is_weakly_connected(s))
            continue;
        EXPECT_EQ(count_homs(s, big), 1100 * oracle::naive_homs(s, small).size());
    }
    HomQuery q;
    q.pins = {{0, 4 * 7 + 2}};
    EXPECT_EQ(count_homs(Digraph(2, {{0, 1}}), big, q), 2u);
}
