#include "rigidkit/errors.hpp"
#include "rigidkit/graph.hpp"
#include "support/oracle.hpp"

#include <gtest/gtest.h>

using namespace rigidkit;

namespace {

Digraph t3() { return Digraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST(Digraph, TransitiveTriangle) {
    auto g = t3();
    EXPECT_EQ(g.size(), 3u);
    EXPECT_EQ(g.edge_count(), 3u);
    EXPECT_TRUE(g.has_edge(0, 2));
    EXPECT_FALSE(g.has_edge(2, 0));
    EXPECT_TRUE(g.related(2, 0));
    EXPECT_EQ(g.out_degree(0), 2u);
    EXPECT_EQ(g.in_degree(2), 2u);
    EXPECT_FALSE(g.is_symmetric());
}

TEST(Digraph, RejectsOutOfRangeAndLoops) {
    EXPECT_THROW(Digraph(2, {{0, 2}}), OutOfRangeError);
    EXPECT_THROW(Digraph(2, {{1, 1}}), LoopError);
}

TEST(Digraph, Singleton) {
    Digraph g(1, {});
    EXPECT_EQ(g.size(), 1u);
    EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Digraph, DeduplicatesAndSorts) {
    Digraph g(3, {{2, 1}, {0, 1}, {2, 1}});
    ASSERT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(g.edges()[0], Edge(0, 1));
    EXPECT_EQ(g.edges()[1], Edge(2, 1));
}

TEST(Digraph, AdjacencyListsMatchEdges) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = oracle::random_digraph(6, 0.4, rng);
        for (Vertex u = 0; u < 6; ++u) {
            std::size_t outs = 0, ins = 0;
            for (Vertex v = 0; v < 6; ++v) {
                outs += g.has_edge(u, v);
                ins += g.has_edge(v, u);
            }
            EXPECT_EQ(g.out_degree(u), outs);
            EXPECT_EQ(g.in_degree(u), ins);
            for (auto v : g.out_neighbours(u))
                EXPECT_TRUE(g.has_edge(u, v));
            for (auto v : g.in_neighbours(u))
                EXPECT_TRUE(g.has_edge(v, u));
        }
    }
}

TEST(UGraph, ClosureIsIdempotent) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = oracle::random_digraph(5, 0.3, rng);
        auto once = symmetric_closure(g);
        EXPECT_EQ(symmetric_closure(once.digraph()), once);
        for (auto [u, v] : g.edges())
            EXPECT_TRUE(once.adjacent(v, u));
    }
}

TEST(UGraph, RejectsAsymmetric) { EXPECT_THROW(UGraph{t3()}, ArityError); }

TEST(UGraph, PairsAreOrdered) {
    auto g = UGraph::from_pairs(4, {{3, 1}, {0, 2}});
    EXPECT_EQ(g.pairs(), (std::vector<Edge>{{0, 2}, {1, 3}}));
    EXPECT_EQ(g.digraph().edge_count(), 4u);
}

TEST(Induced, SubsetOfTriangle) {
    std::vector<Vertex> s{0, 2};
    auto sub = induced_substructure(t3(), s);
    EXPECT_EQ(sub.graph, Digraph(2, {{0, 1}}));
    EXPECT_EQ(sub.labels, (std::vector<Vertex>{0, 2}));
}

TEST(Induced, FullSetIsIdentity) {
    std::vector<Vertex> all{0, 1, 2};
    auto sub = induced_substructure(t3(), all);
    EXPECT_EQ(sub.graph, t3());
    EXPECT_EQ(sub.labels, all);
}

TEST(Induced, EmptySet) {
    auto sub = induced_substructure(t3(), {});
    EXPECT_EQ(sub.graph.size(), 0u);
    EXPECT_TRUE(sub.labels.empty());
}

TEST(Induced, OutOfRange) {
    std::vector<Vertex> s{0, 3};
    EXPECT_THROW(induced_substructure(t3(), s), OutOfRangeError);
}

TEST(Induced, MatchesDirectFilter) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = oracle::random_digraph(7, 0.35, rng);
        std::vector<Vertex> s;
        for (Vertex v = 0; v < 7; ++v)
            if (rng() & 1)
                s.push_back(v);
        auto sub = induced_substructure(g, s);
        for (Vertex a = 0; a < s.size(); ++a)
            for (Vertex b = 0; b < s.size(); ++b)
                EXPECT_EQ(sub.graph.has_edge(a, b), g.has_edge(s[a], s[b]));
    }
}

TEST(Components, WeakComponents) {
    Digraph g(5, {{0, 1}, {3, 1}, {4, 2}});
    auto comps = weak_components(g);
    EXPECT_EQ(comps, (std::vector<std::vector<Vertex>>{{0, 1, 3}, {2, 4}}));
    EXPECT_FALSE(is_weakly_connected(g));
    EXPECT_TRUE(is_weakly_connected(t3()));
}

TEST(EdgeList, DecodesTriangle) { EXPECT_EQ(decode("3 3\n0 1\n1 2\n0 2\n"), t3()); }

TEST(EdgeList, EncodeIsSorted) { EXPECT_EQ(encode(Digraph(3, {{1, 2}, {0, 2}, {0, 1}})), "3 3\n0 1\n0 2\n1 2\n"); }

TEST(EdgeList, Roundtrip) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = oracle::random_digraph(1 + trial % 9, 0.3, rng);
        EXPECT_EQ(decode(encode(g)), g);
        EXPECT_EQ(encode(decode(encode(g))), encode(g));
    }
}

TEST(EdgeList, CanonicalizesInput) {
    EXPECT_EQ(encode(decode("# comment\n3 2\n\n1 2\n0 1\n")), "3 2\n0 1\n1 2\n");
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
    auto line_of = [](const char* text) {
        try {
            decode(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    EXPECT_EQ(line_of("2 1\n0 5\n"), 2u);
    EXPECT_EQ(line_of("2 1\n1 1\n"), 2u);
    EXPECT_EQ(line_of("3 2\n0 1\nx y\n"), 3u);
    EXPECT_NE(line_of("3 2\n0 1\n"), 0u);
    EXPECT_NE(line_of("3 1\n0 1\n1 2\n"), 0u);
    EXPECT_NE(line_of(""), 0u);
}

TEST(EdgeList, Dot) {
    auto dot = to_dot(Digraph(2, {{0, 1}}));
    EXPECT_NE(dot.find("0 -> 1"), std::string::npos);
}

TEST(VertexMapTest, Basics) {
    auto id = VertexMap::identity(3);
    EXPECT_TRUE(id.is_identity());
    auto f = VertexMap::from_image({0, 0, 1});
    EXPECT_FALSE(f.is_identity());
    EXPECT_EQ(f.at(2), 1u);
    EXPECT_THROW(f.at(3), OutOfRangeError);
    EXPECT_LT(f, id);
}
