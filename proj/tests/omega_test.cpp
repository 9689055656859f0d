#include "rigidkit/errors.hpp"
#include "rigidkit/hom.hpp"
#include "rigidkit/omega.hpp"
#include "support/oracle.hpp"

#include <gtest/gtest.h>

using namespace rigidkit;

TEST(OmegaPrefixTest, SmallBounds) {
    EXPECT_EQ(omega_prefix(3).graph, Digraph(3, {{0, 1}, {1, 2}, {0, 2}}));
    EXPECT_EQ(omega_prefix(1).graph.edge_count(), 0u);
    EXPECT_EQ(omega_prefix(5).graph, Digraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 2}}));
}

TEST(OmegaWitness, Sets) { EXPECT_EQ(omega_witness(2), (std::vector<Vertex>{0, 1, 2, 3, 4})); }

TEST(OmegaVerify, FirstWitnessMatchesBruteForce) {
    auto cert = verify_omega(0, 11);
    EXPECT_TRUE(cert.adequate);
    EXPECT_EQ(cert.hom_count, 1u);
    auto g = omega_prefix(11).graph;
    auto sub = induced_substructure(g, omega_witness(0));
    EXPECT_EQ(oracle::naive_homs(sub.graph, g).size(), 1u);
}

TEST(OmegaVerify, CountsMatchBruteForce) {
    for (Vertex i = 0; i < 3; ++i)
        for (std::size_t m = i + 3; m < i + 6; ++m) {
            auto g = omega_prefix(m).graph;
            auto sub = induced_substructure(g, omega_witness(i));
            EXPECT_EQ(verify_omega(i, m).hom_count, oracle::naive_homs(sub.graph, g).size());
        }
}

TEST(OmegaVerify, StableAcrossBounds) {
    EXPECT_EQ(verify_omega(5, 8).adequate, verify_omega(5, 20).adequate);
    EXPECT_TRUE(verify_omega(5, 20).adequate);
}

TEST(OmegaVerify, BoundTooSmall) { EXPECT_THROW(verify_omega(4, 6), BoundError); }

TEST(OmegaVerify, ShiftsAreRejected) {
    for (Vertex i = 0; i < 8; ++i) {
        const std::size_t m = i + 13;
        auto g = omega_prefix(m).graph;
        auto sub = induced_substructure(g, omega_witness(i));
        for (std::size_t c = 1; c <= m - i - 3; ++c) {
            std::vector<Vertex> shift;
            for (auto v : omega_witness(i))
                shift.push_back(static_cast<Vertex>(v + c));
            EXPECT_FALSE(is_homomorphism(sub.graph, g, shift)) << "i=" << i << " c=" << c;
        }
    }
}

TEST(OmegaVerify, WithoutChordShiftsSurvive) {
    // Dropping the chord leaves a plain path, which slides freely.
    Digraph path(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    auto sub = induced_substructure(path, std::vector<Vertex>{0, 1, 2});
    EXPECT_GT(count_homs(sub.graph, path), 1u);
}

TEST(OmegaVerify, UpToForty) {
    for (Vertex i = 0; i <= 40; ++i)
        EXPECT_TRUE(verify_omega(i, i + 13).adequate) << i;
}

TEST(OmegaSweep, PassesAndIsStable) {
    auto report = omega_sweep(10, 10, 2);
    EXPECT_TRUE(report.pass);
    ASSERT_EQ(report.entries.size(), 11u);
    for (const auto& e : report.entries) {
        EXPECT_EQ(e.verdicts.size(), 11u);
        EXPECT_TRUE(e.stable);
        EXPECT_TRUE(e.adequate);
    }
}
