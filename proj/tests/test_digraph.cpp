#include <cstdint>
#include <regex>

#include <gtest/gtest.h>

#include "hesslcp/hesslcp.hpp"
#include "test_support.hpp"

namespace hesslcp {
namespace {

using testing::cyclic_instance;
using testing::cyclic_instance_cycle;

TEST(Digraph, OneDimensional) {
    const OrientationDigraph g = build_digraph(LCPInstance(Matrix{{1}}, Vector{1}));
    EXPECT_EQ(g.vertex_count(), 2U);
    EXPECT_EQ(g.arc_count(), 1U);
    EXPECT_TRUE(g.has_arc(1U, 0U));
    EXPECT_EQ(find_sinks(g), (std::vector<Basis>{Basis{}}));
}

TEST(Digraph, CyclicInstanceArcs) {
    const OrientationDigraph g = build_digraph(cyclic_instance());
    // Only q_3 is negative, so the empty basis has the single out-arc to {3}.
    EXPECT_EQ(g.out_bits(0), 1U << 2);
    const auto full = static_cast<OrientationDigraph::Vertex>(Basis::one_based({1, 2, 3, 4}).mask());
    const auto drop4 = static_cast<OrientationDigraph::Vertex>(Basis::one_based({1, 2, 3}).mask());
    EXPECT_TRUE(g.has_arc(full, drop4));
    EXPECT_EQ(g.arc_count(), 32U);
}

TEST(Digraph, PlainModeOnNondegenerateMatchesLex) {
    const OrientationDigraph lex = build_digraph(cyclic_instance(), OrientationMode::lex);
    const OrientationDigraph plain = build_digraph(cyclic_instance(), OrientationMode::plain);
    for (OrientationDigraph::Vertex v = 0; v < 16; ++v) EXPECT_EQ(lex.out_bits(v), plain.out_bits(v));
}

TEST(Digraph, PlainModeMayLeaveEdgesUnoriented) {
    const OrientationDigraph plain = build_digraph(LCPInstance(Matrix::identity(2), Vector{0, 1}), OrientationMode::plain);
    EXPECT_LT(plain.arc_count(), 4U);
    const OrientationDigraph lex = build_digraph(LCPInstance(Matrix::identity(2), Vector{0, 1}), OrientationMode::lex);
    EXPECT_EQ(lex.arc_count(), 4U);
}

TEST(Digraph, SizeGuards) {
    EXPECT_THROW(build_digraph(cyclic_instance(), OrientationMode::lex, 3), TooLarge);
    EXPECT_THROW(build_digraph(LCPInstance(Matrix(0, 0), Vector{})), InvalidArgument);
}

TEST(Sinks, IdentityWithPositiveRhs) {
    const OrientationDigraph g = build_digraph(LCPInstance(Matrix::identity(3), Vector{1, 2, 3}));
    EXPECT_EQ(find_sinks(g), (std::vector<Basis>{Basis{}}));
}

TEST(Sinks, CyclicInstanceHasUniqueSinkAtOracleBasis) {
    const auto sinks = find_sinks(build_digraph(cyclic_instance()));
    ASSERT_EQ(sinks.size(), 1U);
    EXPECT_EQ(sinks.front(), brute_force_solve(cyclic_instance()).lex_optimal_basis);
}

TEST(Cycle, IdentityDigraphsAreAcyclic) {
    // Exhaustive over every sign pattern of q (with zeros) for n <= 3.
    for (std::size_t n = 1; n <= 3; ++n) {
        std::size_t patterns = 1;
        for (std::size_t i = 0; i < n; ++i) patterns *= 3;
        for (std::size_t p = 0; p < patterns; ++p) {
            Vector q(n);
            std::size_t code = p;
            for (std::size_t i = 0; i < n; ++i, code /= 3) q[i] = static_cast<long>(code % 3) - 1;
            EXPECT_FALSE(find_cycle(build_digraph(LCPInstance(Matrix::identity(n), q))).has_value());
        }
    }
}

TEST(Cycle, CyclicInstanceHasACycle) {
    const OrientationDigraph g = build_digraph(cyclic_instance());
    const auto cycle = find_cycle(g);
    ASSERT_TRUE(cycle.has_value());
    EXPECT_GE(cycle->size(), 3U);
    EXPECT_EQ(cycle->front(), cycle->back());
    EXPECT_TRUE(contains_cycle(g, *cycle));
}

TEST(Cycle, KnownEightCycle) {
    const OrientationDigraph g = build_digraph(cyclic_instance());
    EXPECT_TRUE(contains_cycle(g, cyclic_instance_cycle()));

    auto open = cyclic_instance_cycle();
    open.pop_back();
    EXPECT_TRUE(contains_cycle(g, open));

    auto reversed = cyclic_instance_cycle();
    std::reverse(reversed.begin(), reversed.end());
    EXPECT_FALSE(contains_cycle(g, reversed));
}

TEST(Cycle, MalformedSequences) {
    const OrientationDigraph g = build_digraph(cyclic_instance());
    EXPECT_THROW(contains_cycle(g, {Basis{}}), MalformedCycle);
    EXPECT_THROW(contains_cycle(g, {Basis{}, Basis::one_based({1, 2}), Basis{}}), MalformedCycle);
    EXPECT_THROW(contains_cycle(g, {Basis{}, Basis::one_based({5})}), MalformedCycle);
    EXPECT_THROW(contains_cycle(g, {Basis{}, Basis{}}), MalformedCycle);
}

TEST(Dot, DeterministicAndComplete) {
    const OrientationDigraph g = build_digraph(cyclic_instance());
    const std::string dot = to_dot(g);
    EXPECT_EQ(dot, to_dot(build_digraph(cyclic_instance())));
    const std::regex node(R"(  v\d+ \[label=)");
    const std::regex arc(R"(  v\d+ -> v\d+;)");
    EXPECT_EQ(std::distance(std::sregex_iterator(dot.begin(), dot.end(), node), std::sregex_iterator()), 16);
    EXPECT_EQ(std::distance(std::sregex_iterator(dot.begin(), dot.end(), arc), std::sregex_iterator()), 32);
    EXPECT_NE(dot.find("v15 -> v7;"), std::string::npos);
    EXPECT_NE(dot.find("[label=\"{2,3}\", shape=doublecircle]"), std::string::npos);
}

class DigraphProperty : public ::testing::TestWithParam<int> {};

TEST_P(DigraphProperty, LexOrientationHasUniqueSinkAtOptimalBasis) {
    const std::uint64_t seed = static_cast<std::uint64_t>(GetParam());
    const std::size_t n = 1 + seed % 6;
    const LCPInstance inst = generate_instance({n, static_cast<BandStructure>(seed % 4), seed});
    const OrientationDigraph g = build_digraph(inst);
    EXPECT_EQ(g.arc_count(), n * (std::size_t{1} << (n - 1)));
    const auto sinks = find_sinks(g);
    ASSERT_EQ(sinks.size(), 1U);
    EXPECT_EQ(sinks.front(), brute_force_solve(inst).lex_optimal_basis);
    for (OrientationDigraph::Vertex v = 0; v < g.vertex_count(); ++v) {
        EXPECT_EQ(basis_test_lex(inst, Basis::from_mask(v)), g.out_degree(v) == 0);
        for (std::size_t i = 0; i < n; ++i) EXPECT_NE(g.has_arc(v, i), g.has_arc(v ^ (1U << i), i));
    }
}

TEST_P(DigraphProperty, ZMatrixOrientationsAreAcyclic) {
    const std::uint64_t seed = static_cast<std::uint64_t>(GetParam());
    const std::size_t n = 1 + seed % 3;
    // Z-matrix P-matrix: strictly dominant diagonal, nonpositive off-diagonal.
    LCPInstance g = generate_instance({n, BandStructure::general, seed, Family::dominant});
    Matrix m = g.matrix();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && m(i, j) > 0) m(i, j) = -m(i, j);
    ASSERT_TRUE(is_z_matrix(m));
    ASSERT_TRUE(is_p_matrix(m));
    EXPECT_FALSE(find_cycle(build_digraph(LCPInstance(m, g.rhs()))).has_value());
}

INSTANTIATE_TEST_SUITE_P(Generated, DigraphProperty, ::testing::Range(0, 40));

} // namespace
} // namespace hesslcp
