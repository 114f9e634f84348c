#include <cmath>
#include <gtest/gtest.h>

#include "cointerest/errors.hpp"
#include "cointerest/graph.hpp"
#include "test_support.hpp"

using namespace cointerest;

TEST(WeightedGraph, AddEdgeCreatesBothEndpoints)
{
    WeightedGraph g;
    g.add_edge("A", "B", 0.5);
    EXPECT_EQ(g.node_count(), 2u);
    EXPECT_EQ(g.edge_count(), 1u);
    EXPECT_DOUBLE_EQ(g.weight("A", "B"), 0.5);
    EXPECT_EQ(g.labels(), (std::vector<std::string>{"A", "B"}));
}

TEST(WeightedGraph, RepeatedEdgeMergesBySum)
{
    WeightedGraph g;
    g.add_edge("A", "B", 0.2);
    g.add_edge("B", "A", 0.2);
    EXPECT_EQ(g.edge_count(), 1u);
    EXPECT_DOUBLE_EQ(g.weight("A", "B"), 0.4);
    EXPECT_DOUBLE_EQ(g.weight("B", "A"), 0.4);
}

TEST(WeightedGraph, RejectsNonPositiveWeight)
{
    WeightedGraph g;
    EXPECT_THROW(g.add_edge("A", "B", 0.0), ValidationError);
    EXPECT_THROW(g.add_edge("A", "B", -1.0), ValidationError);
    EXPECT_THROW(g.add_edge("A", "B", std::nan("")), ValidationError);
    EXPECT_THROW(g.add_edge("", "B", 1.0), ValidationError);
}

TEST(WeightedGraph, EndpointOrderDoesNotMatter)
{
    WeightedGraph a;
    WeightedGraph b;
    a.add_node("u");
    a.add_node("v");
    b.add_node("u");
    b.add_node("v");
    a.add_edge("u", "v", 0.7);
    b.add_edge("v", "u", 0.7);
    EXPECT_EQ(a, b);
}

TEST(WeightedGraph, Strength)
{
    WeightedGraph star;
    star.add_edge("c", "x", 1.0);
    star.add_edge("c", "y", 1.0);
    star.add_edge("c", "z", 1.0);
    star.add_node("lonely");
    EXPECT_DOUBLE_EQ(star.strength("c"), 3.0);
    EXPECT_DOUBLE_EQ(star.strength("lonely"), 0.0);
    EXPECT_THROW(star.strength("missing"), LookupError);

    WeightedGraph loop;
    loop.add_edge("v", "v", 1.5);
    EXPECT_DOUBLE_EQ(loop.strength("v"), 3.0);
    EXPECT_EQ(loop.self_loop_count(), 1u);
    EXPECT_EQ(loop.edge_count(), 0u);
}

TEST(WeightedGraph, TotalWeight)
{
    WeightedGraph one;
    one.add_edge("a", "b", 1.0);
    EXPECT_DOUBLE_EQ(one.total_weight(), 1.0);

    WeightedGraph two;
    two.add_edge("a", "b", 1.0);
    two.add_edge("c", "d", 1.0);
    EXPECT_DOUBLE_EQ(two.total_weight(), 2.0);

    EXPECT_DOUBLE_EQ(WeightedGraph{}.total_weight(), 0.0);
}

TEST(WeightedGraph, Density)
{
    EXPECT_DOUBLE_EQ(fixtures::complete_graph({"a", "b", "c"}).density(), 1.0);

    WeightedGraph pair;
    pair.add_node("a");
    pair.add_node("b");
    EXPECT_DOUBLE_EQ(pair.density(), 0.0);

    WeightedGraph single;
    single.add_node("a");
    EXPECT_THROW(single.density(), DomainError);
    EXPECT_THROW(WeightedGraph{}.density(), DomainError);
}

TEST(WeightedGraph, DensityMatchesFormulaAtDatasetScale)
{
    // 172 nodes, 519 edges: 519 / C(172, 2) = 519 / 14706.
    WeightedGraph g;
    for (int i = 0; i < 172; ++i)
        g.add_node("n" + std::to_string(i));
    int added = 0;
    for (NodeIndex u = 0; u < 172 && added < 519; ++u)
        for (NodeIndex v = u + 1; v < 172 && added < 519; ++v, ++added)
            g.add_edge(u, v, 1.0);
    ASSERT_EQ(g.edge_count(), 519u);
    EXPECT_NEAR(g.density(), 519.0 / 14706.0, 1e-15);
    EXPECT_NEAR(g.density(), 0.035292, 1e-6);
}

TEST(WeightedGraph, SelfLoopsExcludedFromDensity)
{
    WeightedGraph g;
    g.add_edge("a", "a", 1.0);
    g.add_edge("a", "b", 1.0);
    EXPECT_DOUBLE_EQ(g.density(), 1.0);
}

TEST(WeightedGraph, EdgesListedOnceInIndexOrder)
{
    WeightedGraph g;
    g.add_edge("b", "a", 2.0);
    g.add_edge("a", "a", 1.0);
    g.add_edge("c", "a", 3.0);
    const auto edges = g.edges();
    ASSERT_EQ(edges.size(), 3u);
    EXPECT_EQ(edges[0], (WeightedGraph::Edge{0, 1, 2.0}));
    EXPECT_EQ(edges[1], (WeightedGraph::Edge{1, 1, 1.0}));
    EXPECT_EQ(edges[2], (WeightedGraph::Edge{1, 2, 3.0}));
}

TEST(WeightedGraphProperty, StrengthsSumToTwiceTotalWeight)
{
    SplitMix64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        WeightedGraph g = fixtures::random_graph(rng, 2 + rng.below(15), 0.4);
        if (rng.below(2))
            g.add_edge(rng.below(g.node_count()), 0, 1.0 - rng.uniform());
        double sum = 0.0;
        for (NodeIndex v = 0; v < g.node_count(); ++v)
            sum += g.strength(v);
        EXPECT_EQ(sum, 2.0 * g.total_weight());
        EXPECT_GE(g.density(), 0.0);
        EXPECT_LE(g.density(), 1.0);
    }
}
