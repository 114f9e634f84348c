#include <regex>
#include <set>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cointerest/errors.hpp"
#include "cointerest/export.hpp"
#include "test_support.hpp"

using namespace cointerest;

TEST(ExportDot, TwoNodeExample)
{
    WeightedGraph g;
    g.add_edge("A", "B", 1.0);
    EXPECT_EQ(export_graph(g, Partition({0, 1}), GraphFormat::Dot),
              "graph G {\n"
              "  \"A\" [cluster=0, color=\"#1f77b4\"];\n"
              "  \"B\" [cluster=1, color=\"#ff7f0e\"];\n"
              "  \"A\" -- \"B\" [weight=1.00000];\n"
              "}\n");
}

TEST(ExportDot, SortedEdgesEscapingAndPaletteCycle)
{
    WeightedGraph g;
    for (int i = 0; i < 13; ++i)
        g.add_node("n" + std::to_string(i));
    g.add_edge("n9", "n1", 0.0123456789);
    g.add_edge("say \"hi\"", "n0", 2.5);
    std::vector<ClusterId> ids(14);
    for (ClusterId c = 0; c < 14; ++c)
        ids[c] = c;
    const auto dot = to_dot(g, Partition(ids));
    EXPECT_NE(dot.find("\"n12\" [cluster=12, color=\"#1f77b4\"]"), std::string::npos);
    EXPECT_NE(dot.find("\"n1\" -- \"n9\" [weight=0.0123457];"), std::string::npos);
    EXPECT_NE(dot.find("\"n0\" -- \"say \\\"hi\\\"\" [weight=2.50000];"), std::string::npos);
    EXPECT_LT(dot.find("\"n0\" --"), dot.find("\"n1\" --"));
}

TEST(ExportGraphML, TwoTrianglesStructure)
{
    const auto g = fixtures::two_triangles();
    const auto xml = export_graph(g, Partition({0, 0, 0, 1, 1, 1}), GraphFormat::GraphML);
    EXPECT_EQ(xml.rfind("<?xml version=\"1.0\" encoding=\"UTF-8\"?>", 0), 0u);
    EXPECT_NE(xml.find("edgedefault=\"undirected\""), std::string::npos);

    const std::regex node_re("<node id=\"(n\\d+)\">.*?<data key=\"cluster\">(\\d+)</data>");
    std::set<std::string> ids;
    std::set<std::string> clusters;
    for (auto it = std::sregex_iterator(xml.begin(), xml.end(), node_re); it != std::sregex_iterator(); ++it) {
        ids.insert((*it)[1]);
        clusters.insert((*it)[2]);
    }
    EXPECT_EQ(ids.size(), 6u);
    EXPECT_EQ(clusters, (std::set<std::string>{"0", "1"}));

    const std::regex edge_re("<edge source=\"(n\\d+)\" target=\"(n\\d+)\">");
    std::size_t edges = 0;
    for (auto it = std::sregex_iterator(xml.begin(), xml.end(), edge_re); it != std::sregex_iterator(); ++it) {
        EXPECT_TRUE(ids.count((*it)[1]));
        EXPECT_TRUE(ids.count((*it)[2]));
        ++edges;
    }
    EXPECT_EQ(edges, 6u);
}

TEST(ExportGraphML, EscapesLabels)
{
    WeightedGraph g;
    g.add_edge("A & B", "<C>", 1.0);
    const auto xml = to_graphml(g, Partition({0, 0}));
    EXPECT_NE(xml.find("A &amp; B"), std::string::npos);
    EXPECT_NE(xml.find("&lt;C&gt;"), std::string::npos);
}

TEST(ExportJson, EmptyGraph)
{
    const auto doc = nlohmann::json::parse(to_json(WeightedGraph{}, Partition{}));
    EXPECT_EQ(doc["nodes"], nlohmann::json::array());
    EXPECT_EQ(doc["edges"], nlohmann::json::array());
    EXPECT_TRUE(doc.contains("metadata"));
    EXPECT_TRUE(doc["metadata"]["density"].is_null());
}

TEST(ExportJson, ClusterIdsAndNodesCovered)
{
    const auto g = fixtures::two_triangles();
    const auto text = to_json(g, Partition({0, 0, 0, 1, 1, 1}));
    EXPECT_EQ(text.back(), '\n');
    const auto doc = nlohmann::json::parse(text);
    std::multiset<std::string> seen;
    for (std::size_t c = 0; c < doc["clusters"].size(); ++c) {
        EXPECT_EQ(doc["clusters"][c]["id"], c);
        for (const auto& m : doc["clusters"][c]["members"])
            seen.insert(static_cast<std::string>(m));
    }
    EXPECT_EQ(seen, (std::multiset<std::string>{"a", "b", "c", "d", "e", "f"}));
}

TEST(ExportGraph, PartitionMismatch)
{
    EXPECT_THROW(export_graph(fixtures::two_triangles(), Partition({0, 0}), GraphFormat::Dot), ValidationError);
    EXPECT_THROW(read_graph_json("{\"nodes\":[\"a\"],\"edges\":[{\"source\":\"a\",\"target\":\"z\",\"weight\":1}]}"),
                 FormatError);
    EXPECT_THROW(read_graph_json("[]"), FormatError);
}

TEST(ExportJsonProperty, RoundTrip)
{
    SplitMix64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng.below(20);
        WeightedGraph g = fixtures::random_graph(rng, n, 0.3);
        if (rng.below(3) == 0)
            g.add_edge(rng.below(n), rng.below(n), rng.uniform() + 1e-3);
        const Partition p = Partition::canonical(fixtures::random_assignment(rng, n));
        const auto back = read_graph_json(to_json(g, p));
        ASSERT_EQ(back.labels(), g.labels());
        ASSERT_EQ(back.edge_count(), g.edge_count());
        for (const auto& e : g.edges())
            EXPECT_NEAR(back.weight(e.u, e.v), e.weight, 1e-12);
        EXPECT_EQ(to_json(g, p), to_json(back, p));
    }
}
