#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "cointerest/graph.hpp"
#include "cointerest/modularity.hpp"

namespace cointerest {

enum class GraphFormat { Dot, GraphML, Json };

/// Cluster colours, cycled by cluster id.
inline constexpr std::array<std::string_view, 12> kClusterPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
};

std::string_view cluster_color(ClusterId c);

struct LabelledEdge {
    std::string source;
    std::string target;
    double weight;
};

/// Edges with source <= target by label, sorted by (source, target).
std::vector<LabelledEdge> sorted_edges(const WeightedGraph& graph);

/// Serialises `graph` with each node tagged by its cluster. Nodes appear in
/// insertion order, edges sorted by their (lesser, greater) label pair.
/// Throws ValidationError if `partition` does not cover the graph.
std::string export_graph(const WeightedGraph& graph, const Partition& partition, GraphFormat format);

std::string to_dot(const WeightedGraph& graph, const Partition& partition);
std::string to_graphml(const WeightedGraph& graph, const Partition& partition);
std::string to_json(const WeightedGraph& graph, const Partition& partition);

/// Reads the "nodes" and "edges" arrays of a JSON export back into a graph.
WeightedGraph read_graph_json(std::string_view text);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

} // namespace cointerest
