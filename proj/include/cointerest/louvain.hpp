#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cointerest/graph.hpp"
#include "cointerest/modularity.hpp"

namespace cointerest {

struct LouvainConfig {
    ResolutionParams resolution{};
    std::uint64_t seed = 0;
    /// A sweep that raises Q by no more than this ends the local-move phase.
    double min_delta = 1e-12;

    void validate() const;
};

struct ClusteringResult {
    /// Clusters over the original graph's nodes, ids ordered by each
    /// cluster's first node.
    Partition partition;
    /// Q of `partition`; empty when the graph has zero total weight.
    std::optional<double> modularity;
    /// Number of local-move phases run.
    std::size_t levels = 0;
    /// Set when m = 0 and every node was returned as its own cluster.
    bool degenerate = false;
    /// Q at the start and after every sweep, across all levels.
    std::vector<double> sweep_modularity;
};

/// Every node in its own cluster, ids in insertion order.
Partition single_partition(const WeightedGraph& graph);

/// Greedy local moves starting from `partition`, visiting nodes in a shuffled
/// order derived from `config.seed`.
Partition move_nodes(const WeightedGraph& graph, const Partition& partition,
                     const LouvainConfig& config);

/// Same, with an explicit visit order (a permutation of the node indices).
/// When `trace` is given, Q before the first sweep and after each sweep is
/// appended to it.
Partition move_nodes(const WeightedGraph& graph, const Partition& partition,
                     const LouvainConfig& config, std::span<const NodeIndex> order,
                     std::vector<double>* trace = nullptr);

/// Collapses each cluster into one node labelled by its cluster id. Weights
/// between clusters are summed into one edge; weights inside a cluster,
/// original self-loops included, are summed into a self-loop.
WeightedGraph reduce_clusters(const WeightedGraph& graph, const Partition& partition);

/// Alternates local moves and aggregation until a level merges nothing.
/// Throws ValidationError on an empty graph.
ClusteringResult louvain(const WeightedGraph& graph, const LouvainConfig& config = {});

} // namespace cointerest
