#include "cointerest/louvain.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "cointerest/errors.hpp"
#include "cointerest/random.hpp"

namespace cointerest {

void LouvainConfig::validate() const
{
    if (!(min_delta >= 0.0) || !std::isfinite(min_delta))
        throw ValidationError("min_delta must be finite and non-negative");
}

Partition single_partition(const WeightedGraph& graph)
{
    return Partition::singletons(graph.node_count());
}

namespace {

std::vector<NodeIndex> shuffled_order(std::size_t n, SplitMix64& rng)
{
    std::vector<NodeIndex> order(n);
    std::iota(order.begin(), order.end(), NodeIndex{0});
    shuffle(std::span<NodeIndex>(order), rng);
    return order;
}

} // namespace

Partition move_nodes(const WeightedGraph& graph, const Partition& partition,
                     const LouvainConfig& config)
{
    SplitMix64 rng(config.seed);
    const auto order = shuffled_order(graph.node_count(), rng);
    return move_nodes(graph, partition, config, order);
}

Partition move_nodes(const WeightedGraph& graph, const Partition& partition,
                     const LouvainConfig& config, std::span<const NodeIndex> order,
                     std::vector<double>* trace)
{
    config.validate();
    check_partition(graph, partition);
    const std::size_t n = graph.node_count();
    if (order.size() != n)
        throw ValidationError("visit order must list every node exactly once");
    {
        std::vector<bool> seen(n, false);
        for (NodeIndex v : order) {
            if (v >= n || seen[v])
                throw ValidationError("visit order must list every node exactly once");
            seen[v] = true;
        }
    }

    const double m = graph.total_weight();
    if (!(m > 0.0))
        return partition;

    const double gamma = config.resolution.gamma();
    const auto strength = graph.strengths();
    std::vector<ClusterId> cluster = partition.assignment();
    // Ids stay below n while nodes move, so a flat array holds the totals.
    std::vector<double> total(n, 0.0);
    for (NodeIndex v = 0; v < n; ++v)
        total[cluster[v]] += strength[v];

    double q = modularity(graph, partition, config.resolution);
    if (trace)
        trace->push_back(q);

    std::map<ClusterId, double> link;
    for (;;) {
        bool moved = false;
        for (NodeIndex v : order) {
            const ClusterId source = cluster[v];
            const double k = strength[v];

            link.clear();
            for (const auto& [u, w] : graph.neighbors(v))
                link[cluster[u]] += w;

            // Take v out of its cluster, then score every neighbouring
            // cluster against putting it back; staying therefore scores 0.
            total[source] -= k;
            auto own = link.find(source);
            const double stay = (own == link.end() ? 0.0 : own->second)
                - gamma * k * total[source] / (2.0 * m);

            double best_gain = 0.0;
            ClusterId best = source;
            for (const auto& [c, w] : link) {
                if (c == source)
                    continue;
                const double gain = (w - gamma * k * total[c] / (2.0 * m) - stay) / m;
                if (gain > best_gain) {
                    best_gain = gain;
                    best = c;
                }
            }
            total[best] += k;
            if (best != source) {
                cluster[v] = best;
                moved = true;
            }
        }

        if (!moved)
            break;
        const double next_q = modularity(graph, Partition::canonical(cluster), config.resolution);
        if (trace)
            trace->push_back(next_q);
        const double improvement = next_q - q;
        q = next_q;
        if (improvement <= config.min_delta)
            break;
    }
    return Partition::canonical(cluster);
}

WeightedGraph reduce_clusters(const WeightedGraph& graph, const Partition& partition)
{
    // Unlike a bare cluster-adjacency graph, this keeps crossing weights and
    // turns intra-cluster weight into self-loops, which leaves m and Q
    // unchanged between levels.
    check_partition(graph, partition);
    WeightedGraph reduced;
    for (ClusterId c = 0; c < partition.cluster_count(); ++c)
        reduced.add_node(std::to_string(c));
    for (const auto& e : graph.edges())
        reduced.add_edge(partition.cluster_of(e.u), partition.cluster_of(e.v), e.weight);
    return reduced;
}

ClusteringResult louvain(const WeightedGraph& graph, const LouvainConfig& config)
{
    config.validate();
    if (graph.empty())
        throw ValidationError("cannot cluster an empty graph");

    ClusteringResult result;
    if (!(graph.total_weight() > 0.0)) {
        result.partition = single_partition(graph);
        result.degenerate = true;
        result.levels = 1;
        return result;
    }

    SplitMix64 rng(config.seed);
    std::vector<ClusterId> membership(graph.node_count());
    std::iota(membership.begin(), membership.end(), ClusterId{0});

    WeightedGraph level = graph;
    for (;;) {
        const auto order = shuffled_order(level.node_count(), rng);
        std::vector<double> trace;
        const Partition moved = move_nodes(level, single_partition(level), config, order, &trace);
        // Every level starts from the Q the previous one ended at.
        const auto first = result.sweep_modularity.empty() ? trace.begin() : trace.begin() + 1;
        result.sweep_modularity.insert(result.sweep_modularity.end(), first, trace.end());
        ++result.levels;

        if (moved.cluster_count() == level.node_count())
            break;
        for (auto& c : membership)
            c = moved.cluster_of(c);
        level = reduce_clusters(level, moved);
    }

    result.partition = Partition::canonical(membership);
    result.modularity = modularity(graph, result.partition, config.resolution);
    return result;
}

} // namespace cointerest
