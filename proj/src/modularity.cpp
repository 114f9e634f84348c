#include "cointerest/modularity.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

#include "cointerest/errors.hpp"

namespace cointerest {

Partition::Partition(std::vector<ClusterId> assignment)
    : assignment_(std::move(assignment))
{
    std::vector<bool> used;
    for (ClusterId c : assignment_) {
        if (c >= assignment_.size())
            throw ValidationError("cluster id " + std::to_string(c) + " exceeds node count");
        if (c >= used.size())
            used.resize(c + 1, false);
        used[c] = true;
    }
    for (std::size_t c = 0; c < used.size(); ++c)
        if (!used[c])
            throw ValidationError("cluster id " + std::to_string(c) + " is empty");
    cluster_count_ = used.size();
}

Partition Partition::canonical(const std::vector<ClusterId>& raw)
{
    std::unordered_map<ClusterId, ClusterId> relabel;
    std::vector<ClusterId> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto [it, inserted] = relabel.try_emplace(raw[i], relabel.size());
        out[i] = it->second;
    }
    return Partition(std::move(out));
}

Partition Partition::singletons(std::size_t node_count)
{
    std::vector<ClusterId> a(node_count);
    for (std::size_t i = 0; i < node_count; ++i)
        a[i] = i;
    return Partition(std::move(a));
}

ClusterId Partition::cluster_of(NodeIndex v) const
{
    if (v >= assignment_.size())
        throw LookupError("node index " + std::to_string(v) + " not in partition");
    return assignment_[v];
}

std::vector<std::vector<NodeIndex>> Partition::clusters() const
{
    std::vector<std::vector<NodeIndex>> out(cluster_count_);
    for (NodeIndex v = 0; v < assignment_.size(); ++v)
        out[assignment_[v]].push_back(v);
    return out;
}

ResolutionParams::ResolutionParams(double gamma)
    : gamma_(gamma)
{
    if (!std::isfinite(gamma) || gamma < 0.0)
        throw ValidationError("resolution gamma must be finite and non-negative");
}

void check_partition(const WeightedGraph& graph, const Partition& partition)
{
    if (partition.node_count() != graph.node_count())
        throw ValidationError("partition covers " + std::to_string(partition.node_count())
                              + " nodes but graph has " + std::to_string(graph.node_count()));
}

double modularity(const WeightedGraph& graph, const Partition& partition,
                  const ResolutionParams& params)
{
    check_partition(graph, partition);
    const double m = graph.total_weight();
    if (!(m > 0.0))
        throw DomainError("modularity is undefined for a graph with zero total weight");

    const std::size_t k = partition.cluster_count();
    std::vector<double> internal(k, 0.0);
    std::vector<double> total(k, 0.0);
    for (NodeIndex v = 0; v < graph.node_count(); ++v)
        total[partition.cluster_of(v)] += graph.strength(v);
    for (const auto& e : graph.edges()) {
        const ClusterId c = partition.cluster_of(e.u);
        if (c == partition.cluster_of(e.v))
            internal[c] += 2.0 * e.weight;
    }

    const double two_m = 2.0 * m;
    double q = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
        const double share = total[c] / two_m;
        q += internal[c] / two_m - params.gamma() * share * share;
    }
    return q;
}

double delta_move(const WeightedGraph& graph, const Partition& partition, NodeIndex node,
                  ClusterId target, const ResolutionParams& params)
{
    check_partition(graph, partition);
    if (node >= graph.node_count())
        throw ValidationError("node index " + std::to_string(node) + " not in graph");
    if (target != kFreshCluster && target >= partition.cluster_count())
        throw ValidationError("target cluster " + std::to_string(target) + " does not exist");
    const double m = graph.total_weight();
    if (!(m > 0.0))
        throw DomainError("modularity is undefined for a graph with zero total weight");

    const ClusterId source = partition.cluster_of(node);
    if (target == source)
        return 0.0;

    // Weight from `node` to the rest of its source cluster and to the target,
    // and the strength totals of both clusters (source including `node`).
    double to_source = 0.0;
    double to_target = 0.0;
    for (const auto& [u, w] : graph.neighbors(node)) {
        const ClusterId c = partition.cluster_of(u);
        if (c == source)
            to_source += w;
        else if (c == target)
            to_target += w;
    }
    double source_total = 0.0;
    double target_total = 0.0;
    for (NodeIndex v = 0; v < graph.node_count(); ++v) {
        const ClusterId c = partition.cluster_of(v);
        if (c == source)
            source_total += graph.strength(v);
        else if (c == target)
            target_total += graph.strength(v);
    }

    const double k = graph.strength(node);
    return (to_target - to_source) / m
        - params.gamma() * k * (target_total - source_total + k) / (2.0 * m * m);
}

Partition apply_move(const Partition& partition, NodeIndex node, ClusterId target)
{
    if (node >= partition.node_count())
        throw ValidationError("node index " + std::to_string(node) + " not in partition");
    if (target != kFreshCluster && target >= partition.cluster_count())
        throw ValidationError("target cluster " + std::to_string(target) + " does not exist");
    auto raw = partition.assignment();
    raw[node] = target == kFreshCluster ? partition.cluster_count() : target;
    return Partition::canonical(raw);
}

} // namespace cointerest
