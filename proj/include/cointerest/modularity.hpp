#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "cointerest/graph.hpp"

namespace cointerest {

using ClusterId = std::size_t;

/// Assignment of each node index to a cluster id in 0..k-1, with every id in
/// that range used at least once.
class Partition {
public:
    Partition() = default;
    /// Throws ValidationError if the ids are not dense.
    explicit Partition(std::vector<ClusterId> assignment);

    /// Relabels arbitrary ids to 0..k-1 in order of first appearance.
    static Partition canonical(const std::vector<ClusterId>& raw);
    static Partition singletons(std::size_t node_count);

    std::size_t node_count() const noexcept { return assignment_.size(); }
    std::size_t cluster_count() const noexcept { return cluster_count_; }
    ClusterId cluster_of(NodeIndex v) const;
    const std::vector<ClusterId>& assignment() const noexcept { return assignment_; }

    /// Members of each cluster, ascending node index within a cluster.
    std::vector<std::vector<NodeIndex>> clusters() const;

    /// Same grouping under relabelling to first-appearance order.
    Partition canonicalized() const { return canonical(assignment_); }

    bool operator==(const Partition&) const = default;

private:
    std::vector<ClusterId> assignment_;
    std::size_t cluster_count_ = 0;
};

/// Resolution coefficient on the null-model term.
class ResolutionParams {
public:
    /// gamma must be finite and non-negative.
    explicit ResolutionParams(double gamma = 1.0);
    double gamma() const noexcept { return gamma_; }

private:
    double gamma_;
};

/// Throws ValidationError unless `partition` assigns exactly the graph's nodes.
void check_partition(const WeightedGraph& graph, const Partition& partition);

/// Q = 1/(2m) * sum_ij [A_ij - gamma k_i k_j / 2m] delta(c_i, c_j), summed over
/// ordered pairs including i = j, with A_ii = 2 * self-loop weight.
/// Throws DomainError when m = 0.
double modularity(const WeightedGraph& graph, const Partition& partition,
                  const ResolutionParams& params = ResolutionParams{});

/// Target sentinel meaning "a new cluster holding only the moved node".
inline constexpr ClusterId kFreshCluster = std::numeric_limits<ClusterId>::max();

/// Change in Q from moving `node` into cluster `target`, computed from local
/// quantities only.
double delta_move(const WeightedGraph& graph, const Partition& partition, NodeIndex node,
                  ClusterId target, const ResolutionParams& params = ResolutionParams{});

/// Partition after the move, canonicalized. Leaves no empty clusters.
Partition apply_move(const Partition& partition, NodeIndex node, ClusterId target);

} // namespace cointerest
