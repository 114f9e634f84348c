#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cointerest {

using NodeIndex = std::size_t;

/// Undirected weighted graph over text-labelled nodes.
///
/// Nodes keep their first-insertion order and are addressed either by label or
/// by their dense index in that order. Each unordered pair carries at most one
/// strictly positive weight; adding a pair twice sums the weights. Self-loops
/// are stored separately from the neighbour maps and count twice toward a
/// node's strength, so that the sum of all strengths is always 2m.
class WeightedGraph {
public:
    struct Edge {
        NodeIndex u;
        NodeIndex v;
        double weight;

        bool operator==(const Edge&) const = default;
    };

    using Neighbors = std::map<NodeIndex, double>;

    WeightedGraph() = default;

    /// Returns the index of `label`, inserting it at the end if it is new.
    NodeIndex add_node(std::string_view label);

    void add_edge(std::string_view u, std::string_view v, double weight);
    void add_edge(NodeIndex u, NodeIndex v, double weight);

    std::size_t node_count() const noexcept { return labels_.size(); }
    /// Distinct edges between two different nodes.
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::size_t self_loop_count() const noexcept { return self_loop_count_; }
    bool empty() const noexcept { return labels_.empty(); }

    const std::string& label(NodeIndex v) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<NodeIndex> find(std::string_view label) const;
    /// Throws LookupError for unknown labels.
    NodeIndex index_of(std::string_view label) const;
    bool contains(std::string_view label) const { return find(label).has_value(); }

    /// Weight of {u,v}; 0 when there is no edge. For u == v this is the
    /// stored self-loop weight, not its doubled adjacency entry.
    double weight(NodeIndex u, NodeIndex v) const;
    double weight(std::string_view u, std::string_view v) const;

    /// Neighbours of v other than v itself, in ascending index order.
    const Neighbors& neighbors(NodeIndex v) const;
    double self_loop(NodeIndex v) const;

    /// Weighted degree k_v. A self-loop of weight w contributes 2w.
    double strength(NodeIndex v) const;
    double strength(std::string_view label) const { return strength(index_of(label)); }
    std::vector<double> strengths() const;

    /// m, defined through 2m = sum of strengths.
    double total_weight() const;

    /// E / C(V,2), ignoring self-loops. Throws DomainError when V < 2.
    double density() const;

    /// Every edge once, self-loops included, ordered by (u, v) with u <= v.
    std::vector<Edge> edges() const;

    /// Copy of the graph with every weight passed through `f`. The result of
    /// `f` must be strictly positive.
    WeightedGraph map_weights(const std::function<double(double)>& f) const;

    bool operator==(const WeightedGraph& other) const;

private:
    void check_index(NodeIndex v) const;

    std::vector<std::string> labels_;
    std::map<std::string, NodeIndex, std::less<>> index_;
    std::vector<Neighbors> adjacency_;
    std::vector<double> self_loops_;
    std::size_t edge_count_ = 0;
    std::size_t self_loop_count_ = 0;
};

} // namespace cointerest
