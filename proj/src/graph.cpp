#include "cointerest/graph.hpp"

#include <cmath>

#include "cointerest/errors.hpp"

namespace cointerest {

NodeIndex WeightedGraph::add_node(std::string_view label)
{
    if (label.empty())
        throw ValidationError("node label must not be empty");
    if (auto it = index_.find(label); it != index_.end())
        return it->second;
    const NodeIndex v = labels_.size();
    labels_.emplace_back(label);
    index_.emplace(labels_.back(), v);
    adjacency_.emplace_back();
    self_loops_.push_back(0.0);
    return v;
}

void WeightedGraph::add_edge(std::string_view u, std::string_view v, double weight)
{
    if (!(weight > 0.0) || !std::isfinite(weight))
        throw ValidationError("edge weight must be positive and finite, got " + std::to_string(weight));
    const NodeIndex a = add_node(u);
    const NodeIndex b = add_node(v);
    add_edge(a, b, weight);
}

void WeightedGraph::add_edge(NodeIndex u, NodeIndex v, double weight)
{
    if (!(weight > 0.0) || !std::isfinite(weight))
        throw ValidationError("edge weight must be positive and finite, got " + std::to_string(weight));
    check_index(u);
    check_index(v);
    if (u == v) {
        if (self_loops_[u] == 0.0)
            ++self_loop_count_;
        self_loops_[u] += weight;
        return;
    }
    auto [it, inserted] = adjacency_[u].try_emplace(v, 0.0);
    if (inserted)
        ++edge_count_;
    it->second += weight;
    adjacency_[v][u] = it->second;
}

const std::string& WeightedGraph::label(NodeIndex v) const
{
    check_index(v);
    return labels_[v];
}

std::optional<NodeIndex> WeightedGraph::find(std::string_view label) const
{
    if (auto it = index_.find(label); it != index_.end())
        return it->second;
    return std::nullopt;
}

NodeIndex WeightedGraph::index_of(std::string_view label) const
{
    if (auto v = find(label))
        return *v;
    throw LookupError("unknown node '" + std::string(label) + "'");
}

double WeightedGraph::weight(NodeIndex u, NodeIndex v) const
{
    check_index(u);
    check_index(v);
    if (u == v)
        return self_loops_[u];
    const auto& nb = adjacency_[u];
    auto it = nb.find(v);
    return it == nb.end() ? 0.0 : it->second;
}

double WeightedGraph::weight(std::string_view u, std::string_view v) const
{
    return weight(index_of(u), index_of(v));
}

const WeightedGraph::Neighbors& WeightedGraph::neighbors(NodeIndex v) const
{
    check_index(v);
    return adjacency_[v];
}

double WeightedGraph::self_loop(NodeIndex v) const
{
    check_index(v);
    return self_loops_[v];
}

double WeightedGraph::strength(NodeIndex v) const
{
    check_index(v);
    double k = 0.0;
    for (const auto& [u, w] : adjacency_[v])
        k += w;
    return k + 2.0 * self_loops_[v];
}

std::vector<double> WeightedGraph::strengths() const
{
    std::vector<double> k(node_count());
    for (NodeIndex v = 0; v < node_count(); ++v)
        k[v] = strength(v);
    return k;
}

double WeightedGraph::total_weight() const
{
    double two_m = 0.0;
    for (NodeIndex v = 0; v < node_count(); ++v)
        two_m += strength(v);
    return two_m / 2.0;
}

double WeightedGraph::density() const
{
    const auto n = static_cast<double>(node_count());
    if (node_count() < 2)
        throw DomainError("density is undefined for fewer than two nodes");
    return static_cast<double>(edge_count_) / (n * (n - 1.0) / 2.0);
}

std::vector<WeightedGraph::Edge> WeightedGraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_ + self_loop_count_);
    for (NodeIndex u = 0; u < node_count(); ++u) {
        if (self_loops_[u] > 0.0)
            out.push_back({u, u, self_loops_[u]});
        for (auto it = adjacency_[u].upper_bound(u); it != adjacency_[u].end(); ++it)
            out.push_back({u, it->first, it->second});
    }
    return out;
}

WeightedGraph WeightedGraph::map_weights(const std::function<double(double)>& f) const
{
    WeightedGraph g;
    for (const auto& l : labels_)
        g.add_node(l);
    for (const auto& e : edges())
        g.add_edge(e.u, e.v, f(e.weight));
    return g;
}

bool WeightedGraph::operator==(const WeightedGraph& other) const
{
    return labels_ == other.labels_ && adjacency_ == other.adjacency_
        && self_loops_ == other.self_loops_;
}

void WeightedGraph::check_index(NodeIndex v) const
{
    if (v >= labels_.size())
        throw LookupError("node index " + std::to_string(v) + " out of range");
}

} // namespace cointerest
