#include "cointerest/resolution_search.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cointerest/errors.hpp"

namespace cointerest {

void GammaSearchConfig::validate() const
{
    if (min_clusters < 1)
        throw ValidationError("min_clusters must be at least 1");
    if (!std::isfinite(lo) || lo < 0.0)
        throw ValidationError("gamma lower bound must be finite and non-negative");
    if (!std::isfinite(hi) || !(lo < hi))
        throw ValidationError("gamma bounds must satisfy lo < hi");
    if (!(precision > 0.0) || !std::isfinite(precision))
        throw ValidationError("precision must be positive");
    if (!std::isfinite(hi_cap))
        throw ValidationError("gamma cap must be finite");
}

GammaSearchResult find_min_gamma(const WeightedGraph& graph, const GammaSearchConfig& config)
{
    config.validate();
    if (graph.empty())
        throw ValidationError("cannot search resolutions on an empty graph");
    if (!(graph.total_weight() > 0.0))
        throw DomainError("resolution search needs a graph with positive total weight");
    if (config.min_clusters > graph.node_count())
        throw InfeasibleError("cannot form " + std::to_string(config.min_clusters)
                                  + " clusters from " + std::to_string(graph.node_count()) + " nodes",
                              graph.node_count());

    GammaSearchResult out;
    auto run = [&](double gamma) {
        LouvainConfig lc{ResolutionParams(gamma), config.seed, config.min_delta};
        ClusteringResult r = louvain(graph, lc);
        ++out.louvain_calls;
        out.trials.push_back({gamma, r.partition.cluster_count()});
        return r;
    };
    auto feasible = [&](const ClusteringResult& r) {
        return r.partition.cluster_count() >= config.min_clusters;
    };

    double lo = config.lo;
    double hi = config.hi;
    const double cap = std::max(config.hi_cap, config.hi);

    ClusteringResult at_lo = run(lo);
    if (feasible(at_lo)) {
        out.gamma = lo;
        out.bracket_lo = lo;
        out.clustering = std::move(at_lo);
        return out;
    }

    ClusteringResult at_hi = run(hi);
    while (!feasible(at_hi)) {
        if (hi >= cap)
            throw InfeasibleError("gamma cap " + std::to_string(cap) + " yields only "
                                      + std::to_string(at_hi.partition.cluster_count())
                                      + " clusters, need " + std::to_string(config.min_clusters),
                                  at_hi.partition.cluster_count());
        lo = hi;
        hi = std::min(2.0 * hi, cap);
        ++out.doubling_steps;
        at_hi = run(hi);
    }

    // Invariant: hi is feasible, lo is not.
    while (hi - lo > config.precision) {
        const double mid = lo + (hi - lo) / 2.0;
        if (!(mid > lo && mid < hi))
            break;
        ClusteringResult r = run(mid);
        if (feasible(r)) {
            hi = mid;
            at_hi = std::move(r);
        } else {
            lo = mid;
        }
    }

    out.gamma = hi;
    out.bracket_lo = lo;
    out.clustering = std::move(at_hi);
    return out;
}

} // namespace cointerest
