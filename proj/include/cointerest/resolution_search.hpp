#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cointerest/graph.hpp"
#include "cointerest/louvain.hpp"

namespace cointerest {

struct GammaSearchConfig {
    std::size_t min_clusters = 10;
    double lo = 0.0;
    double hi = 8.0;
    /// hi is doubled while infeasible, but never beyond this.
    double hi_cap = 1024.0;
    double precision = 1e-9;
    /// Reused for every trial clustering.
    std::uint64_t seed = 0;
    double min_delta = 1e-12;

    void validate() const;
};

struct GammaTrial {
    double gamma;
    std::size_t clusters;
};

struct GammaSearchResult {
    /// Smallest feasible resolution found; the bracket's upper end.
    double gamma = 0.0;
    /// The clustering computed at `gamma` during the search.
    ClusteringResult clustering;
    std::size_t louvain_calls = 0;
    std::size_t doubling_steps = 0;
    /// Bracket at termination: `bracket_lo` failed (or is the configured lo).
    double bracket_lo = 0.0;
    std::vector<GammaTrial> trials;
};

/// Binary search for the minimum gamma whose clustering has at least
/// `min_clusters` clusters. Cluster count is assumed, not proven, to grow
/// with gamma; the guarantee is only that the returned gamma is feasible and
/// lies within `precision` of an infeasible one (or of lo).
///
/// Throws InfeasibleError when min_clusters exceeds the node count or the
/// cap is reached without enough clusters.
GammaSearchResult find_min_gamma(const WeightedGraph& graph, const GammaSearchConfig& config = {});

} // namespace cointerest
