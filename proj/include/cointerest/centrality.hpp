#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cointerest/graph.hpp"

namespace cointerest {

struct CentralityScores {
    /// Node labels, in graph order; `scores[i]` belongs to `labels[i]`.
    std::vector<std::string> labels;
    /// Non-negative, unit Euclidean norm.
    std::vector<double> scores;
    /// Rayleigh-quotient estimate of the dominant eigenvalue.
    double eigenvalue = 0.0;
    std::size_t iterations = 0;
    /// max_v |(Ax)_v - lambda x_v| at the returned vector.
    double residual = 0.0;
    /// Set when the graph has more than one connected component; scores
    /// then concentrate on the component with the largest eigenvalue.
    bool disconnected = false;

    double score(const std::string& label) const;
};

/// Eigenvector centrality of the weighted adjacency matrix by power
/// iteration from the uniform vector, stopping once no component changes by
/// more than `tol` between iterations.
///
/// Throws DomainError for graphs without edges and ConvergenceError when
/// `max_iter` is reached.
CentralityScores eigenvector_centrality(const WeightedGraph& graph, double tol = 1e-10,
                                        std::size_t max_iter = 1000);

/// The min(k, V) highest scores, descending; equal scores ordered by label.
std::vector<std::pair<std::string, double>> top_k(const CentralityScores& scores, std::size_t k);

} // namespace cointerest
