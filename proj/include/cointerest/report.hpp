#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cointerest/graph.hpp"
#include "cointerest/ingest.hpp"
#include "cointerest/modularity.hpp"
#include "cointerest/resolution_search.hpp"

namespace cointerest {

struct FixedGamma {
    double gamma = 1.0;
};

struct AutoGamma {
    std::size_t min_clusters = 10;
    double lo = 0.0;
    double hi = 8.0;
    double precision = 1e-9;
};

enum class OutputFormat { Json, Csv, Dot, GraphML };

struct RunConfig {
    std::string input_path;
    std::uint64_t seed = 0;
    std::variant<FixedGamma, AutoGamma> gamma_mode = FixedGamma{};
    std::size_t top_k = 10;
    OutputFormat output_format = OutputFormat::Json;
    /// "-" writes to standard output.
    std::string output_path = "-";
    bool run_clustering = true;
    bool run_centrality = true;
};

struct GraphStats {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    /// Empty when there are fewer than two nodes.
    std::optional<double> density;
    std::size_t record_count = 0;
};

struct ReportBundle {
    std::uint64_t seed = 0;
    GraphStats stats;
    /// Normalised co-interest graph.
    WeightedGraph graph;
    std::optional<Partition> partition;
    std::optional<double> gamma_used;
    std::vector<GammaTrial> gamma_trace;
    std::optional<double> modularity;
    std::vector<std::pair<std::string, double>> centrality_top;
    std::vector<std::string> warnings;
    /// False when power iteration hit its cap; the bundle is then partial.
    bool centrality_converged = true;

    /// Cluster members by label, cluster ids 0..k-1.
    std::vector<std::vector<std::string>> clusters() const;
};

/// Build -> normalise -> cluster -> rank over already parsed records.
/// Input and infeasibility errors propagate; centrality non-convergence is
/// recorded in the bundle instead.
ReportBundle build_report(const std::vector<InterestRecord>& records, const RunConfig& config);

/// Reads `config.input_path` and runs build_report.
ReportBundle run_pipeline(const RunConfig& config);

/// Canonical JSON: metadata, clusters, centrality, nodes, edges.
std::string bundle_to_json(const ReportBundle& bundle);
/// One row per node: node,cluster,centrality.
std::string bundle_to_csv(const ReportBundle& bundle);
std::string render_bundle(const ReportBundle& bundle, OutputFormat format);

} // namespace cointerest
