#include "cointerest/report.hpp"

#include <sstream>

#include <json.hpp>

#include "cointerest/centrality.hpp"
#include "cointerest/errors.hpp"
#include "cointerest/export.hpp"
#include "cointerest/louvain.hpp"

namespace cointerest {

std::vector<std::vector<std::string>> ReportBundle::clusters() const
{
    std::vector<std::vector<std::string>> out;
    if (!partition)
        return out;
    for (const auto& members : partition->clusters()) {
        auto& names = out.emplace_back();
        for (NodeIndex v : members)
            names.push_back(graph.label(v));
    }
    return out;
}

ReportBundle build_report(const std::vector<InterestRecord>& records, const RunConfig& config)
{
    if (config.top_k < 1)
        throw ValidationError("top-k must be at least 1");

    ReportBundle bundle;
    bundle.seed = config.seed;
    bundle.stats.record_count = records.size();

    NormalizedGraph normalized = normalize_weights(build_cointerest_graph(records));
    bundle.graph = std::move(normalized.graph);
    const auto& g = bundle.graph;
    bundle.stats.node_count = g.node_count();
    bundle.stats.edge_count = g.edge_count();
    if (g.node_count() >= 2)
        bundle.stats.density = g.density();

    if (g.empty()) {
        bundle.warnings.emplace_back("no entities with positive frequency; clustering and centrality skipped");
        return bundle;
    }
    if (normalized.edgeless)
        bundle.warnings.emplace_back("graph has no edges; weights left unnormalised");

    if (config.run_clustering) {
        if (normalized.edgeless) {
            bundle.partition = single_partition(g);
            bundle.warnings.emplace_back("graph has no edges; every node is its own cluster and modularity is undefined");
        } else if (const auto* fixed = std::get_if<FixedGamma>(&config.gamma_mode)) {
            LouvainConfig lc{ResolutionParams(fixed->gamma), config.seed};
            ClusteringResult r = louvain(g, lc);
            bundle.partition = std::move(r.partition);
            bundle.modularity = r.modularity;
            bundle.gamma_used = fixed->gamma;
        } else {
            const auto& a = std::get<AutoGamma>(config.gamma_mode);
            GammaSearchConfig sc;
            sc.min_clusters = a.min_clusters;
            sc.lo = a.lo;
            sc.hi = a.hi;
            sc.precision = a.precision;
            sc.seed = config.seed;
            GammaSearchResult r = find_min_gamma(g, sc);
            bundle.partition = std::move(r.clustering.partition);
            bundle.modularity = r.clustering.modularity;
            bundle.gamma_used = r.gamma;
            bundle.gamma_trace = std::move(r.trials);
        }
    }

    if (config.run_centrality) {
        if (normalized.edgeless) {
            bundle.warnings.emplace_back("graph has no edges; centrality skipped");
        } else {
            try {
                CentralityScores scores = eigenvector_centrality(g);
                if (scores.disconnected)
                    bundle.warnings.emplace_back("graph is disconnected; centrality concentrates on the dominant component");
                bundle.centrality_top = top_k(scores, config.top_k);
            } catch (const ConvergenceError& e) {
                bundle.centrality_converged = false;
                bundle.warnings.emplace_back(e.what());
                CentralityScores partial;
                partial.labels = g.labels();
                partial.scores = e.last_iterate();
                bundle.centrality_top = top_k(partial, config.top_k);
            }
        }
    }
    return bundle;
}

ReportBundle run_pipeline(const RunConfig& config)
{
    return build_report(read_records_file(config.input_path), config);
}

std::string bundle_to_json(const ReportBundle& bundle)
{
    using json = nlohmann::ordered_json;
    auto optional_number = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };

    json doc;
    auto& meta = doc["metadata"];
    meta["seed"] = bundle.seed;
    meta["gamma"] = optional_number(bundle.gamma_used);
    meta["modularity"] = optional_number(bundle.modularity);
    meta["node_count"] = bundle.stats.node_count;
    meta["edge_count"] = bundle.stats.edge_count;
    meta["density"] = optional_number(bundle.stats.density);
    meta["record_count"] = bundle.stats.record_count;
    if (!bundle.gamma_trace.empty()) {
        json trace = json::array();
        for (const auto& t : bundle.gamma_trace)
            trace.push_back({{"gamma", t.gamma}, {"clusters", t.clusters}});
        meta["gamma_search"] = std::move(trace);
    }
    meta["warnings"] = bundle.warnings;

    doc["clusters"] = json::array();
    const auto clusters = bundle.clusters();
    for (std::size_t c = 0; c < clusters.size(); ++c)
        doc["clusters"].push_back({{"id", c}, {"members", clusters[c]}});

    doc["centrality"] = json::array();
    for (const auto& [node, score] : bundle.centrality_top)
        doc["centrality"].push_back({{"node", node}, {"score", score}});

    doc["nodes"] = bundle.graph.labels();
    doc["edges"] = json::array();
    for (const auto& e : sorted_edges(bundle.graph))
        doc["edges"].push_back({{"source", e.source}, {"target", e.target}, {"weight", e.weight}});
    return doc.dump() + "\n";
}

std::string bundle_to_csv(const ReportBundle& bundle)
{
    std::vector<std::optional<double>> score(bundle.graph.node_count());
    for (const auto& [node, s] : bundle.centrality_top)
        score[bundle.graph.index_of(node)] = s;

    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n\r") == std::string::npos)
            return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"')
                out.push_back('"');
            out.push_back(c);
        }
        return out + "\"";
    };

    std::ostringstream out;
    out << "node,cluster,centrality\n";
    for (NodeIndex v = 0; v < bundle.graph.node_count(); ++v) {
        out << quote(bundle.graph.label(v)) << ',';
        if (bundle.partition)
            out << bundle.partition->cluster_of(v);
        out << ',';
        if (score[v])
            out << format_double(*score[v]);
        out << '\n';
    }
    return out.str();
}

std::string render_bundle(const ReportBundle& bundle, OutputFormat format)
{
    switch (format) {
    case OutputFormat::Json: return bundle_to_json(bundle);
    case OutputFormat::Csv: return bundle_to_csv(bundle);
    case OutputFormat::Dot:
    case OutputFormat::GraphML: {
        const Partition p = bundle.partition ? *bundle.partition : single_partition(bundle.graph);
        return export_graph(bundle.graph, p,
                            format == OutputFormat::Dot ? GraphFormat::Dot : GraphFormat::GraphML);
    }
    }
    throw ValidationError("unknown output format");
}

} // namespace cointerest
