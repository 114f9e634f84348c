// Command-line front end: stats, cluster, centrality, export, report.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cointerest/errors.hpp"
#include "cointerest/export.hpp"
#include "cointerest/louvain.hpp"
#include "cointerest/report.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kInfeasible = 3,
    kNonConvergence = 4,
};

struct Options {
    std::string input;
    std::string output = "-";
    std::uint64_t seed = 0;
    double gamma = 1.0;
    bool auto_gamma = false;
    std::size_t min_clusters = 10;
    double gamma_lo = 0.0;
    double gamma_hi = 8.0;
    double precision = 1e-9;
    std::size_t top_k = 10;
    std::string format;
};

void add_common(CLI::App* cmd, Options& o, bool clustering)
{
    cmd->add_option("--input,-i", o.input, "Records file (CSV or JSON array)")->required();
    cmd->add_option("--output,-o", o.output, "Output path, '-' for stdout");
    if (!clustering)
        return;
    cmd->add_option("--seed", o.seed, "Seed for the node visit order");
    auto* gamma = cmd->add_option("--gamma", o.gamma, "Fixed resolution");
    auto* autog = cmd->add_flag("--auto-gamma", o.auto_gamma,
                                "Search for the smallest resolution giving --min-clusters clusters");
    gamma->excludes(autog);
    autog->excludes(gamma);
    cmd->add_option("--min-clusters", o.min_clusters)->needs(autog);
    cmd->add_option("--gamma-lo", o.gamma_lo)->needs(autog);
    cmd->add_option("--gamma-hi", o.gamma_hi)->needs(autog);
    cmd->add_option("--precision", o.precision)->needs(autog);
}

cointerest::RunConfig make_config(const Options& o)
{
    cointerest::RunConfig c;
    c.input_path = o.input;
    c.output_path = o.output;
    c.seed = o.seed;
    c.top_k = o.top_k;
    if (o.auto_gamma)
        c.gamma_mode = cointerest::AutoGamma{o.min_clusters, o.gamma_lo, o.gamma_hi, o.precision};
    else
        c.gamma_mode = cointerest::FixedGamma{o.gamma};
    return c;
}

void write_output(const std::string& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw cointerest::ValidationError("cannot write '" + path + "'");
    out << text;
}

std::string fixed(double v, int decimals)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string significant(double v, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string stats_text(const cointerest::ReportBundle& b)
{
    std::ostringstream out;
    out << "records: " << b.stats.record_count << '\n'
        << "nodes:   " << b.stats.node_count << '\n'
        << "edges:   " << b.stats.edge_count << '\n'
        << "density: " << (b.stats.density ? significant(*b.stats.density, 4) : "undefined") << '\n';
    return out.str();
}

std::string clusters_text(const cointerest::ReportBundle& b)
{
    std::ostringstream out;
    if (b.gamma_used)
        out << "gamma: " << cointerest::format_double(*b.gamma_used) << '\n';
    out << "modularity: " << (b.modularity ? fixed(*b.modularity, 4) : "undefined") << '\n';
    out << "cluster | members\n";
    const auto clusters = b.clusters();
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        out << c << " | ";
        for (std::size_t i = 0; i < clusters[c].size(); ++i)
            out << (i ? ", " : "") << clusters[c][i];
        out << '\n';
    }
    return out.str();
}

std::string centrality_text(const cointerest::ReportBundle& b)
{
    std::ostringstream out;
    out << "name | eigenvector centrality\n";
    for (const auto& [node, score] : b.centrality_top)
        out << node << " | " << fixed(score, 3) << '\n';
    return out.str();
}

int finish(const cointerest::ReportBundle& b)
{
    for (const auto& w : b.warnings)
        std::cerr << "warning: " << w << '\n';
    return b.centrality_converged ? kOk : kNonConvergence;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Co-interest graph clustering and centrality"};
    app.require_subcommand(1);
    Options o;

    auto* stats = app.add_subcommand("stats", "Node, edge and density summary");
    add_common(stats, o, false);
    stats->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* cluster = app.add_subcommand("cluster", "Louvain clusters of the co-interest graph");
    add_common(cluster, o, true);
    cluster->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "csv"}));

    auto* centrality = app.add_subcommand("centrality", "Top-k eigenvector centrality");
    add_common(centrality, o, false);
    centrality->add_option("--top-k", o.top_k)->check(CLI::PositiveNumber);
    centrality->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "csv"}));

    auto* exporter = app.add_subcommand("export", "Clustered graph as DOT, GraphML or JSON");
    add_common(exporter, o, true);
    exporter->add_option("--format", o.format)->check(CLI::IsMember({"dot", "graphml", "json"}));

    auto* report = app.add_subcommand("report", "Full pipeline");
    add_common(report, o, true);
    report->add_option("--top-k", o.top_k)->check(CLI::PositiveNumber);
    report->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "dot", "graphml"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        cointerest::RunConfig config = make_config(o);
        const std::string fmt = o.format;

        if (stats->parsed()) {
            config.run_clustering = false;
            config.run_centrality = false;
            const auto b = cointerest::run_pipeline(config);
            write_output(config.output_path,
                         fmt == "json" ? cointerest::bundle_to_json(b) : stats_text(b));
            return finish(b);
        }
        if (cluster->parsed()) {
            config.run_centrality = false;
            const auto b = cointerest::run_pipeline(config);
            std::string text;
            if (fmt == "json")
                text = cointerest::bundle_to_json(b);
            else if (fmt == "csv")
                text = cointerest::bundle_to_csv(b);
            else
                text = clusters_text(b);
            write_output(config.output_path, text);
            return finish(b);
        }
        if (centrality->parsed()) {
            config.run_clustering = false;
            const auto b = cointerest::run_pipeline(config);
            std::string text;
            if (fmt == "json")
                text = cointerest::bundle_to_json(b);
            else if (fmt == "csv")
                text = cointerest::bundle_to_csv(b);
            else
                text = centrality_text(b);
            write_output(config.output_path, text);
            return finish(b);
        }
        if (exporter->parsed()) {
            config.run_centrality = false;
            const auto b = cointerest::run_pipeline(config);
            const auto format = fmt == "graphml" ? cointerest::GraphFormat::GraphML
                : fmt == "json"                 ? cointerest::GraphFormat::Json
                                                : cointerest::GraphFormat::Dot;
            const auto p = b.partition ? *b.partition : cointerest::single_partition(b.graph);
            write_output(config.output_path, cointerest::export_graph(b.graph, p, format));
            return finish(b);
        }

        static const std::map<std::string, cointerest::OutputFormat> formats = {
            {"", cointerest::OutputFormat::Json},
            {"json", cointerest::OutputFormat::Json},
            {"csv", cointerest::OutputFormat::Csv},
            {"dot", cointerest::OutputFormat::Dot},
            {"graphml", cointerest::OutputFormat::GraphML},
        };
        config.output_format = formats.at(fmt);
        const auto b = cointerest::run_pipeline(config);
        write_output(config.output_path, cointerest::render_bundle(b, config.output_format));
        return finish(b);
    } catch (const cointerest::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInfeasible;
    } catch (const cointerest::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNonConvergence;
    } catch (const cointerest::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
}
