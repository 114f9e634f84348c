#include "cointerest/export.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "cointerest/errors.hpp"

namespace cointerest {

namespace {

std::string dot_quote(std::string_view s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string xml_escape(std::string_view s)
{
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

// Six significant digits, trailing zeros kept: 1 -> "1.00000".
std::string six_significant(double w)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.6g", w);
    return buf;
}

} // namespace

std::string_view cluster_color(ClusterId c)
{
    return kClusterPalette[c % kClusterPalette.size()];
}

std::string format_double(double value)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::vector<LabelledEdge> sorted_edges(const WeightedGraph& graph)
{
    std::vector<LabelledEdge> out;
    for (const auto& e : graph.edges()) {
        const auto& a = graph.label(e.u);
        const auto& b = graph.label(e.v);
        if (a <= b)
            out.push_back({a, b, e.weight});
        else
            out.push_back({b, a, e.weight});
    }
    std::sort(out.begin(), out.end(), [](const LabelledEdge& x, const LabelledEdge& y) {
        return std::tie(x.source, x.target) < std::tie(y.source, y.target);
    });
    return out;
}

std::string to_dot(const WeightedGraph& graph, const Partition& partition)
{
    check_partition(graph, partition);
    std::ostringstream out;
    out << "graph G {\n";
    for (NodeIndex v = 0; v < graph.node_count(); ++v) {
        const ClusterId c = partition.cluster_of(v);
        out << "  " << dot_quote(graph.label(v)) << " [cluster=" << c << ", color=\""
            << cluster_color(c) << "\"];\n";
    }
    for (const auto& e : sorted_edges(graph))
        out << "  " << dot_quote(e.source) << " -- " << dot_quote(e.target)
            << " [weight=" << six_significant(e.weight) << "];\n";
    out << "}\n";
    return out.str();
}

std::string to_graphml(const WeightedGraph& graph, const Partition& partition)
{
    check_partition(graph, partition);
    // Labels are not valid NMTOKEN ids in general, so ids are n<index> and
    // the label travels as data.
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\"\n"
           "         xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\"\n"
           "         xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns "
           "http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n"
           "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
           "  <key id=\"cluster\" for=\"node\" attr.name=\"cluster\" attr.type=\"int\"/>\n"
           "  <key id=\"color\" for=\"node\" attr.name=\"color\" attr.type=\"string\"/>\n"
           "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
           "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    for (NodeIndex v = 0; v < graph.node_count(); ++v) {
        const ClusterId c = partition.cluster_of(v);
        out << "    <node id=\"n" << v << "\">"
            << "<data key=\"label\">" << xml_escape(graph.label(v)) << "</data>"
            << "<data key=\"cluster\">" << c << "</data>"
            << "<data key=\"color\">" << cluster_color(c) << "</data></node>\n";
    }
    for (const auto& e : sorted_edges(graph)) {
        out << "    <edge source=\"n" << graph.index_of(e.source) << "\" target=\"n"
            << graph.index_of(e.target) << "\"><data key=\"weight\">" << format_double(e.weight)
            << "</data></edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
    return out.str();
}

std::string to_json(const WeightedGraph& graph, const Partition& partition)
{
    check_partition(graph, partition);
    nlohmann::ordered_json doc;
    doc["metadata"]["node_count"] = graph.node_count();
    doc["metadata"]["edge_count"] = graph.edge_count();
    doc["metadata"]["density"] = graph.node_count() >= 2 ? nlohmann::ordered_json(graph.density())
                                                         : nlohmann::ordered_json(nullptr);
    doc["clusters"] = nlohmann::ordered_json::array();
    const auto clusters = partition.clusters();
    for (ClusterId c = 0; c < clusters.size(); ++c) {
        nlohmann::ordered_json members = nlohmann::ordered_json::array();
        for (NodeIndex v : clusters[c])
            members.push_back(graph.label(v));
        doc["clusters"].push_back({{"id", c}, {"members", std::move(members)}});
    }
    doc["nodes"] = graph.labels();
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : sorted_edges(graph))
        doc["edges"].push_back({{"source", e.source}, {"target", e.target}, {"weight", e.weight}});
    return doc.dump() + "\n";
}

std::string export_graph(const WeightedGraph& graph, const Partition& partition, GraphFormat format)
{
    switch (format) {
    case GraphFormat::Dot: return to_dot(graph, partition);
    case GraphFormat::GraphML: return to_graphml(graph, partition);
    case GraphFormat::Json: return to_json(graph, partition);
    }
    throw ValidationError("unknown graph format");
}

WeightedGraph read_graph_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges")
        || !doc["nodes"].is_array() || !doc["edges"].is_array())
        throw FormatError(0, "graph JSON needs 'nodes' and 'edges' arrays");

    WeightedGraph g;
    try {
        for (const auto& n : doc["nodes"])
            g.add_node(n.get<std::string>());
        for (const auto& e : doc["edges"]) {
            const auto source = e.at("source").get<std::string>();
            const auto target = e.at("target").get<std::string>();
            if (!g.contains(source) || !g.contains(target))
                throw FormatError(0, "edge endpoint missing from 'nodes'");
            g.add_edge(source, target, e.at("weight").get<double>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(0, std::string("malformed graph JSON: ") + e.what());
    }
    return g;
}

} // namespace cointerest
