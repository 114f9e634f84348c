#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cointerest/centrality.hpp"
#include "cointerest/errors.hpp"
#include "cointerest/export.hpp"
#include "cointerest/ingest.hpp"
#include "cointerest/louvain.hpp"
#include "cointerest/modularity.hpp"
#include "cointerest/report.hpp"
#include "cointerest/resolution_search.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace pybind11::literals;
using namespace cointerest;

namespace {

GraphFormat graph_format(const std::string& name)
{
    if (name == "dot")
        return GraphFormat::Dot;
    if (name == "graphml")
        return GraphFormat::GraphML;
    if (name == "json")
        return GraphFormat::Json;
    throw ValidationError("unknown graph format '" + name + "'");
}

OutputFormat output_format(const std::string& name)
{
    if (name == "json")
        return OutputFormat::Json;
    if (name == "csv")
        return OutputFormat::Csv;
    if (name == "dot")
        return OutputFormat::Dot;
    if (name == "graphml")
        return OutputFormat::GraphML;
    throw ValidationError("unknown output format '" + name + "'");
}

ClusterId target_cluster(const py::object& target)
{
    if (target.is_none())
        return kFreshCluster;
    return target.cast<ClusterId>();
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Co-interest graph construction, Louvain clustering and eigenvector centrality";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<LookupError>(m, "LookupError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<FormatError>(m, "FormatError", base.ptr());
    py::register_exception<InfeasibleError>(m, "InfeasibleError", base.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());

    py::class_<WeightedGraph>(m, "WeightedGraph")
        .def(py::init<>())
        .def("add_node", &WeightedGraph::add_node, "label"_a)
        .def("add_edge", py::overload_cast<std::string_view, std::string_view, double>(&WeightedGraph::add_edge),
             "u"_a, "v"_a, "weight"_a)
        .def_property_readonly("node_count", &WeightedGraph::node_count)
        .def_property_readonly("edge_count", &WeightedGraph::edge_count)
        .def_property_readonly("labels", &WeightedGraph::labels)
        .def("weight", py::overload_cast<std::string_view, std::string_view>(&WeightedGraph::weight, py::const_))
        .def("strength", py::overload_cast<std::string_view>(&WeightedGraph::strength, py::const_))
        .def("total_weight", &WeightedGraph::total_weight)
        .def("density", &WeightedGraph::density)
        .def("edges", [](const WeightedGraph& g) {
            std::vector<std::tuple<std::string, std::string, double>> out;
            for (const auto& e : g.edges())
                out.emplace_back(g.label(e.u), g.label(e.v), e.weight);
            return out;
        })
        .def("__eq__", &WeightedGraph::operator==)
        .def("__len__", &WeightedGraph::node_count);

    py::class_<InterestRecord>(m, "InterestRecord")
        .def(py::init<std::string, std::string, std::uint64_t>(), "entity"_a, "topic"_a, "frequency"_a)
        .def_readwrite("entity", &InterestRecord::entity)
        .def_readwrite("topic", &InterestRecord::topic)
        .def_readwrite("frequency", &InterestRecord::frequency)
        .def("__eq__", &InterestRecord::operator==)
        .def("__repr__", [](const InterestRecord& r) {
            return "InterestRecord(" + r.entity + ", " + r.topic + ", " + std::to_string(r.frequency) + ")";
        });

    m.def("parse_records", py::overload_cast<std::string_view>(&parse_records), "text"_a);
    m.def("parse_records_json", &parse_records_json, "text"_a);
    m.def("read_records_file", &read_records_file, "path"_a);
    m.def("build_cointerest_graph",
          py::overload_cast<const std::vector<InterestRecord>&>(&build_cointerest_graph), "records"_a);
    m.def("normalize_weights", [](const WeightedGraph& g) {
        auto r = normalize_weights(g);
        return py::make_tuple(std::move(r.graph), r.raw_total, r.edgeless);
    }, "graph"_a, "Returns (graph, raw_total, edgeless).");

    py::class_<Partition>(m, "Partition")
        .def(py::init<std::vector<ClusterId>>(), "assignment"_a)
        .def_static("canonical", &Partition::canonical, "raw"_a)
        .def_property_readonly("assignment", &Partition::assignment)
        .def_property_readonly("cluster_count", &Partition::cluster_count)
        .def("clusters", &Partition::clusters)
        .def("__eq__", &Partition::operator==)
        .def("__len__", &Partition::node_count);

    m.attr("FRESH_CLUSTER") = py::none();
    m.def("modularity", [](const WeightedGraph& g, const Partition& p, double gamma) {
        return modularity(g, p, ResolutionParams(gamma));
    }, "graph"_a, "partition"_a, "gamma"_a = 1.0);
    m.def("delta_move", [](const WeightedGraph& g, const Partition& p, const std::string& node,
                           const py::object& target, double gamma) {
        return delta_move(g, p, g.index_of(node), target_cluster(target), ResolutionParams(gamma));
    }, "graph"_a, "partition"_a, "node"_a, "target"_a, "gamma"_a = 1.0,
       "Change in modularity from moving `node` into cluster `target` (None for a new cluster).");

    py::class_<ClusteringResult>(m, "ClusteringResult")
        .def_readonly("partition", &ClusteringResult::partition)
        .def_readonly("modularity", &ClusteringResult::modularity)
        .def_readonly("levels", &ClusteringResult::levels)
        .def_readonly("degenerate", &ClusteringResult::degenerate)
        .def_readonly("sweep_modularity", &ClusteringResult::sweep_modularity);

    m.def("single_partition", &single_partition, "graph"_a);
    m.def("move_nodes", [](const WeightedGraph& g, const Partition& p, double gamma, std::uint64_t seed) {
        return move_nodes(g, p, LouvainConfig{ResolutionParams(gamma), seed});
    }, "graph"_a, "partition"_a, "gamma"_a = 1.0, "seed"_a = 0);
    m.def("reduce_clusters", &reduce_clusters, "graph"_a, "partition"_a);
    m.def("louvain", [](const WeightedGraph& g, double gamma, std::uint64_t seed, double min_delta) {
        return louvain(g, LouvainConfig{ResolutionParams(gamma), seed, min_delta});
    }, "graph"_a, "gamma"_a = 1.0, "seed"_a = 0, "min_delta"_a = 1e-12);

    py::class_<GammaSearchResult>(m, "GammaSearchResult")
        .def_readonly("gamma", &GammaSearchResult::gamma)
        .def_readonly("clustering", &GammaSearchResult::clustering)
        .def_readonly("louvain_calls", &GammaSearchResult::louvain_calls)
        .def_readonly("doubling_steps", &GammaSearchResult::doubling_steps)
        .def_readonly("bracket_lo", &GammaSearchResult::bracket_lo);

    m.def("find_min_gamma", [](const WeightedGraph& g, std::size_t min_clusters, double lo, double hi,
                               double precision, std::uint64_t seed) {
        GammaSearchConfig c;
        c.min_clusters = min_clusters;
        c.lo = lo;
        c.hi = hi;
        c.precision = precision;
        c.seed = seed;
        return find_min_gamma(g, c);
    }, "graph"_a, "min_clusters"_a = 10, "lo"_a = 0.0, "hi"_a = 8.0, "precision"_a = 1e-9, "seed"_a = 0);

    py::class_<CentralityScores>(m, "CentralityScores")
        .def_readonly("labels", &CentralityScores::labels)
        .def_readonly("scores", &CentralityScores::scores)
        .def_readonly("eigenvalue", &CentralityScores::eigenvalue)
        .def_readonly("iterations", &CentralityScores::iterations)
        .def_readonly("residual", &CentralityScores::residual)
        .def_readonly("disconnected", &CentralityScores::disconnected)
        .def("as_dict", [](const CentralityScores& s) {
            py::dict d;
            for (std::size_t i = 0; i < s.labels.size(); ++i)
                d[py::str(s.labels[i])] = s.scores[i];
            return d;
        });

    m.def("eigenvector_centrality", &eigenvector_centrality, "graph"_a, "tol"_a = 1e-10, "max_iter"_a = 1000);
    m.def("top_k", &top_k, "scores"_a, "k"_a);

    m.def("export_graph", [](const WeightedGraph& g, const Partition& p, const std::string& format) {
        return export_graph(g, p, graph_format(format));
    }, "graph"_a, "partition"_a, "format"_a = "dot");
    m.def("read_graph_json", &read_graph_json, "text"_a);

    m.def("report", [](const std::string& input, std::uint64_t seed, std::optional<double> gamma,
                       std::optional<std::size_t> min_clusters, double gamma_lo, double gamma_hi,
                       double precision, std::size_t top_k, const std::string& format) {
        RunConfig c;
        c.input_path = input;
        c.seed = seed;
        c.top_k = top_k;
        if (gamma && min_clusters)
            throw ValidationError("pass either gamma or min_clusters, not both");
        if (min_clusters)
            c.gamma_mode = AutoGamma{*min_clusters, gamma_lo, gamma_hi, precision};
        else
            c.gamma_mode = FixedGamma{gamma.value_or(1.0)};
        return render_bundle(run_pipeline(c), output_format(format));
    }, "input"_a, "seed"_a = 0, "gamma"_a = py::none(), "min_clusters"_a = py::none(),
       "gamma_lo"_a = 0.0, "gamma_hi"_a = 8.0, "precision"_a = 1e-9, "top_k"_a = 10, "format"_a = "json",
       "Runs the full pipeline on a records file; a given min_clusters selects the resolution search.");

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
