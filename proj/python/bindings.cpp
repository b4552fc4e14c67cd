#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>
#include <pybind11/operators.h>

#include <iostream>
#include <vector>

#include "kjnn/cli.hpp"
#include "kjnn/experiment.hpp"
#include "kjnn/geometry.hpp"
#include "kjnn/graph.hpp"
#include "kjnn/io.hpp"
#include "kjnn/neighbor_ranking.hpp"
#include "kjnn/svg.hpp"
#include "kjnn/topology.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

PYBIND11_MODULE(_kjnn, m) {
    m.doc() = "Sensor-network topology constructions (symmetric k-NN, (k,j)-NN, "
              "geometric and composite graphs) with a seeded Monte Carlo harness";
    m.attr("__version__") = "0.1.0";

    py::class_<kjnn::Point>(m, "Point")
        .def(py::init([](double x, double y) { return kjnn::Point{x, y}; }), "x"_a, "y"_a)
        .def_readonly("x", &kjnn::Point::x)
        .def_readonly("y", &kjnn::Point::y)
        .def("__repr__", [](const kjnn::Point& p) {
            return "Point(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
        });

    py::class_<kjnn::PointCloud>(m, "PointCloud")
        .def(py::init([](const std::vector<std::pair<double, double>>& coords) {
                 std::vector<kjnn::Point> points;
                 points.reserve(coords.size());
                 for (const auto& [x, y] : coords) points.push_back({x, y});
                 return kjnn::PointCloud(std::move(points));
             }),
             "points"_a, "Build a cloud from (x, y) pairs")
        .def_static("sample_uniform", &kjnn::PointCloud::sample_uniform, "n"_a, "seed"_a)
        .def("__len__", &kjnn::PointCloud::size)
        .def("point", [](const kjnn::PointCloud& cloud,
                         kjnn::NodeId i) { return cloud.points().at(i); },
             "i"_a)
        .def_property_readonly("points",
                               [](const kjnn::PointCloud& cloud) {
                                   std::vector<std::pair<double, double>> coords;
                                   coords.reserve(cloud.size());
                                   for (const kjnn::Point& p : cloud.points()) {
                                       coords.emplace_back(p.x, p.y);
                                   }
                                   return coords;
                               })
        .def("distance", &kjnn::PointCloud::distance, "a"_a, "b"_a);

    m.def("sample_uniform_points", &kjnn::sample_uniform_points, "n"_a, "seed"_a);

    py::class_<kjnn::NeighborRanking>(m, "NeighborRanking")
        .def(py::init<const kjnn::PointCloud&>(), "cloud"_a)
        .def("__len__", &kjnn::NeighborRanking::size)
        .def("ranked",
             [](const kjnn::NeighborRanking& ranking, kjnn::NodeId u) {
                 const auto row = ranking.ranked(u);
                 return std::vector<kjnn::NodeId>(row.begin(), row.end());
             },
             "u"_a)
        .def("rank", &kjnn::NeighborRanking::rank, "u"_a, "v"_a)
        .def("ranked_distance", &kjnn::NeighborRanking::ranked_distance, "u"_a, "idx"_a)
        .def("count_within", &kjnn::NeighborRanking::count_within, "u"_a, "r"_a);

    m.def("pairwise_rankings", &kjnn::pairwise_rankings, "cloud"_a);

    py::class_<kjnn::UndirectedGraph>(m, "UndirectedGraph")
        .def(py::init<std::uint32_t, std::vector<std::pair<kjnn::NodeId, kjnn::NodeId>>>(),
             "node_count"_a, "edges"_a)
        .def_property_readonly("node_count", &kjnn::UndirectedGraph::node_count)
        .def_property_readonly("edge_count", &kjnn::UndirectedGraph::edge_count)
        .def_property_readonly("edges", &kjnn::UndirectedGraph::edges)
        .def("has_edge", &kjnn::UndirectedGraph::has_edge, "u"_a, "v"_a)
        .def("degrees", &kjnn::UndirectedGraph::degrees)
        .def(py::self == py::self);

    py::class_<kjnn::DegreeStats>(m, "DegreeStats")
        .def_readonly("mean", &kjnn::DegreeStats::mean)
        .def_readonly("min", &kjnn::DegreeStats::min)
        .def_readonly("max", &kjnn::DegreeStats::max)
        .def_readonly("histogram", &kjnn::DegreeStats::histogram);

    m.def("is_connected", &kjnn::is_connected, "g"_a);
    m.def("connected_components", &kjnn::connected_components, "g"_a);
    m.def("degree_stats", &kjnn::degree_stats, "g"_a);

    py::class_<kjnn::TopologyParams>(m, "TopologyParams")
        .def(py::init([](int k, int j) { return kjnn::TopologyParams{k, j}; }), "k"_a, "j"_a)
        .def_readwrite("k", &kjnn::TopologyParams::k)
        .def_readwrite("j", &kjnn::TopologyParams::j)
        .def("validate", &kjnn::TopologyParams::validate);

    py::class_<kjnn::RadiusParams>(m, "RadiusParams")
        .def_readonly("n", &kjnn::RadiusParams::n)
        .def_readonly("k", &kjnn::RadiusParams::k)
        .def_readonly("sigma", &kjnn::RadiusParams::sigma)
        .def_readonly("xi", &kjnn::RadiusParams::xi)
        .def_readonly("r_n", &kjnn::RadiusParams::r_n);

    m.def("build_symmetric_knn", &kjnn::build_symmetric_knn, "ranking"_a, "k"_a);
    m.def("build_symmetric_kj", &kjnn::build_symmetric_kj, "ranking"_a, "params"_a);
    m.def("build_rgg", &kjnn::build_rgg, "cloud"_a, "r"_a);
    m.def("build_composite", &kjnn::build_composite, "ranking"_a, "params"_a, "r"_a);
    m.def("critical_radius", &kjnn::critical_radius, "n"_a, "k"_a, "sigma"_a);

    py::enum_<kjnn::TopologyKind>(m, "TopologyKind")
        .value("SYM_KNN", kjnn::TopologyKind::SymKnn)
        .value("KJ_NN", kjnn::TopologyKind::KjNn)
        .value("RGG", kjnn::TopologyKind::Rgg)
        .value("KJ_NN_RGG", kjnn::TopologyKind::KjNnRgg);

    m.def("topology_tag",
          [](kjnn::TopologyKind kind) { return std::string(kjnn::topology_tag(kind)); },
          "kind"_a);
    m.def("parse_topology_tag",
          [](const std::string& tag) { return kjnn::parse_topology_tag(tag); }, "tag"_a);

    py::class_<kjnn::RadiusMode>(m, "RadiusMode")
        .def_static("formula", &kjnn::RadiusMode::formula, "sigma"_a)
        .def_static("fixed", &kjnn::RadiusMode::fixed, "r"_a)
        .def_readonly("value", &kjnn::RadiusMode::value)
        .def_property_readonly("is_formula", [](const kjnn::RadiusMode& mode) {
            return mode.kind == kjnn::RadiusMode::Kind::Formula;
        });

    py::class_<kjnn::ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<>())
        .def_readwrite("kind", &kjnn::ExperimentConfig::kind)
        .def_readwrite("k", &kjnn::ExperimentConfig::k)
        .def_readwrite("j", &kjnn::ExperimentConfig::j)
        .def_readwrite("n_values", &kjnn::ExperimentConfig::n_values)
        .def_readwrite("trials", &kjnn::ExperimentConfig::trials)
        .def_readwrite("master_seed", &kjnn::ExperimentConfig::master_seed)
        .def_readwrite("radius", &kjnn::ExperimentConfig::radius)
        .def("validate", &kjnn::ExperimentConfig::validate);

    py::class_<kjnn::TrialResult>(m, "TrialResult")
        .def_readonly("n", &kjnn::TrialResult::n)
        .def_readonly("trial_index", &kjnn::TrialResult::trial_index)
        .def_readonly("connected", &kjnn::TrialResult::connected)
        .def_readonly("edge_count", &kjnn::TrialResult::edge_count)
        .def_readonly("degree_stats", &kjnn::TrialResult::degree_stats)
        .def_readonly("radius_used", &kjnn::TrialResult::radius_used);

    py::class_<kjnn::AggregateResult>(m, "AggregateResult")
        .def_readonly("kind", &kjnn::AggregateResult::kind)
        .def_readonly("k", &kjnn::AggregateResult::k)
        .def_readonly("j", &kjnn::AggregateResult::j)
        .def_readonly("n", &kjnn::AggregateResult::n)
        .def_readonly("trials", &kjnn::AggregateResult::trials)
        .def_readonly("master_seed", &kjnn::AggregateResult::master_seed)
        .def_readonly("connectivity_probability",
                      &kjnn::AggregateResult::connectivity_probability)
        .def_readonly("mean_degree", &kjnn::AggregateResult::mean_degree)
        .def_readonly("mean_min_degree", &kjnn::AggregateResult::mean_min_degree)
        .def_readonly("mean_max_degree", &kjnn::AggregateResult::mean_max_degree)
        .def_readonly("degree_histogram", &kjnn::AggregateResult::degree_histogram)
        .def_readonly("radius", &kjnn::AggregateResult::radius);

    m.def("trial_seed", &kjnn::trial_seed, "master_seed"_a, "n"_a, "trial_index"_a);
    m.def("run_trial", &kjnn::run_trial, "config"_a, "n"_a, "trial_index"_a,
          py::call_guard<py::gil_scoped_release>());
    m.def("run_experiment", &kjnn::run_experiment, "config"_a,
          py::call_guard<py::gil_scoped_release>());
    m.def("link_gain", &kjnn::link_gain, "base"_a, "reduced"_a);
    m.def("mean_link_gain", &kjnn::mean_link_gain, "base"_a, "reduced"_a);
    m.def("degree_distribution", &kjnn::degree_distribution, "config"_a, "n"_a,
          py::call_guard<py::gil_scoped_release>());
    m.def("resolve_thread_count", &kjnn::resolve_thread_count);

    m.def("results_to_csv", &kjnn::results_to_csv, "results"_a);
    m.def("results_to_json", &kjnn::results_to_json, "results"_a);
    m.def("histogram_to_csv", &kjnn::histogram_to_csv, "histogram"_a);
    m.def("write_csv", &kjnn::write_csv, "results"_a, "path"_a);
    m.def("write_json", &kjnn::write_json, "results"_a, "path"_a);
    m.def("write_histogram_csv", &kjnn::write_histogram_csv, "histogram"_a, "path"_a);
    m.def("read_results_csv", &kjnn::read_results_csv, "path"_a);

    py::class_<kjnn::RenderOptions>(m, "RenderOptions")
        .def(py::init<>())
        .def_readwrite("canvas", &kjnn::RenderOptions::canvas)
        .def_readwrite("margin", &kjnn::RenderOptions::margin)
        .def_readwrite("node_radius", &kjnn::RenderOptions::node_radius)
        .def_readwrite("stroke_width", &kjnn::RenderOptions::stroke_width)
        .def_readwrite("node_fill", &kjnn::RenderOptions::node_fill)
        .def_readwrite("edge_stroke", &kjnn::RenderOptions::edge_stroke);

    m.def("render_svg", &kjnn::render_svg, "cloud"_a, "graph"_a,
          "options"_a = kjnn::RenderOptions{});

    m.def("cli_run",
          [](const std::vector<std::string>& args) {
              std::vector<const char*> argv;
              argv.reserve(args.size());
              for (const std::string& arg : args) argv.push_back(arg.c_str());
              const int code = kjnn::cli_run(static_cast<int>(argv.size()), argv.data());
              // Deliver everything before control returns to the interpreter,
              // whose own stdio does not share the C++ stream buffers.
              std::cout.flush();
              std::cerr.flush();
              return code;
          },
          "args"_a, "Invoke the command-line interface; args[0] is the program name");
}
