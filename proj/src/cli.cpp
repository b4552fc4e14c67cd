#include "kjnn/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kjnn/experiment.hpp"
#include "kjnn/io.hpp"
#include "kjnn/svg.hpp"

namespace kjnn {

namespace {

std::string fixed6(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", value);
    return buffer;
}

// "N" or "START:STOP:STEP" (inclusive stop).
std::vector<int> parse_n_values(const std::string& text) {
    std::vector<std::string> parts;
    std::string part;
    for (char c : text) {
        if (c == ':') {
            parts.push_back(part);
            part.clear();
        } else {
            part += c;
        }
    }
    parts.push_back(part);
    if (parts.size() != 1 && parts.size() != 3) {
        throw std::invalid_argument("--n expects N or START:STOP:STEP");
    }
    std::vector<int> numbers;
    for (const std::string& p : parts) {
        try {
            std::size_t used = 0;
            const int value = std::stoi(p, &used);
            if (used != p.size()) throw std::invalid_argument(p);
            numbers.push_back(value);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("--n expects integers: N or START:STOP:STEP");
        }
    }
    if (numbers.size() == 1) return numbers;

    const int start = numbers[0], stop = numbers[1], step = numbers[2];
    if (step < 1) throw std::invalid_argument("--n step must be at least 1");
    if (stop < start) throw std::invalid_argument("--n stop must not be below start");
    std::vector<int> values;
    for (int v = start; v <= stop; v += step) values.push_back(v);
    return values;
}

TopologyKind kind_from_flag(const std::string& tag) {
    const auto kind = parse_topology_tag(tag);
    if (!kind) throw std::invalid_argument("unknown topology '" + tag + "'");
    return *kind;
}

bool geometric(TopologyKind kind) {
    return kind == TopologyKind::Rgg || kind == TopologyKind::KjNnRgg;
}

struct RunArgs {
    std::string topology;
    int k = 5;
    int j = 1;
    std::string n_range;
    int trials = 100;
    std::uint64_t seed = 42;
    double r = 0.0;
    bool r_given = false;
    double sigma = 3.0;
    std::string out;
    std::string format = "csv";
    std::string hist_out;
};

int do_run(const RunArgs& args) {
    ExperimentConfig config;
    config.kind = kind_from_flag(args.topology);
    config.k = args.k;
    config.j = args.j;
    config.n_values = parse_n_values(args.n_range);
    config.trials = args.trials;
    config.master_seed = args.seed;
    if (args.r_given) {
        if (!geometric(config.kind)) {
            throw std::invalid_argument("--r only applies to rgg and kj-nn-rgg");
        }
        config.radius = RadiusMode::fixed(args.r);
    } else {
        config.radius = RadiusMode::formula(args.sigma);
    }
    config.validate();
    if (!args.hist_out.empty() && config.n_values.size() != 1) {
        throw std::invalid_argument("--hist-out needs a single-n sweep");
    }

    const std::vector<AggregateResult> results = run_experiment(config);
    if (args.format == "json") {
        write_json(results, args.out);
    } else {
        write_csv(results, args.out);
    }
    if (!args.hist_out.empty()) {
        write_histogram_csv(results.front().degree_histogram, args.hist_out);
    }
    std::cout << "wrote " << args.out << " (" << results.size() << " rows)\n";
    return 0;
}

struct DrawArgs {
    std::string topology;
    int k = 5;
    int j = 1;
    int n = 100;
    std::uint64_t seed = 42;
    double r = 0.0;
    bool r_given = false;
    double sigma = 3.0;
    std::string out;
    RenderOptions render;
};

int do_draw(const DrawArgs& args) {
    const TopologyKind kind = kind_from_flag(args.topology);
    if (args.r_given && !geometric(kind)) {
        throw std::invalid_argument("--r only applies to rgg and kj-nn-rgg");
    }
    if (args.n < 1) throw std::invalid_argument("--n must be at least 1");

    const PointCloud cloud =
        PointCloud::sample_uniform(static_cast<std::uint32_t>(args.n), args.seed);
    const auto radius = [&] {
        return args.r_given ? args.r : critical_radius(args.n, args.k, args.sigma).r_n;
    };
    const UndirectedGraph graph = [&]() -> UndirectedGraph {
        switch (kind) {
            case TopologyKind::SymKnn:
                return build_symmetric_knn(NeighborRanking(cloud), args.k);
            case TopologyKind::KjNn:
                return build_symmetric_kj(NeighborRanking(cloud), {args.k, args.j});
            case TopologyKind::Rgg:
                return build_rgg(cloud, radius());
            case TopologyKind::KjNnRgg:
                return build_composite(NeighborRanking(cloud), {args.k, args.j}, radius());
        }
        throw std::invalid_argument("unknown topology kind");
    }();

    const std::string svg = render_svg(cloud, graph, args.render);
    std::ofstream file(args.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open for writing: " + args.out);
    file << svg;
    file.flush();
    if (!file) throw std::runtime_error("failed writing: " + args.out);
    std::cout << "wrote " << args.out << " (" << cloud.size() << " nodes, "
              << graph.edge_count() << " edges)\n";
    return 0;
}

struct RadiusArgs {
    int k = 5;
    double sigma = 3.0;
    std::string n_range;
};

int do_radius(const RadiusArgs& args) {
    std::cout << "n,xi,r\n";
    for (int n : parse_n_values(args.n_range)) {
        const RadiusParams params = critical_radius(n, args.k, args.sigma);
        std::cout << n << ',' << fixed6(params.xi) << ',' << fixed6(params.r_n) << '\n';
    }
    return 0;
}

int do_gain(const std::string& base_path, const std::string& reduced_path) {
    const std::vector<AggregateResult> base = read_results_csv(base_path);
    const std::vector<AggregateResult> reduced = read_results_csv(reduced_path);
    if (base.empty() || base.size() != reduced.size()) {
        throw std::invalid_argument("result files must contain the same sweep points");
    }
    std::cout << "n,gain\n";
    for (std::size_t i = 0; i < base.size(); ++i) {
        std::cout << base[i].n << ',' << fixed6(link_gain(base[i], reduced[i])) << '\n';
    }
    std::cout << "mean," << fixed6(mean_link_gain(base, reduced)) << '\n';
    return 0;
}

}  // namespace

int cli_run(int argc, const char* const* argv) {
    CLI::App app{"Sensor-network topology simulator: k-NN, (k,j)-NN, geometric and "
                 "composite graphs with a seeded Monte Carlo harness"};
    app.require_subcommand(1);
    const std::vector<std::string> topologies{"sym-knn", "kj-nn", "rgg", "kj-nn-rgg"};

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "Run a Monte Carlo sweep and write results");
    run->add_option("--topology", run_args.topology, "Topology to build")
        ->required()
        ->check(CLI::IsMember(topologies));
    run->add_option("--k", run_args.k, "Neighbour-list length k");
    run->add_option("--j", run_args.j, "Cut rank j (kj-nn and kj-nn-rgg)");
    run->add_option("--n", run_args.n_range, "Node counts: N or START:STOP:STEP")->required();
    run->add_option("--trials", run_args.trials, "Trials per sweep point");
    run->add_option("--seed", run_args.seed, "Master seed");
    CLI::Option* run_r = run->add_option("--r", run_args.r, "Fixed disk radius");
    CLI::Option* run_sigma = run->add_option("--sigma", run_args.sigma, "Radius-formula constant");
    run_r->excludes(run_sigma);
    run->add_option("--out", run_args.out, "Output file")->required();
    run->add_option("--format", run_args.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    run->add_option("--hist-out", run_args.hist_out,
                    "Also write the degree histogram CSV (single-n sweeps)");

    DrawArgs draw_args;
    CLI::App* draw = app.add_subcommand("draw", "Render one sampled topology as SVG");
    draw->add_option("--topology", draw_args.topology, "Topology to build")
        ->required()
        ->check(CLI::IsMember(topologies));
    draw->add_option("--k", draw_args.k, "Neighbour-list length k");
    draw->add_option("--j", draw_args.j, "Cut rank j (kj-nn and kj-nn-rgg)");
    draw->add_option("--n", draw_args.n, "Node count")->required();
    draw->add_option("--seed", draw_args.seed, "Point-cloud seed");
    CLI::Option* draw_r = draw->add_option("--r", draw_args.r, "Fixed disk radius");
    CLI::Option* draw_sigma =
        draw->add_option("--sigma", draw_args.sigma, "Radius-formula constant");
    draw_r->excludes(draw_sigma);
    draw->add_option("--out", draw_args.out, "Output SVG file")->required();
    draw->add_option("--canvas", draw_args.render.canvas, "Canvas size in px");
    draw->add_option("--node-radius", draw_args.render.node_radius, "Node radius in px");
    draw->add_option("--stroke-width", draw_args.render.stroke_width, "Edge width in px");
    draw->add_option("--node-fill", draw_args.render.node_fill, "Node fill color");
    draw->add_option("--edge-stroke", draw_args.render.edge_stroke, "Edge stroke color");

    RadiusArgs radius_args;
    CLI::App* radius = app.add_subcommand("radius", "Print the critical-radius table");
    radius->add_option("--k", radius_args.k, "Degree parameter k");
    radius->add_option("--sigma", radius_args.sigma, "Formula constant");
    radius->add_option("--n", radius_args.n_range, "Node counts: N or START:STOP:STEP")
        ->required();

    std::string gain_base, gain_reduced;
    CLI::App* gain = app.add_subcommand("gain", "Link gain between two result CSVs");
    gain->add_option("base", gain_base, "Baseline results CSV")->required();
    gain->add_option("reduced", gain_reduced, "Reduced-topology results CSV")->required();

    try {
        app.parse(argc, argv);
        run_args.r_given = run_r->count() > 0;
        draw_args.r_given = draw_r->count() > 0;
        if (run->parsed()) return do_run(run_args);
        if (draw->parsed()) return do_draw(draw_args);
        if (radius->parsed()) return do_radius(radius_args);
        if (gain->parsed()) return do_gain(gain_base, gain_reduced);
        return 2;  // unreachable: require_subcommand(1)
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the parser's message
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace kjnn
