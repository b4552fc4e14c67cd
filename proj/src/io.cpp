#include "kjnn/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kjnn {

namespace {

constexpr std::string_view kResultsHeader =
    "topology,k,j,n,trials,seed,connectivity_probability,mean_degree,min_degree,"
    "max_degree,radius";

std::string fixed6(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", value);
    return buffer;
}

bool uses_k(TopologyKind kind) { return kind != TopologyKind::Rgg; }

bool uses_j(TopologyKind kind) {
    return kind == TopologyKind::KjNn || kind == TopologyKind::KjNnRgg;
}

bool uses_radius(TopologyKind kind) {
    return kind == TopologyKind::Rgg || kind == TopologyKind::KjNnRgg;
}

void check_histogram_sum(const std::map<std::uint32_t, double>& histogram) {
    if (histogram.empty()) {
        throw std::invalid_argument("histogram must not be empty");
    }
    double sum = 0.0;
    for (const auto& [degree, proportion] : histogram) sum += proportion;
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("histogram proportions must sum to 1");
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path.string());
    }
    out << text;
    out.flush();
    if (!out) {
        throw std::runtime_error("failed writing: " + path.string());
    }
}

}  // namespace

std::string results_to_csv(const std::vector<AggregateResult>& results) {
    if (results.empty()) {
        throw std::invalid_argument("no results to serialize");
    }
    std::string out{kResultsHeader};
    out += '\n';
    for (const AggregateResult& a : results) {
        out += topology_tag(a.kind);
        out += ',';
        if (uses_k(a.kind)) out += std::to_string(a.k);
        out += ',';
        if (uses_j(a.kind)) out += std::to_string(a.j);
        out += ',';
        out += std::to_string(a.n);
        out += ',';
        out += std::to_string(a.trials);
        out += ',';
        out += std::to_string(a.master_seed);
        out += ',';
        out += fixed6(a.connectivity_probability);
        out += ',';
        out += fixed6(a.mean_degree);
        out += ',';
        out += fixed6(a.mean_min_degree);
        out += ',';
        out += fixed6(a.mean_max_degree);
        out += ',';
        if (uses_radius(a.kind) && a.radius) out += fixed6(*a.radius);
        out += '\n';
    }
    return out;
}

std::string results_to_json(const std::vector<AggregateResult>& results) {
    if (results.empty()) {
        throw std::invalid_argument("no results to serialize");
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const AggregateResult& a : results) {
        nlohmann::ordered_json row;
        row["topology"] = topology_tag(a.kind);
        row["k"] = uses_k(a.kind) ? nlohmann::ordered_json(a.k) : nullptr;
        row["j"] = uses_j(a.kind) ? nlohmann::ordered_json(a.j) : nullptr;
        row["n"] = a.n;
        row["trials"] = a.trials;
        row["seed"] = a.master_seed;
        row["connectivity_probability"] = a.connectivity_probability;
        row["mean_degree"] = a.mean_degree;
        row["min_degree"] = a.mean_min_degree;
        row["max_degree"] = a.mean_max_degree;
        if (uses_radius(a.kind) && a.radius) {
            row["radius"] = *a.radius;
        } else {
            row["radius"] = nullptr;
        }
        nlohmann::ordered_json histogram = nlohmann::ordered_json::object();
        for (const auto& [degree, proportion] : a.degree_histogram) {
            histogram[std::to_string(degree)] = proportion;
        }
        row["degree_histogram"] = std::move(histogram);
        rows.push_back(std::move(row));
    }
    return rows.dump(2) + "\n";
}

std::string histogram_to_csv(const std::map<std::uint32_t, double>& histogram) {
    check_histogram_sum(histogram);
    std::string out = "degree,proportion\n";
    for (const auto& [degree, proportion] : histogram) {
        out += std::to_string(degree);
        out += ',';
        out += fixed6(proportion);
        out += '\n';
    }
    return out;
}

void write_csv(const std::vector<AggregateResult>& results, const std::filesystem::path& path) {
    write_text_file(path, results_to_csv(results));
}

void write_json(const std::vector<AggregateResult>& results, const std::filesystem::path& path) {
    write_text_file(path, results_to_json(results));
}

void write_histogram_csv(const std::map<std::uint32_t, double>& histogram,
                         const std::filesystem::path& path) {
    write_text_file(path, histogram_to_csv(histogram));
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

}  // namespace

std::vector<AggregateResult> read_results_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open for reading: " + path.string());
    }
    std::string line;
    if (!std::getline(in, line) || line != kResultsHeader) {
        throw std::runtime_error("unrecognized results CSV header in " + path.string());
    }
    std::vector<AggregateResult> results;
    std::size_t line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != 11) {
            throw std::runtime_error("malformed row " + std::to_string(line_number) + " in " +
                                     path.string());
        }
        const auto kind = parse_topology_tag(fields[0]);
        if (!kind) {
            throw std::runtime_error("unknown topology tag '" + fields[0] + "' in " +
                                     path.string());
        }
        try {
            AggregateResult a;
            a.kind = *kind;
            a.k = fields[1].empty() ? 0 : std::stoi(fields[1]);
            a.j = fields[2].empty() ? 0 : std::stoi(fields[2]);
            a.n = std::stoi(fields[3]);
            a.trials = std::stoi(fields[4]);
            a.master_seed = std::stoull(fields[5]);
            a.connectivity_probability = std::stod(fields[6]);
            a.mean_degree = std::stod(fields[7]);
            a.mean_min_degree = std::stod(fields[8]);
            a.mean_max_degree = std::stod(fields[9]);
            if (!fields[10].empty()) a.radius = std::stod(fields[10]);
            results.push_back(std::move(a));
        } catch (const std::logic_error&) {
            throw std::runtime_error("malformed row " + std::to_string(line_number) + " in " +
                                     path.string());
        }
    }
    return results;
}

}  // namespace kjnn
