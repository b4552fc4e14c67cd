#include "kjnn/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "kjnn/rng.hpp"

namespace kjnn {

std::string_view topology_tag(TopologyKind kind) {
    switch (kind) {
        case TopologyKind::SymKnn: return "sym-knn";
        case TopologyKind::KjNn: return "kj-nn";
        case TopologyKind::Rgg: return "rgg";
        case TopologyKind::KjNnRgg: return "kj-nn-rgg";
    }
    throw std::invalid_argument("unknown topology kind");
}

std::optional<TopologyKind> parse_topology_tag(std::string_view tag) {
    if (tag == "sym-knn") return TopologyKind::SymKnn;
    if (tag == "kj-nn") return TopologyKind::KjNn;
    if (tag == "rgg") return TopologyKind::Rgg;
    if (tag == "kj-nn-rgg") return TopologyKind::KjNnRgg;
    return std::nullopt;
}

namespace {

bool is_geometric(TopologyKind kind) {
    return kind == TopologyKind::Rgg || kind == TopologyKind::KjNnRgg;
}

bool uses_rank_window(TopologyKind kind) {
    return kind == TopologyKind::KjNn || kind == TopologyKind::KjNnRgg;
}

double resolve_radius(const ExperimentConfig& config, int n) {
    if (config.radius.kind == RadiusMode::Kind::Fixed) {
        return config.radius.value;
    }
    return critical_radius(n, config.k, config.radius.value).r_n;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (n_values.empty()) {
        throw std::invalid_argument("sweep needs at least one n value");
    }
    for (int n : n_values) {
        if (n < 2) {
            throw std::invalid_argument("every sweep n must be at least 2");
        }
    }
    if (trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    if (k < 1) {
        throw std::invalid_argument("k must be at least 1");
    }
    if (uses_rank_window(kind)) {
        TopologyParams{k, j}.validate();
    }
    if (is_geometric(kind) && radius.kind == RadiusMode::Kind::Fixed &&
        !(radius.value > 0.0)) {
        throw std::invalid_argument("fixed radius must be positive");
    }
}

std::uint64_t trial_seed(std::uint64_t master_seed, int n, int trial_index) {
    // Chain through the mixer word by word; the topology kind is kept out
    // on purpose (see the header note on paired clouds).
    std::uint64_t h = mix64(0x6A09E667F3BCC909ull, master_seed);
    h = mix64(h, static_cast<std::uint64_t>(n));
    return mix64(h, static_cast<std::uint64_t>(trial_index));
}

TrialResult run_trial(const ExperimentConfig& config, int n, int trial_index) {
    config.validate();
    if (std::find(config.n_values.begin(), config.n_values.end(), n) == config.n_values.end()) {
        throw std::invalid_argument("n is not part of the configured sweep");
    }
    if (trial_index < 0 || trial_index >= config.trials) {
        throw std::invalid_argument("trial index out of range");
    }

    const PointCloud cloud = PointCloud::sample_uniform(
        static_cast<std::uint32_t>(n), trial_seed(config.master_seed, n, trial_index));

    std::optional<double> radius;
    UndirectedGraph graph = [&]() -> UndirectedGraph {
        switch (config.kind) {
            case TopologyKind::SymKnn:
                return build_symmetric_knn(NeighborRanking(cloud), config.k);
            case TopologyKind::KjNn:
                return build_symmetric_kj(NeighborRanking(cloud), {config.k, config.j});
            case TopologyKind::Rgg:
                radius = resolve_radius(config, n);
                return build_rgg(cloud, *radius);
            case TopologyKind::KjNnRgg:
                radius = resolve_radius(config, n);
                return build_composite(NeighborRanking(cloud), {config.k, config.j}, *radius);
        }
        throw std::invalid_argument("unknown topology kind");
    }();

    TrialResult result;
    result.n = n;
    result.trial_index = trial_index;
    result.connected = is_connected(graph);
    result.edge_count = graph.edge_count();
    result.degree_stats = degree_stats(graph);
    result.radius_used = radius;
    return result;
}

int resolve_thread_count() {
    long value = 0;
    if (const char* env = std::getenv("KJNN_THREADS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        value = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || value < 0) {
            throw std::invalid_argument("KJNN_THREADS must be a non-negative integer");
        }
    }
    if (value == 0) {
        value = static_cast<long>(std::thread::hardware_concurrency());
    }
    return std::max(1, static_cast<int>(value));
}

namespace {

// All trials at one sweep point, indexed by trial.  Work is handed out via
// an atomic counter; because each trial derives its own seed, the filled
// vector is identical no matter how trials land on threads.
std::vector<TrialResult> run_point(const ExperimentConfig& config, int n) {
    std::vector<TrialResult> trials(static_cast<std::size_t>(config.trials));
    const int workers = std::min(resolve_thread_count(), config.trials);
    if (workers <= 1) {
        for (int t = 0; t < config.trials; ++t) trials[t] = run_trial(config, n, t);
        return trials;
    }

    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (int t = next.fetch_add(1); t < config.trials; t = next.fetch_add(1)) {
                trials[t] = run_trial(config, n, t);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return trials;
}

AggregateResult aggregate_point(const ExperimentConfig& config, int n,
                                const std::vector<TrialResult>& trials) {
    AggregateResult agg;
    agg.kind = config.kind;
    agg.k = config.k;
    agg.j = config.j;
    agg.n = n;
    agg.trials = config.trials;
    agg.master_seed = config.master_seed;

    int connected = 0;
    double mean_sum = 0.0, min_sum = 0.0, max_sum = 0.0;
    std::map<std::uint32_t, double> histogram;
    for (const TrialResult& t : trials) {
        connected += t.connected ? 1 : 0;
        mean_sum += t.degree_stats.mean;
        min_sum += t.degree_stats.min;
        max_sum += t.degree_stats.max;
        for (const auto& [degree, proportion] : t.degree_stats.histogram) {
            histogram[degree] += proportion;
        }
    }
    const double count = static_cast<double>(config.trials);
    agg.connectivity_probability = connected / count;
    agg.mean_degree = mean_sum / count;
    agg.mean_min_degree = min_sum / count;
    agg.mean_max_degree = max_sum / count;
    for (auto& [degree, sum] : histogram) sum /= count;
    agg.degree_histogram = std::move(histogram);
    agg.radius = trials.front().radius_used;
    return agg;
}

}  // namespace

std::vector<AggregateResult> run_experiment(const ExperimentConfig& config) {
    config.validate();
    std::vector<AggregateResult> results;
    results.reserve(config.n_values.size());
    for (int n : config.n_values) {
        results.push_back(aggregate_point(config, n, run_point(config, n)));
    }
    return results;
}

double link_gain(const AggregateResult& base, const AggregateResult& reduced) {
    if (base.n != reduced.n) {
        throw std::invalid_argument("link gain requires aggregates at the same n");
    }
    return (base.mean_degree - reduced.mean_degree) / 2.0;
}

double mean_link_gain(const std::vector<AggregateResult>& base,
                      const std::vector<AggregateResult>& reduced) {
    if (base.empty() || base.size() != reduced.size()) {
        throw std::invalid_argument("link gain requires two equal-length result sweeps");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < base.size(); ++i) {
        sum += link_gain(base[i], reduced[i]);
    }
    return sum / static_cast<double>(base.size());
}

std::map<std::uint32_t, double> degree_distribution(const ExperimentConfig& config, int n) {
    config.validate();
    if (std::find(config.n_values.begin(), config.n_values.end(), n) == config.n_values.end()) {
        throw std::invalid_argument("n is not part of the configured sweep");
    }
    return aggregate_point(config, n, run_point(config, n)).degree_histogram;
}

}  // namespace kjnn
