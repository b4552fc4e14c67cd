#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "kjnn/graph.hpp"
#include "kjnn/topology.hpp"

namespace kjnn {

enum class TopologyKind { SymKnn, KjNn, Rgg, KjNnRgg };

// Stable text tags used by the CLI and serialized output:
// "sym-knn", "kj-nn", "rgg", "kj-nn-rgg".
std::string_view topology_tag(TopologyKind kind);
std::optional<TopologyKind> parse_topology_tag(std::string_view tag);

// How the disk radius is chosen for the geometric kinds (rgg, kj-nn-rgg):
// either evaluated per n from critical_radius(n, k, sigma) or fixed.
struct RadiusMode {
    enum class Kind { Formula, Fixed };
    Kind kind = Kind::Formula;
    double value = 3.0;  // sigma when Formula, radius when Fixed

    static RadiusMode formula(double sigma) { return {Kind::Formula, sigma}; }
    static RadiusMode fixed(double r) { return {Kind::Fixed, r}; }
};

struct ExperimentConfig {
    TopologyKind kind = TopologyKind::SymKnn;
    int k = 5;
    int j = 1;                    // ignored for sym-knn and rgg
    std::vector<int> n_values;    // sweep points, each >= 2
    int trials = 100;
    std::uint64_t master_seed = 42;
    RadiusMode radius;            // used by geometric kinds only

    // Throws std::invalid_argument on any malformed field.
    void validate() const;
};

struct TrialResult {
    int n = 0;
    int trial_index = 0;
    bool connected = false;
    std::size_t edge_count = 0;
    DegreeStats degree_stats;
    std::optional<double> radius_used;  // set for geometric kinds
};

struct AggregateResult {
    TopologyKind kind = TopologyKind::SymKnn;
    int k = 0;
    int j = 0;
    int n = 0;
    int trials = 0;
    std::uint64_t master_seed = 0;
    double connectivity_probability = 0.0;       // connected trials / trials
    double mean_degree = 0.0;                    // trial mean of 2|E|/n
    double mean_min_degree = 0.0;
    double mean_max_degree = 0.0;
    std::map<std::uint32_t, double> degree_histogram;  // trial-mean proportions
    std::optional<double> radius;                // radius used at this n
};

// Point-cloud seed for one Monte Carlo trial.  Deliberately a function of
// (master_seed, n, trial_index) only -- never of the topology kind -- so
// sweeps that differ only in topology see identical clouds trial-for-trial.
// Paired clouds are what make link-gain and connectivity comparisons across
// topologies meaningful at 100-trial noise levels.
std::uint64_t trial_seed(std::uint64_t master_seed, int n, int trial_index);

// One seeded trial: sample cloud, build the configured topology (resolving
// the radius via critical_radius when RadiusMode::Formula), measure.
// Identical inputs give identical results.  n must be one of
// config.n_values and 0 <= trial_index < config.trials.
TrialResult run_trial(const ExperimentConfig& config, int n, int trial_index);

// Full Monte Carlo sweep: config.trials trials at every n in
// config.n_values, aggregated per n.  Trials may run on worker threads (see
// resolve_thread_count), but every trial is independently seeded and the
// aggregation folds results in trial order, so output is bit-identical
// regardless of scheduling.
std::vector<AggregateResult> run_experiment(const ExperimentConfig& config);

// Links saved per node between two aggregates at the same n:
// (base.mean_degree - reduced.mean_degree) / 2, the coefficient c in the
// saved-link count c*n.  Throws std::invalid_argument when the n differ.
double link_gain(const AggregateResult& base, const AggregateResult& reduced);

// Mean of per-n link gains across two sweeps over the same n values.
double mean_link_gain(const std::vector<AggregateResult>& base,
                      const std::vector<AggregateResult>& reduced);

// Trial-averaged degree histogram at one sweep point n (must be listed in
// config.n_values); proportions sum to 1.
std::map<std::uint32_t, double> degree_distribution(const ExperimentConfig& config, int n);

// Worker-thread cap: the KJNN_THREADS environment variable if set (0 means
// auto = hardware concurrency), otherwise auto; always at least 1.  Throws
// std::invalid_argument if the variable is set to a non-integer.
int resolve_thread_count();

}  // namespace kjnn
