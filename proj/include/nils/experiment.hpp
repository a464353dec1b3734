#pragma once

#include "nils/instance.hpp"
#include "nils/search.hpp"

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nils {

/// Where an experiment's instance comes from: a Taillard file and index, or
/// a generator triple (jobs, machines, time seed).
struct InstanceSource {
    std::optional<std::string> file;
    std::size_t index = 0;
    int jobs = 0;
    int machines = 0;
    std::int64_t time_seed = 0;

    Instance load() const;
    std::string describe() const;
};

struct ExperimentConfig {
    InstanceSource source;
    std::vector<std::int64_t> mns_values{0};
    int runs = 30;
    std::int64_t budget = 20'000'000;
    std::uint64_t base_seed = 0;
    int kick_strength = 3;
    /// Evaluation counts at which best-so-far is sampled; sorted, <= budget.
    std::vector<std::int64_t> checkpoints;
    /// Worker threads; 0 uses the hardware concurrency.
    unsigned threads = 0;
};

/// 1, 2, 5 x 10^k up to the budget, plus the budget itself.
std::vector<std::int64_t> default_checkpoints(std::int64_t budget);

/// Throws std::invalid_argument when an ExperimentConfig invariant is broken.
void check_experiment_config(const ExperimentConfig& config);

/// Seed of one run; a pure function of its arguments.
std::uint64_t derive_run_seed(std::uint64_t base_seed, std::int64_t mns, int run_index);

struct RunRecord {
    std::string instance;
    int n_jobs = 0;
    int n_machines = 0;
    int run_index = 0;
    RunReport report;
    std::vector<TracePoint> trajectory;
    double runtime_ms = 0;
};

struct MnsAggregate {
    std::int64_t mns = 0;
    std::size_t runs = 0;
    double q1 = 0;
    double median = 0;
    double q3 = 0;
    double min = 0;
    double max = 0;
    double portal_pct_mean = 0;
    double portal_pct_sd = 0;
    double lost_evals_mean = 0;
    double lost_evals_sd = 0;
    friend bool operator==(const MnsAggregate&, const MnsAggregate&) = default;
};

struct PairwiseTest {
    std::int64_t mns_a = 0;
    std::int64_t mns_b = 0;
    double u = 0;
    double p_value = 1;
    bool exact = false;
    friend bool operator==(const PairwiseTest&, const PairwiseTest&) = default;
};

struct AggregateReport {
    std::vector<MnsAggregate> per_mns;
    std::vector<PairwiseTest> pairwise;
    friend bool operator==(const AggregateReport&, const AggregateReport&) = default;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::string instance_name;
    int n_jobs = 0;
    int n_machines = 0;
    std::vector<RunRecord> runs;
    AggregateReport aggregate;
    bool complete = true;
};

/// Portals found per NWP invocation, in percent (0 when NWP never ran).
double portal_percentage(const RunReport& report);

/// Per-MNS order statistics of final_best, counter means, and pairwise
/// Mann-Whitney tests. MNS values without runs are skipped.
AggregateReport aggregate_runs(const std::vector<RunRecord>& runs,
                               const std::vector<std::int64_t>& mns_values);

/// Executes `runs` NILS runs per MNS value on a worker pool. Setting `*stop`
/// prevents further runs from starting; the result is then flagged
/// incomplete and holds only the finished runs.
ExperimentResult run_experiment(const Instance& instance, const ExperimentConfig& config,
                                const std::atomic<bool>* stop = nullptr);

} // namespace nils
