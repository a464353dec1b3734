#include "nils/experiment.hpp"

#include "nils/rng.hpp"
#include "nils/stats.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace nils {

Instance InstanceSource::load() const
{
    if (file)
        return load_instance(*file, index);
    return generate_taillard(jobs, machines, time_seed);
}

std::string InstanceSource::describe() const
{
    if (file)
        return *file + "#" + std::to_string(index);
    return "taillard(" + std::to_string(jobs) + "," + std::to_string(machines) + ","
           + std::to_string(time_seed) + ")";
}

std::vector<std::int64_t> default_checkpoints(std::int64_t budget)
{
    std::vector<std::int64_t> out;
    for (std::int64_t scale = 1; scale <= budget; scale *= 10) {
        for (std::int64_t factor : {1, 2, 5}) {
            const std::int64_t c = scale * factor;
            if (c < budget)
                out.push_back(c);
        }
        if (scale > budget / 10)
            break;
    }
    out.push_back(budget);
    return out;
}

void check_experiment_config(const ExperimentConfig& config)
{
    if (config.runs < 1)
        throw std::invalid_argument("runs must be at least 1");
    if (config.mns_values.empty())
        throw std::invalid_argument("at least one MNS value is required");
    for (auto mns : config.mns_values)
        if (mns < 0)
            throw std::invalid_argument("MNS values must be non-negative");
    for (std::size_t i = 0; i < config.mns_values.size(); ++i)
        for (std::size_t j = i + 1; j < config.mns_values.size(); ++j)
            if (config.mns_values[i] == config.mns_values[j])
                throw std::invalid_argument("MNS values must be distinct");
    if (config.budget < 1)
        throw std::invalid_argument("evaluation budget must be at least 1");
    if (config.kick_strength < 1)
        throw std::invalid_argument("kick strength must be at least 1");
    if (!std::is_sorted(config.checkpoints.begin(), config.checkpoints.end()))
        throw std::invalid_argument("checkpoints must be sorted ascending");
    for (auto c : config.checkpoints)
        if (c < 1 || c > config.budget)
            throw std::invalid_argument("checkpoints must lie in [1, budget]");
}

std::uint64_t derive_run_seed(std::uint64_t base_seed, std::int64_t mns, int run_index)
{
    return mix_seed(base_seed, static_cast<std::uint64_t>(mns), static_cast<std::uint64_t>(run_index));
}

double portal_percentage(const RunReport& report)
{
    if (report.nwp_invocations == 0)
        return 0.0;
    return 100.0 * static_cast<double>(report.portals_found)
           / static_cast<double>(report.nwp_invocations);
}

AggregateReport aggregate_runs(const std::vector<RunRecord>& runs,
                               const std::vector<std::int64_t>& mns_values)
{
    AggregateReport out;
    std::vector<std::pair<std::int64_t, std::vector<double>>> samples;
    for (const std::int64_t mns : mns_values) {
        std::vector<double> finals;
        std::vector<double> portals;
        std::vector<double> lost;
        for (const auto& run : runs) {
            if (run.report.mns != mns)
                continue;
            finals.push_back(static_cast<double>(run.report.final_best));
            portals.push_back(portal_percentage(run.report));
            lost.push_back(static_cast<double>(run.report.lost_evals));
        }
        if (finals.empty())
            continue;
        const Quartiles q = median_and_quartiles(finals);
        MnsAggregate agg;
        agg.mns = mns;
        agg.runs = finals.size();
        agg.q1 = q.q1;
        agg.median = q.median;
        agg.q3 = q.q3;
        agg.min = *std::min_element(finals.begin(), finals.end());
        agg.max = *std::max_element(finals.begin(), finals.end());
        agg.portal_pct_mean = mean(portals);
        agg.portal_pct_sd = sample_stddev(portals);
        agg.lost_evals_mean = mean(lost);
        agg.lost_evals_sd = sample_stddev(lost);
        out.per_mns.push_back(agg);
        samples.emplace_back(mns, std::move(finals));
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = i + 1; j < samples.size(); ++j) {
            const MannWhitney mw = mann_whitney_u(samples[i].second, samples[j].second);
            out.pairwise.push_back({samples[i].first, samples[j].first, mw.u, mw.p_value, mw.exact});
        }
    }
    return out;
}

ExperimentResult run_experiment(const Instance& instance, const ExperimentConfig& config,
                                const std::atomic<bool>* stop)
{
    check_experiment_config(config);

    struct Job {
        std::int64_t mns;
        int run_index;
    };
    std::vector<Job> jobs;
    for (const auto mns : config.mns_values)
        for (int r = 0; r < config.runs; ++r)
            jobs.push_back({mns, r});

    std::vector<std::optional<RunRecord>> slots(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            if (stop && stop->load())
                return;
            const std::size_t k = next.fetch_add(1);
            if (k >= jobs.size())
                return;
            NilsConfig nc;
            nc.mns = jobs[k].mns;
            nc.kick_strength = config.kick_strength;
            nc.budget = config.budget;
            nc.seed = derive_run_seed(config.base_seed, jobs[k].mns, jobs[k].run_index);

            const auto start = std::chrono::steady_clock::now();
            RunRecord rec;
            rec.report = run_nils(instance, nc);
            rec.runtime_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
            rec.instance = instance.name();
            rec.n_jobs = instance.n_jobs();
            rec.n_machines = instance.n_machines();
            rec.run_index = jobs[k].run_index;
            rec.trajectory = sample_trajectory(rec.report.improvements, config.checkpoints);
            slots[k] = std::move(rec);
        }
    };

    unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
    threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(jobs.size()));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }

    ExperimentResult result;
    result.config = config;
    result.instance_name = instance.name();
    result.n_jobs = instance.n_jobs();
    result.n_machines = instance.n_machines();
    for (auto& slot : slots) {
        if (slot)
            result.runs.push_back(std::move(*slot));
        else
            result.complete = false;
    }
    result.aggregate = aggregate_runs(result.runs, config.mns_values);
    return result;
}

} // namespace nils
