#include "nils/makespan.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

namespace nils {

namespace {

void check_permutation(const Instance& instance, std::span<const int> perm)
{
    if (static_cast<int>(perm.size()) != instance.n_jobs())
        throw std::invalid_argument("permutation length " + std::to_string(perm.size())
                                    + " does not match " + std::to_string(instance.n_jobs())
                                    + " jobs");
    for (int job : perm)
        if (job < 0 || job >= instance.n_jobs())
            throw std::invalid_argument("job index " + std::to_string(job) + " out of range");
}

} // namespace

bool is_valid_permutation(std::span<const int> perm, int n)
{
    if (static_cast<int>(perm.size()) != n)
        return false;
    std::vector<char> seen(n, 0);
    for (int job : perm) {
        if (job < 0 || job >= n || seen[job])
            return false;
        seen[job] = 1;
    }
    return true;
}

Permutation identity_permutation(int n)
{
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Fitness evaluate(const Instance& instance, std::span<const int> perm)
{
    check_permutation(instance, perm);
    const int m = instance.n_machines();
    std::vector<Fitness> completion(m, 0);
    for (int job : perm) {
        auto times = instance.job_times(job);
        Fitness prev = 0;
        for (int j = 0; j < m; ++j) {
            prev = std::max(prev, completion[j]) + times[j];
            completion[j] = prev;
        }
    }
    return completion.back();
}

Fitness simulate_schedule(const Instance& instance, std::span<const int> perm)
{
    check_permutation(instance, perm);
    const int n = instance.n_jobs();
    const int m = instance.n_machines();

    // A task (position k, machine j) may start once the job left machine j-1
    // and machine j has released the job at position k-1.
    std::vector<char> job_ready(static_cast<std::size_t>(n) * m, 0);
    std::vector<int> machine_next(m, 0);
    std::vector<char> machine_busy(m, 0);
    for (int k = 0; k < n; ++k)
        job_ready[static_cast<std::size_t>(k) * m] = 1;

    using Event = std::tuple<Fitness, int, int>;  // finish time, position, machine
    std::priority_queue<Event, std::vector<Event>, std::greater<>> events;

    Fitness clock = 0;
    auto try_start = [&](int machine) {
        if (machine >= m || machine_busy[machine])
            return;
        const int k = machine_next[machine];
        if (k >= n || !job_ready[static_cast<std::size_t>(k) * m + machine])
            return;
        machine_busy[machine] = 1;
        events.emplace(clock + instance.time(perm[k], machine), k, machine);
    };

    try_start(0);
    Fitness last_finish = 0;
    while (!events.empty()) {
        auto [time, k, machine] = events.top();
        events.pop();
        clock = time;
        last_finish = std::max(last_finish, time);
        machine_busy[machine] = 0;
        ++machine_next[machine];
        if (machine + 1 < m)
            job_ready[static_cast<std::size_t>(k) * m + machine + 1] = 1;
        try_start(machine);
        try_start(machine + 1);
    }
    return last_finish;
}

Fitness load_lower_bound(const Instance& instance)
{
    Fitness bound = 0;
    for (int j = 0; j < instance.n_machines(); ++j) {
        Fitness load = 0;
        for (int i = 0; i < instance.n_jobs(); ++i)
            load += instance.time(i, j);
        bound = std::max(bound, load);
    }
    for (int i = 0; i < instance.n_jobs(); ++i) {
        auto times = instance.job_times(i);
        bound = std::max(bound, std::accumulate(times.begin(), times.end(), Fitness{0}));
    }
    return bound;
}

InsertionScanner::InsertionScanner(const Instance& instance)
    : instance_(&instance),
      n_(instance.n_jobs()),
      m_(instance.n_machines()),
      reduced_(std::max(0, n_ - 1)),
      heads_(static_cast<std::size_t>(n_) * m_),
      tails_(static_cast<std::size_t>(n_) * m_)
{
}

void InsertionScanner::scan(std::span<const int> perm, int removed_pos, std::span<Fitness> out)
{
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation length does not match instance");
    if (removed_pos < 0 || removed_pos >= n_)
        throw std::out_of_range("removed position " + std::to_string(removed_pos)
                                + " out of range");
    if (static_cast<int>(out.size()) != n_)
        throw std::invalid_argument("output span must hold one entry per position");

    const int r = n_ - 1;  // reduced length
    for (int k = 0, w = 0; k < n_; ++k)
        if (k != removed_pos)
            reduced_[w++] = perm[k];

    // heads_[k][j]: completion on machine j of the first k reduced jobs.
    std::fill_n(heads_.begin(), m_, Fitness{0});
    for (int k = 0; k < r; ++k) {
        const auto times = instance_->job_times(reduced_[k]);
        const Fitness* prev = heads_.data() + static_cast<std::size_t>(k) * m_;
        Fitness* cur = heads_.data() + static_cast<std::size_t>(k + 1) * m_;
        Fitness left = 0;
        for (int j = 0; j < m_; ++j) {
            left = std::max(left, prev[j]) + times[j];
            cur[j] = left;
        }
    }

    // tails_[k][j]: time from the start of machine j until the end for the
    // reduced suffix starting at k; tails_[r] is all zeros.
    std::fill_n(tails_.begin() + static_cast<std::ptrdiff_t>(r) * m_, m_, Fitness{0});
    for (int k = r - 1; k >= 0; --k) {
        const auto times = instance_->job_times(reduced_[k]);
        const Fitness* next = tails_.data() + static_cast<std::size_t>(k + 1) * m_;
        Fitness* cur = tails_.data() + static_cast<std::size_t>(k) * m_;
        Fitness right = 0;
        for (int j = m_ - 1; j >= 0; --j) {
            right = std::max(right, next[j]) + times[j];
            cur[j] = right;
        }
    }

    const auto inserted = instance_->job_times(perm[removed_pos]);
    for (int q = 0; q < n_; ++q) {
        const Fitness* head = heads_.data() + static_cast<std::size_t>(q) * m_;
        const Fitness* tail = tails_.data() + static_cast<std::size_t>(q) * m_;
        Fitness left = 0;
        Fitness cmax = 0;
        for (int j = 0; j < m_; ++j) {
            left = std::max(left, head[j]) + inserted[j];
            cmax = std::max(cmax, left + tail[j]);
        }
        out[q] = cmax;
    }
}

std::vector<Fitness> evaluate_insertion_scan(const Instance& instance,
                                             std::span<const int> perm,
                                             int removed_pos)
{
    if (!is_valid_permutation(perm, instance.n_jobs()))
        throw std::invalid_argument("invalid permutation for instance");
    InsertionScanner scanner(instance);
    std::vector<Fitness> out(instance.n_jobs());
    scanner.scan(perm, removed_pos, out);
    return out;
}

} // namespace nils
