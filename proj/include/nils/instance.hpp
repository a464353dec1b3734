#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nils {

using ProcTime = std::int32_t;

/// Raw, unchecked instance contents. Used as the input of validation and
/// instance construction; may violate any invariant.
struct InstanceData {
    std::string name;
    int n_jobs = 0;
    int n_machines = 0;
    /// Job-major: proc_times[job][machine].
    std::vector<std::vector<std::int64_t>> proc_times;
    std::optional<std::int64_t> time_seed;
    std::optional<std::int64_t> best_known;
    std::optional<std::int64_t> lower_bound;
};

enum class ViolationKind {
    non_positive_jobs,
    non_positive_machines,
    dimension,
    negative_time,
    time_overflow,
    non_positive_bound,
};

struct Violation {
    ViolationKind kind;
    std::string message;
};

/// Lists every broken instance invariant; empty means the data is valid.
std::vector<Violation> validate(const InstanceData& data);

/// Immutable permutation-flowshop instance: N jobs, M machines and the
/// processing time of every (job, machine) task, stored job-major.
class Instance {
public:
    /// Throws std::invalid_argument listing the violations if `data` is invalid.
    explicit Instance(const InstanceData& data);

    int n_jobs() const { return n_jobs_; }
    int n_machines() const { return n_machines_; }
    const std::string& name() const { return name_; }
    std::optional<std::int64_t> time_seed() const { return time_seed_; }
    std::optional<std::int64_t> best_known() const { return best_known_; }
    std::optional<std::int64_t> lower_bound() const { return lower_bound_; }

    ProcTime time(int job, int machine) const
    {
        return times_[static_cast<std::size_t>(job) * n_machines_ + machine];
    }

    /// Processing times of one job along the machine sequence.
    std::span<const ProcTime> job_times(int job) const
    {
        return {times_.data() + static_cast<std::size_t>(job) * n_machines_,
                static_cast<std::size_t>(n_machines_)};
    }

    InstanceData data() const;

private:
    std::string name_;
    int n_jobs_;
    int n_machines_;
    std::vector<ProcTime> times_;
    std::optional<std::int64_t> time_seed_;
    std::optional<std::int64_t> best_known_;
    std::optional<std::int64_t> lower_bound_;
};

std::vector<Violation> validate(const Instance& instance);

enum class ParseErrorKind { header, marker, dimension, token, index, invalid };

/// Failure while reading the Taillard text format. `line()` is 1-based, 0
/// when the error is not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, int line, const std::string& what);

    ParseErrorKind kind() const { return kind_; }
    int line() const { return line_; }

private:
    ParseErrorKind kind_;
    int line_;
};

/// Reads every instance of a Taillard flowshop file. Each instance is an
/// optional descriptor line, a header of integers (jobs machines [seed
/// [upper [lower]]]), a marker line, then one row of N integers per machine.
std::vector<Instance> parse_instances(std::istream& in);

/// The `index`-th (0-based) instance of the stream.
Instance parse_instance(std::istream& in, std::size_t index);

Instance load_instance(const std::string& path, std::size_t index);

/// Writes instances in the layout read by parse_instances.
void write_instances(std::ostream& out, std::span<const Instance> instances);

/// Taillard's uniform generator: advances `seed` and returns an integer in
/// [low, high].
std::int64_t taillard_unif(std::int64_t& seed, std::int64_t low, std::int64_t high);

/// Instance built with Taillard's published generator (times in [1, 99],
/// drawn machine by machine). Throws std::invalid_argument unless
/// time_seed lies in [1, 2^31 - 2].
Instance generate_taillard(int n_jobs, int n_machines, std::int64_t time_seed);

} // namespace nils
