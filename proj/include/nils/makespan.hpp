#pragma once

#include "nils/instance.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace nils {

/// Job sequence; order[k] is the job processed at position k.
using Permutation = std::vector<int>;

/// Makespan value. Integral so neutrality is exact equality.
using Fitness = std::int64_t;

/// True iff `perm` is a bijection on {0, ..., n-1}.
bool is_valid_permutation(std::span<const int> perm, int n);

/// Identity sequence (0, 1, ..., n-1).
Permutation identity_permutation(int n);

/// C_max by the completion-time recursion, O(N*M). Throws
/// std::invalid_argument when the length differs from N or a job index is
/// out of range.
Fitness evaluate(const Instance& instance, std::span<const int> perm);

/// C_max by discrete-event simulation of machine availability. Independent
/// of the recursion in evaluate(); kept as a test oracle.
Fitness simulate_schedule(const Instance& instance, std::span<const int> perm);

/// Lower bound max(largest machine load, longest job).
Fitness load_lower_bound(const Instance& instance);

/// Taillard-accelerated insertion scan with reusable buffers.
///
/// For a removed position r, computes the makespan of every sequence
/// obtained by reinserting perm[r] at each position q in [0, N), in O(N*M)
/// total, using head times of the reduced sequence prefixes and tail times
/// of its suffixes. Results are exact.
class InsertionScanner {
public:
    explicit InsertionScanner(const Instance& instance);

    /// Writes N fitness values into `out`; out[q] is the fitness after moving
    /// the job at `removed_pos` to position q (out[removed_pos] = C_max(perm)).
    void scan(std::span<const int> perm, int removed_pos, std::span<Fitness> out);

    const Instance& instance() const { return *instance_; }

private:
    const Instance* instance_;
    int n_;
    int m_;
    std::vector<int> reduced_;
    std::vector<Fitness> heads_;  // (N) x M, heads_[k*M + j]: prefix of k jobs
    std::vector<Fitness> tails_;  // (N) x M, tails_[k*M + j]: suffix from k
};

/// Convenience wrapper around InsertionScanner. Throws std::out_of_range
/// for a bad position and std::invalid_argument for a bad permutation.
std::vector<Fitness> evaluate_insertion_scan(const Instance& instance,
                                             std::span<const int> perm,
                                             int removed_pos);

} // namespace nils
