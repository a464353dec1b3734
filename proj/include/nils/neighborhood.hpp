#pragma once

#include "nils/makespan.hpp"
#include "nils/rng.hpp"

#include <cstdint>
#include <vector>

namespace nils {

/// Remove the job at `from` and reinsert it so that it ends at `to`.
struct InsertionMove {
    int from = 0;
    int to = 0;
    friend bool operator==(const InsertionMove&, const InsertionMove&) = default;
};

/// Swap the jobs at two positions.
struct ExchangeMove {
    int a = 0;
    int b = 0;
    friend bool operator==(const ExchangeMove&, const ExchangeMove&) = default;
};

/// Returns a copy of `perm` with the insertion applied. Throws
/// std::out_of_range / std::invalid_argument on bad positions.
Permutation apply_insertion(const Permutation& perm, InsertionMove move);
void apply_insertion_in_place(Permutation& perm, InsertionMove move);

Permutation apply_exchange(const Permutation& perm, ExchangeMove move);
void apply_exchange_in_place(Permutation& perm, ExchangeMove move);

/// Number of distinct insertion neighbors, (n-1)^2.
std::int64_t insertion_neighborhood_size(int n);

/// All insertion moves with (i -> i-1) dropped, since it yields the same
/// adjacent swap as (i-1 -> i). Exactly (n-1)^2 moves, lexicographic order.
/// Throws std::invalid_argument for n < 2.
std::vector<InsertionMove> canonical_insertion_moves(int n);

/// Canonical moves in a uniformly random order.
struct ScanOrder {
    std::vector<InsertionMove> moves;
};

/// Fisher-Yates shuffle of canonical_insertion_moves(n) driven by `rng`.
ScanOrder shuffled_scan(int n, Rng& rng);

/// In-place Fisher-Yates shuffle of `moves` driven by `rng`.
void shuffle_moves(std::vector<InsertionMove>& moves, Rng& rng);

/// Uniform exchange move with two distinct positions in [0, n). n >= 2.
ExchangeMove random_exchange(int n, Rng& rng);

/// Uniform random permutation of n jobs.
Permutation random_permutation(int n, Rng& rng);

/// Lazily evaluated insertion neighborhood of one solution.
///
/// The first query for a move (i -> j) runs an accelerated scan for the whole
/// row i and caches it; later queries with the same `from` are lookups. Call
/// reset() whenever the underlying solution changes.
class InsertionNeighborhood {
public:
    explicit InsertionNeighborhood(const Instance& instance);

    void reset(const Permutation& perm);

    Fitness fitness(InsertionMove move);

    const Permutation& solution() const { return perm_; }

private:
    InsertionScanner scanner_;
    Permutation perm_;
    int n_;
    std::vector<Fitness> rows_;
    std::vector<std::uint64_t> row_stamp_;
    std::uint64_t stamp_ = 1;
};

} // namespace nils
