#include "nils/neighborhood.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace nils {

namespace {

void check_positions(std::size_t size, int a, int b)
{
    const int n = static_cast<int>(size);
    if (a < 0 || a >= n || b < 0 || b >= n)
        throw std::out_of_range("move position out of range: (" + std::to_string(a) + ", "
                                + std::to_string(b) + ") for length " + std::to_string(n));
    if (a == b)
        throw std::invalid_argument("move positions must differ");
}

} // namespace

void apply_insertion_in_place(Permutation& perm, InsertionMove move)
{
    check_positions(perm.size(), move.from, move.to);
    auto first = perm.begin();
    if (move.from < move.to)
        std::rotate(first + move.from, first + move.from + 1, first + move.to + 1);
    else
        std::rotate(first + move.to, first + move.from, first + move.from + 1);
}

Permutation apply_insertion(const Permutation& perm, InsertionMove move)
{
    Permutation out = perm;
    apply_insertion_in_place(out, move);
    return out;
}

void apply_exchange_in_place(Permutation& perm, ExchangeMove move)
{
    check_positions(perm.size(), move.a, move.b);
    std::swap(perm[move.a], perm[move.b]);
}

Permutation apply_exchange(const Permutation& perm, ExchangeMove move)
{
    Permutation out = perm;
    apply_exchange_in_place(out, move);
    return out;
}

std::int64_t insertion_neighborhood_size(int n)
{
    return n < 2 ? 0 : static_cast<std::int64_t>(n - 1) * (n - 1);
}

std::vector<InsertionMove> canonical_insertion_moves(int n)
{
    if (n < 2)
        throw std::invalid_argument("insertion neighborhood needs at least 2 jobs");
    std::vector<InsertionMove> moves;
    moves.reserve(static_cast<std::size_t>(insertion_neighborhood_size(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j != i && j != i - 1)
                moves.push_back({i, j});
    return moves;
}

void shuffle_moves(std::vector<InsertionMove>& moves, Rng& rng)
{
    for (std::size_t i = moves.size(); i > 1; --i) {
        const auto k = static_cast<std::size_t>(rng.below(i));
        std::swap(moves[i - 1], moves[k]);
    }
}

ScanOrder shuffled_scan(int n, Rng& rng)
{
    ScanOrder order{canonical_insertion_moves(n)};
    shuffle_moves(order.moves, rng);
    return order;
}

ExchangeMove random_exchange(int n, Rng& rng)
{
    if (n < 2)
        throw std::invalid_argument("exchange needs at least 2 positions");
    const int a = static_cast<int>(rng.below(n));
    int b = static_cast<int>(rng.below(n - 1));
    if (b >= a)
        ++b;
    return {a, b};
}

Permutation random_permutation(int n, Rng& rng)
{
    Permutation p = identity_permutation(n);
    for (int i = n; i > 1; --i) {
        const auto k = static_cast<int>(rng.below(i));
        std::swap(p[i - 1], p[k]);
    }
    return p;
}

InsertionNeighborhood::InsertionNeighborhood(const Instance& instance)
    : scanner_(instance),
      n_(instance.n_jobs()),
      rows_(static_cast<std::size_t>(n_) * n_),
      row_stamp_(n_, 0)
{
}

void InsertionNeighborhood::reset(const Permutation& perm)
{
    if (!is_valid_permutation(perm, n_))
        throw std::invalid_argument("InsertionNeighborhood::reset: invalid permutation");
    perm_ = perm;
    ++stamp_;
}

Fitness InsertionNeighborhood::fitness(InsertionMove move)
{
    check_positions(perm_.size(), move.from, move.to);
    const auto row = static_cast<std::size_t>(move.from) * n_;
    if (row_stamp_[move.from] != stamp_) {
        scanner_.scan(perm_, move.from, std::span<Fitness>(rows_.data() + row, n_));
        row_stamp_[move.from] = stamp_;
    }
    return rows_[row + move.to];
}

} // namespace nils
