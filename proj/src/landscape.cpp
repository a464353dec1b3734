#include "nils/landscape.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace nils {

namespace {

struct FullScan {
    Fitness fitness = 0;
    std::vector<InsertionMove> neutral;
    std::int64_t improving = 0;
    std::int64_t evaluations = 0;
};

FullScan scan_all(const Instance& instance, const Permutation& perm,
                  const std::vector<InsertionMove>& moves, InsertionNeighborhood& hood)
{
    FullScan out;
    out.fitness = evaluate(instance, perm);
    hood.reset(perm);
    for (const InsertionMove move : moves) {
        const Fitness f = hood.fitness(move);
        ++out.evaluations;
        if (f == out.fitness)
            out.neutral.push_back(move);
        else if (f < out.fitness)
            ++out.improving;
    }
    return out;
}

} // namespace

NeutralityProbe neutral_degree(const Instance& instance, const Permutation& perm)
{
    const auto moves = canonical_insertion_moves(instance.n_jobs());
    InsertionNeighborhood hood(instance);
    const FullScan scan = scan_all(instance, perm, moves, hood);

    NeutralityProbe probe;
    probe.fitness = scan.fitness;
    probe.neutral_degree = static_cast<std::int64_t>(scan.neutral.size());
    probe.improving_neighbors = scan.improving;
    probe.neighborhood_size = static_cast<std::int64_t>(moves.size());
    probe.is_local_optimum = scan.improving == 0;
    probe.evaluations = scan.evaluations;
    return probe;
}

std::optional<std::int64_t> NeutralWalkTrace::first_portal() const
{
    for (std::size_t k = 0; k < portal_adjacent.size(); ++k)
        if (portal_adjacent[k])
            return static_cast<std::int64_t>(k);
    return std::nullopt;
}

NeutralWalkTrace random_neutral_walk(const Instance& instance, const Permutation& start,
                                     std::int64_t max_steps, Rng& rng)
{
    NeutralWalkTrace trace;
    trace.fitness = evaluate(instance, start);
    trace.solutions.push_back(start);
    if (instance.n_jobs() < 2) {
        trace.portal_adjacent.push_back(false);
        trace.neutral_degrees.push_back(0);
        return trace;
    }

    const auto moves = canonical_insertion_moves(instance.n_jobs());
    InsertionNeighborhood hood(instance);
    Permutation current = start;
    for (std::int64_t step = 0;; ++step) {
        const FullScan scan = scan_all(instance, current, moves, hood);
        trace.evaluations += scan.evaluations;
        trace.portal_adjacent.push_back(scan.improving > 0);
        trace.neutral_degrees.push_back(static_cast<std::int64_t>(scan.neutral.size()));
        if (step == max_steps || scan.neutral.empty())
            break;
        const InsertionMove move = scan.neutral[rng.below(scan.neutral.size())];
        apply_insertion_in_place(current, move);
        trace.solutions.push_back(current);
    }
    return trace;
}

NeutralityProbe probe(const Instance& instance, const Permutation& perm,
                      std::int64_t walk_steps, Rng& rng)
{
    NeutralityProbe out = neutral_degree(instance, perm);
    const NeutralWalkTrace walk = random_neutral_walk(instance, perm, walk_steps, rng);
    out.has_portal_within = walk.first_portal();
    out.evaluations += walk.evaluations;
    return out;
}

Plateau enumerate_plateau(const Instance& instance, const Permutation& start)
{
    if (instance.n_jobs() > 6)
        throw std::invalid_argument("plateau enumeration is limited to N <= 6");
    Plateau plateau;
    plateau.fitness = evaluate(instance, start);
    if (instance.n_jobs() < 2) {
        plateau.members.push_back(start);
        plateau.contains_local_optimum = true;
        return plateau;
    }

    // Plain move-then-evaluate, deliberately avoiding the accelerated scan.
    const auto moves = canonical_insertion_moves(instance.n_jobs());
    std::set<Permutation> seen{start};
    std::deque<Permutation> queue{start};
    while (!queue.empty()) {
        Permutation s = std::move(queue.front());
        queue.pop_front();
        bool portal = false;
        for (const InsertionMove move : moves) {
            Permutation next = apply_insertion(s, move);
            const Fitness f = evaluate(instance, next);
            if (f < plateau.fitness)
                portal = true;
            else if (f == plateau.fitness && seen.insert(next).second)
                queue.push_back(std::move(next));
        }
        if (portal)
            plateau.portals.push_back(s);
        else
            plateau.contains_local_optimum = true;
        plateau.members.push_back(std::move(s));
    }
    return plateau;
}

} // namespace nils
