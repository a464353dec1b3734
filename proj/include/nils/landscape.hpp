#pragma once

#include "nils/instance.hpp"
#include "nils/makespan.hpp"
#include "nils/neighborhood.hpp"
#include "nils/rng.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace nils {

struct NeutralityProbe {
    Fitness fitness = 0;
    std::int64_t neutral_degree = 0;
    std::int64_t improving_neighbors = 0;
    std::int64_t neighborhood_size = 0;
    bool is_local_optimum = false;
    /// Step of a random neutral walk at which a portal was first adjacent.
    std::optional<std::int64_t> has_portal_within;
    std::int64_t evaluations = 0;
};

/// Exhaustive scan of the (N-1)^2 insertion neighbors of `perm`. Throws
/// std::invalid_argument when N < 2.
NeutralityProbe neutral_degree(const Instance& instance, const Permutation& perm);

struct NeutralWalkTrace {
    /// Visited solutions, starting with the start solution.
    std::vector<Permutation> solutions;
    Fitness fitness = 0;
    /// portal_adjacent[k]: solutions[k] has a strictly better neighbor.
    std::vector<bool> portal_adjacent;
    std::vector<std::int64_t> neutral_degrees;
    std::int64_t evaluations = 0;

    std::int64_t steps() const { return static_cast<std::int64_t>(solutions.size()) - 1; }
    std::optional<std::int64_t> first_portal() const;
};

/// Random neutral walk: at each visited solution, scans the full
/// neighborhood and moves to a neutral neighbor chosen uniformly, for at
/// most `max_steps` steps. Stops early at a solution with no neutral
/// neighbor. Every visited solution is scanned, so portal adjacency is
/// reported for each of them.
NeutralWalkTrace random_neutral_walk(const Instance& instance, const Permutation& start,
                                     std::int64_t max_steps, Rng& rng);

/// neutral_degree() plus a random neutral walk of `walk_steps` steps that
/// fills has_portal_within.
NeutralityProbe probe(const Instance& instance, const Permutation& perm,
                      std::int64_t walk_steps, Rng& rng);

struct Plateau {
    Fitness fitness = 0;
    std::vector<Permutation> members;
    /// Members with a strictly better neighbor.
    std::vector<Permutation> portals;
    bool contains_local_optimum = false;
};

/// Breadth-first enumeration of the plateau containing `start`. Test
/// oracle for tiny instances only; throws std::invalid_argument for N > 6.
Plateau enumerate_plateau(const Instance& instance, const Permutation& start);

} // namespace nils
