#pragma once

#include "nils/instance.hpp"
#include "nils/makespan.hpp"
#include "nils/neighborhood.hpp"
#include "nils/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nils {

struct NilsConfig {
    /// Maximal number of steps of the neutral walk (MNS).
    std::int64_t mns = 0;
    /// Exchange moves per kick.
    int kick_strength = 3;
    /// Maximal number of fitness evaluations.
    std::int64_t budget = 20'000'000;
    std::uint64_t seed = 0;
};

/// Throws std::invalid_argument for a negative MNS, kick_strength < 1 or
/// budget < 1.
void check_config(const NilsConfig& config);

enum class NwpKind { portal_found, kicked, budget_exhausted };

std::string to_string(NwpKind kind);

struct NwpOutcome {
    NwpKind kind = NwpKind::kicked;
    std::int64_t neutral_steps_taken = 0;
    /// Evaluations spent by the walk itself, excluding the kick evaluation.
    std::int64_t evals_spent = 0;
};

/// Best-so-far improvement event.
struct TracePoint {
    std::int64_t evals = 0;
    Fitness best = 0;
    friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

/// Single-owner state of one NILS run.
class SearchState {
public:
    /// Draws a uniform random starting permutation from `rng` and evaluates
    /// it, consuming one evaluation.
    SearchState(const Instance& instance, std::int64_t budget, Rng rng);

    /// Starts from a given permutation (one evaluation).
    SearchState(const Instance& instance, Permutation start, std::int64_t budget, Rng rng);

    const Instance& instance() const { return *instance_; }
    const Permutation& current() const { return current_; }
    Fitness current_fitness() const { return current_fitness_; }
    const Permutation& best() const { return best_; }
    Fitness best_fitness() const { return best_fitness_; }
    std::int64_t evals_used() const { return evals_used_; }
    std::int64_t budget() const { return budget_; }
    bool exhausted() const { return evals_used_ >= budget_; }
    /// Lowest fitness of any solution evaluated so far.
    Fitness lowest_evaluated() const { return lowest_evaluated_; }
    const std::vector<TracePoint>& improvements() const { return improvements_; }
    Rng& rng() { return rng_; }

    /// Canonical insertion moves reshuffled with rng(); empty when N < 2.
    /// The returned view is invalidated by the next call.
    const std::vector<InsertionMove>& fresh_scan();

    /// Fitness of an insertion neighbor of current(); one evaluation.
    /// Precondition: !exhausted().
    Fitness evaluate_neighbor(InsertionMove move);

    /// Moves current() to the neighbor reached by `move`.
    void accept(InsertionMove move, Fitness fitness);

    /// Replaces current() with `perm` and evaluates it (one evaluation).
    /// Precondition: !exhausted().
    void replace(Permutation perm);

private:
    void init(Permutation start);
    void note(Fitness fitness);
    void update_best();

    const Instance* instance_;
    InsertionNeighborhood neighborhood_;
    std::vector<InsertionMove> moves_;
    Permutation current_;
    Fitness current_fitness_ = 0;
    Permutation best_;
    Fitness best_fitness_ = 0;
    Fitness lowest_evaluated_ = 0;
    std::int64_t evals_used_ = 0;
    std::int64_t budget_;
    Rng rng_;
    std::vector<TracePoint> improvements_;

};

/// First-improving hill climbing: scans the insertion neighborhood in a fresh
/// random order and moves to the first strictly better neighbor, until a
/// full scan finds none or the budget runs out. Returns true when current()
/// is a confirmed local optimum.
bool fihc(SearchState& state);

/// Kick: kick_strength random exchange moves, then one evaluation. The kicked
/// solution is always accepted. Returns false (and leaves the state intact)
/// when no evaluation is left.
bool kick(SearchState& state, const NilsConfig& config);

/// Neutral walk-based perturbation. Walks at most `mns` steps, each taking
/// the first neighbor with fitness <= current in a fresh random order; a
/// strictly better neighbor ends the walk as a portal. A walk that finds no
/// portal ends with a kick.
NwpOutcome nwp(SearchState& state, const NilsConfig& config);

struct RunReport {
    std::uint64_t seed = 0;
    std::int64_t mns = 0;
    int kick_strength = 3;
    std::int64_t budget = 0;
    std::int64_t evals_used = 0;
    Fitness initial_fitness = 0;
    Fitness final_best = 0;
    Permutation best_permutation;
    std::int64_t nwp_invocations = 0;
    std::int64_t portals_found = 0;
    std::int64_t kicks = 0;
    std::int64_t budget_exhausted_walks = 0;
    /// Evaluations spent in walks that ended in a kick.
    std::int64_t lost_evals = 0;
    std::int64_t neutral_steps_total = 0;
    std::int64_t fihc_calls = 0;
    /// (evals, best) every time best-so-far strictly improves, starting with
    /// the initial solution.
    std::vector<TracePoint> improvements;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Best-so-far fitness at each checkpoint, read off an improvement trace.
std::vector<TracePoint> sample_trajectory(const std::vector<TracePoint>& improvements,
                                          const std::vector<std::int64_t>& checkpoints);

/// Runs NILS: random start, FIHC, then {NWP; FIHC} until the budget is
/// spent. Deterministic in (instance, config).
RunReport run_nils(const Instance& instance, const NilsConfig& config);

} // namespace nils
