#include "nils/search.hpp"

#include <stdexcept>
#include <utility>

namespace nils {

void check_config(const NilsConfig& config)
{
    if (config.mns < 0)
        throw std::invalid_argument("MNS must be non-negative");
    if (config.kick_strength < 1)
        throw std::invalid_argument("kick strength must be at least 1");
    if (config.budget < 1)
        throw std::invalid_argument("evaluation budget must be at least 1");
}

std::string to_string(NwpKind kind)
{
    switch (kind) {
    case NwpKind::portal_found:
        return "portal_found";
    case NwpKind::kicked:
        return "kicked";
    case NwpKind::budget_exhausted:
        return "budget_exhausted";
    }
    return "unknown";
}

SearchState::SearchState(const Instance& instance, std::int64_t budget, Rng rng)
    : instance_(&instance),
      neighborhood_(instance),
      budget_(budget),
      rng_(rng)
{
    Permutation start = random_permutation(instance.n_jobs(), rng_);
    init(std::move(start));
}

SearchState::SearchState(const Instance& instance, Permutation start, std::int64_t budget, Rng rng)
    : instance_(&instance),
      neighborhood_(instance),
      budget_(budget),
      rng_(rng)
{
    init(std::move(start));
}

void SearchState::init(Permutation start)
{
    if (budget_ < 1)
        throw std::invalid_argument("evaluation budget must be at least 1");
    if (!is_valid_permutation(start, instance_->n_jobs()))
        throw std::invalid_argument("starting solution is not a permutation");
    if (instance_->n_jobs() >= 2)
        moves_ = canonical_insertion_moves(instance_->n_jobs());
    current_fitness_ = evaluate(*instance_, start);
    current_ = std::move(start);
    evals_used_ = 1;
    best_ = current_;
    best_fitness_ = current_fitness_;
    lowest_evaluated_ = current_fitness_;
    improvements_.push_back({evals_used_, best_fitness_});
    neighborhood_.reset(current_);
}

const std::vector<InsertionMove>& SearchState::fresh_scan()
{
    shuffle_moves(moves_, rng_);
    return moves_;
}

void SearchState::note(Fitness fitness)
{
    ++evals_used_;
    if (fitness < lowest_evaluated_)
        lowest_evaluated_ = fitness;
}

void SearchState::update_best()
{
    if (current_fitness_ < best_fitness_) {
        best_fitness_ = current_fitness_;
        best_ = current_;
        improvements_.push_back({evals_used_, best_fitness_});
    }
}

Fitness SearchState::evaluate_neighbor(InsertionMove move)
{
    const Fitness f = neighborhood_.fitness(move);
    note(f);
    return f;
}

void SearchState::accept(InsertionMove move, Fitness fitness)
{
    apply_insertion_in_place(current_, move);
    current_fitness_ = fitness;
    neighborhood_.reset(current_);
    update_best();
}

void SearchState::replace(Permutation perm)
{
    const Fitness f = evaluate(*instance_, perm);
    note(f);
    current_ = std::move(perm);
    current_fitness_ = f;
    neighborhood_.reset(current_);
    update_best();
}

bool fihc(SearchState& state)
{
    while (true) {
        bool improved = false;
        for (const InsertionMove move : state.fresh_scan()) {
            if (state.exhausted())
                return false;
            const Fitness f = state.evaluate_neighbor(move);
            if (f < state.current_fitness()) {
                state.accept(move, f);
                improved = true;
                break;
            }
        }
        if (!improved)
            return true;
    }
}

bool kick(SearchState& state, const NilsConfig& config)
{
    if (state.exhausted())
        return false;
    Permutation perm = state.current();
    const int n = static_cast<int>(perm.size());
    if (n >= 2)
        for (int s = 0; s < config.kick_strength; ++s)
            apply_exchange_in_place(perm, random_exchange(n, state.rng()));
    state.replace(std::move(perm));
    return true;
}

NwpOutcome nwp(SearchState& state, const NilsConfig& config)
{
    NwpOutcome outcome;
    const std::int64_t evals_at_start = state.evals_used();
    std::int64_t step = 0;
    while (step < config.mns) {
        const Fitness plateau = state.current_fitness();
        bool found = false;
        for (const InsertionMove move : state.fresh_scan()) {
            if (state.exhausted()) {
                outcome.kind = NwpKind::budget_exhausted;
                outcome.evals_spent = state.evals_used() - evals_at_start;
                return outcome;
            }
            const Fitness f = state.evaluate_neighbor(move);
            if (f <= plateau) {
                state.accept(move, f);
                found = true;
                break;
            }
        }
        if (!found)
            break;  // no neutral neighbor left: the walk is stuck
        ++step;
        if (state.current_fitness() < plateau) {
            outcome.kind = NwpKind::portal_found;
            outcome.evals_spent = state.evals_used() - evals_at_start;
            return outcome;
        }
        ++outcome.neutral_steps_taken;
    }
    outcome.evals_spent = state.evals_used() - evals_at_start;
    outcome.kind = kick(state, config) ? NwpKind::kicked : NwpKind::budget_exhausted;
    return outcome;
}

std::vector<TracePoint> sample_trajectory(const std::vector<TracePoint>& improvements,
                                          const std::vector<std::int64_t>& checkpoints)
{
    std::vector<TracePoint> out;
    out.reserve(checkpoints.size());
    std::size_t i = 0;
    for (const std::int64_t at : checkpoints) {
        while (i + 1 < improvements.size() && improvements[i + 1].evals <= at)
            ++i;
        if (improvements.empty() || improvements[i].evals > at)
            continue;
        out.push_back({at, improvements[i].best});
    }
    return out;
}

RunReport run_nils(const Instance& instance, const NilsConfig& config)
{
    check_config(config);
    SearchState state(instance, config.budget, Rng(config.seed));

    RunReport report;
    report.seed = config.seed;
    report.mns = config.mns;
    report.kick_strength = config.kick_strength;
    report.budget = config.budget;
    report.initial_fitness = state.current_fitness();

    ++report.fihc_calls;
    fihc(state);
    while (!state.exhausted()) {
        const NwpOutcome outcome = nwp(state, config);
        ++report.nwp_invocations;
        report.neutral_steps_total += outcome.neutral_steps_taken;
        switch (outcome.kind) {
        case NwpKind::portal_found:
            ++report.portals_found;
            break;
        case NwpKind::kicked:
            ++report.kicks;
            report.lost_evals += outcome.evals_spent;
            break;
        case NwpKind::budget_exhausted:
            ++report.budget_exhausted_walks;
            break;
        }
        if (state.exhausted())
            break;
        ++report.fihc_calls;
        fihc(state);
    }

    report.evals_used = state.evals_used();
    report.final_best = state.best_fitness();
    report.best_permutation = state.best();
    report.improvements = state.improvements();
    return report;
}

} // namespace nils
