#pragma once

#include "nils/instance.hpp"
#include "nils/landscape.hpp"
#include "nils/makespan.hpp"
#include "nils/rng.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace nils::test {

/// Instance with uniform integer times in [lo, hi], drawn from `rng`.
inline Instance random_instance(int n, int m, Rng& rng, int lo = 1, int hi = 99)
{
    InstanceData d;
    d.name = "random";
    d.n_jobs = n;
    d.n_machines = m;
    d.proc_times.assign(n, std::vector<std::int64_t>(m));
    for (auto& row : d.proc_times)
        for (auto& p : row)
            p = lo + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
    return Instance(d);
}

/// Every job has the same time c on every machine.
inline Instance flat_instance(int n, int m, int c = 5)
{
    InstanceData d;
    d.name = "flat";
    d.n_jobs = n;
    d.n_machines = m;
    d.proc_times.assign(n, std::vector<std::int64_t>(m, c));
    return Instance(d);
}

/// Reference insertion: erase then insert, independent of the library's
/// rotate-based implementation.
inline Permutation naive_insert(Permutation p, int from, int to)
{
    const int job = p[from];
    p.erase(p.begin() + from);
    p.insert(p.begin() + to, job);
    return p;
}

/// All distinct insertion neighbors by brute force over ordered pairs.
inline std::vector<Permutation> brute_neighbors(const Permutation& p)
{
    std::vector<Permutation> out;
    const int n = static_cast<int>(p.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                out.push_back(naive_insert(p, i, j));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::pair<Permutation, Fitness> brute_optimum(const Instance& inst)
{
    Permutation p = identity_permutation(inst.n_jobs());
    Permutation best = p;
    Fitness best_f = evaluate(inst, p);
    while (std::next_permutation(p.begin(), p.end())) {
        const Fitness f = evaluate(inst, p);
        if (f < best_f) {
            best_f = f;
            best = p;
        }
    }
    return {best, best_f};
}

inline bool has_strict_improver(const Instance& inst, const Permutation& p)
{
    const Fitness f = evaluate(inst, p);
    for (const auto& q : brute_neighbors(p))
        if (evaluate(inst, q) < f)
            return true;
    return false;
}

struct PortalCase {
    Instance instance;
    Permutation start;
    Fitness plateau;
};

/// A 4x3 local optimum whose plateau holds a portal, found by exhaustive
/// search over random instances with small processing times.
inline PortalCase find_portal_case(std::uint64_t seed)
{
    Rng rng(seed);
    while (true) {
        Instance inst = random_instance(4, 3, rng, 1, 4);
        Permutation p = identity_permutation(4);
        do {
            if (has_strict_improver(inst, p))
                continue;
            const Plateau plateau = enumerate_plateau(inst, p);
            if (!plateau.portals.empty())
                return {inst, p, plateau.fitness};
        } while (std::next_permutation(p.begin(), p.end()));
    }
}

} // namespace nils::test
