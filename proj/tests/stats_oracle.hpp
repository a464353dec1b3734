#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace nils::test {

/// U of sample a by direct pair counting (ties count one half).
inline double pair_count_u(const std::vector<double>& a, const std::vector<double>& b)
{
    double u = 0.0;
    for (double x : a)
        for (double y : b)
            u += x > y ? 1.0 : (x == y ? 0.5 : 0.0);
    return u;
}

/// Two-sided permutation-test p-value over every ordering of the pooled
/// values (first |a| go to sample a).
inline double permutation_p_value(const std::vector<double>& a, const std::vector<double>& b)
{
    const double mu = static_cast<double>(a.size() * b.size()) / 2.0;
    const double observed = std::abs(pair_count_u(a, b) - mu);
    std::vector<double> pooled(a);
    pooled.insert(pooled.end(), b.begin(), b.end());
    std::vector<std::size_t> idx(pooled.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    long total = 0;
    long extreme = 0;
    do {
        std::vector<double> x;
        std::vector<double> y;
        for (std::size_t i = 0; i < idx.size(); ++i)
            (i < a.size() ? x : y).push_back(pooled[idx[i]]);
        ++total;
        if (std::abs(pair_count_u(x, y) - mu) >= observed - 1e-9)
            ++extreme;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return static_cast<double>(extreme) / static_cast<double>(total);
}

} // namespace nils::test
