#include "nils/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nils {

double quantile(std::span<const double> values, double p)
{
    if (values.empty())
        throw std::invalid_argument("quantile of an empty sample");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("quantile probability must lie in [0, 1]");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double h = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = h - static_cast<double>(lo);
    if (frac == 0.0)
        return sorted[lo];
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

Quartiles median_and_quartiles(std::span<const double> values)
{
    if (values.empty())
        throw std::invalid_argument("median of an empty sample");
    return {quantile(values, 0.25), quantile(values, 0.5), quantile(values, 0.75)};
}

double mean(std::span<const double> values)
{
    if (values.empty())
        throw std::invalid_argument("mean of an empty sample");
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double sample_stddev(std::span<const double> values)
{
    if (values.size() < 2)
        return 0.0;
    const double mu = mean(values);
    double ss = 0.0;
    for (double v : values)
        ss += (v - mu) * (v - mu);
    return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

namespace {

// Midranks (1-based) of the pooled sample.
std::vector<double> midranks(const std::vector<double>& pooled)
{
    std::vector<std::size_t> order(pooled.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return pooled[x] < pooled[y]; });
    std::vector<double> ranks(pooled.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && pooled[order[j + 1]] == pooled[order[i]])
            ++j;
        const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k)
            ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

double normal_sf(double z)
{
    return 0.5 * std::erfc(z / std::sqrt(2.0));
}

} // namespace

MannWhitney mann_whitney_u(std::span<const double> a, std::span<const double> b)
{
    if (a.empty() || b.empty())
        throw std::invalid_argument("Mann-Whitney test needs two non-empty samples");
    const auto na = a.size();
    const auto nb = b.size();
    std::vector<double> pooled(a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    const std::vector<double> ranks = midranks(pooled);

    const double offset = static_cast<double>(na) * static_cast<double>(na + 1) / 2.0;
    double rank_sum = 0.0;
    for (std::size_t i = 0; i < na; ++i)
        rank_sum += ranks[i];

    MannWhitney result;
    result.u = rank_sum - offset;
    const double mu = static_cast<double>(na) * static_cast<double>(nb) / 2.0;
    const double observed = std::abs(result.u - mu);
    // Ranks and rank sums are multiples of 1/2; compare with slack.
    constexpr double slack = 1e-9;

    if (na < 8 && nb < 8) {
        // Enumerate every choice of na pooled ranks for sample a.
        const std::size_t n = na + nb;
        std::vector<char> pick(n, 0);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(na), 1);
        std::sort(pick.begin(), pick.end());
        std::size_t total = 0;
        std::size_t extreme = 0;
        do {
            double sum = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                if (pick[i])
                    sum += ranks[i];
            ++total;
            if (std::abs(sum - offset - mu) >= observed - slack)
                ++extreme;
        } while (std::next_permutation(pick.begin(), pick.end()));
        result.p_value = static_cast<double>(extreme) / static_cast<double>(total);
        result.exact = true;
        return result;
    }

    const double n = static_cast<double>(na + nb);
    std::vector<double> sorted = pooled;
    std::sort(sorted.begin(), sorted.end());
    double tie_term = 0.0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i])
            ++j;
        const double t = static_cast<double>(j - i);
        tie_term += t * t * t - t;
        i = j;
    }
    const double variance = static_cast<double>(na) * static_cast<double>(nb) / 12.0
                            * ((n + 1.0) - tie_term / (n * (n - 1.0)));
    if (variance <= 0.0) {
        result.p_value = 1.0;
        return result;
    }
    const double z = std::max(0.0, observed - 0.5) / std::sqrt(variance);
    result.p_value = std::min(1.0, 2.0 * normal_sf(z));
    return result;
}

} // namespace nils
