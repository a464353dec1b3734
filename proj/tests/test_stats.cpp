#include "nils/stats.hpp"

#include "stats_oracle.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace nils;

TEST_CASE("quartiles of a single value")
{
    const std::vector<double> v{5};
    const Quartiles q = median_and_quartiles(v);
    CHECK(q.q1 == 5);
    CHECK(q.median == 5);
    CHECK(q.q3 == 5);
}

TEST_CASE("even-length median is the mean of the middle pair")
{
    CHECK(median_and_quartiles(std::vector<double>{1, 2, 3, 4}).median == 2.5);
    CHECK(median_and_quartiles(std::vector<double>{6375, 6376}).median == 6375.5);
    CHECK(median_and_quartiles(std::vector<double>{6376, 6375}).median == 6375.5);
}

TEST_CASE("linear-interpolation quartiles")
{
    // numpy.percentile([3,1,4,1,5,9,2,6], [25,50,75]) = 1.75, 3.5, 5.25
    const Quartiles q = median_and_quartiles(std::vector<double>{3, 1, 4, 1, 5, 9, 2, 6});
    CHECK(q.q1 == doctest::Approx(1.75));
    CHECK(q.median == doctest::Approx(3.5));
    CHECK(q.q3 == doctest::Approx(5.25));
    CHECK(q.q1 <= q.median);
    CHECK(q.median <= q.q3);
    CHECK_THROWS_AS(median_and_quartiles(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(quantile(std::vector<double>{1}, 1.5), std::invalid_argument);
}

TEST_CASE("mean and sample standard deviation")
{
    const std::vector<double> v{2, 4, 4, 4, 5, 5, 7, 9};
    CHECK(mean(v) == doctest::Approx(5.0));
    CHECK(sample_stddev(v) == doctest::Approx(2.138089935));
    CHECK(sample_stddev(std::vector<double>{3}) == 0.0);
}

TEST_CASE("Mann-Whitney U for separated samples")
{
    const std::vector<double> a{1, 2, 3};
    const std::vector<double> b{10, 11, 12};
    CHECK(mann_whitney_u(a, b).u == 0.0);
    CHECK(mann_whitney_u(b, a).u == 9.0);
    // scipy.stats.mannwhitneyu([1,2,3,4], [5,6,7,8], method="exact")
    const MannWhitney r = mann_whitney_u(std::vector<double>{1, 2, 3, 4}, std::vector<double>{5, 6, 7, 8});
    CHECK(r.exact);
    CHECK(r.p_value == doctest::Approx(0.028571428571));
}

TEST_CASE("identical samples are not significantly different")
{
    const std::vector<double> small{3, 1, 4, 1, 5};
    CHECK(mann_whitney_u(small, small).p_value == doctest::Approx(1.0));
    std::vector<double> big;
    for (int i = 0; i < 30; ++i)
        big.push_back(1000 + (i * 7) % 13);
    const MannWhitney r = mann_whitney_u(big, big);
    CHECK_FALSE(r.exact);
    CHECK(r.p_value == doctest::Approx(1.0));
    const std::vector<double> tied(12, 4.0);
    CHECK(mann_whitney_u(tied, tied).p_value == 1.0);
}

TEST_CASE("exact p-values match permutation enumeration")
{
    const std::vector<std::pair<std::vector<double>, std::vector<double>>> cases{
        {{1, 3, 5, 7}, {2, 4, 6, 8}},
        {{1, 2, 2, 9}, {2, 3, 3, 4}},
        {{10, 10, 10, 12}, {10, 11, 13, 14}},
        {{1, 3, 5, 7, 9}, {2, 4, 6}},
        {{5, 5, 6, 7, 7}, {5, 7, 8}},
        {{1, 2, 3, 4, 5}, {6, 7, 8}},
    };
    for (const auto& [a, b] : cases) {
        const MannWhitney r = mann_whitney_u(a, b);
        CHECK(r.exact);
        CHECK(r.u == nils::test::pair_count_u(a, b));
        CHECK(r.p_value == doctest::Approx(nils::test::permutation_p_value(a, b)).epsilon(1e-12));
    }
    // scipy.stats.mannwhitneyu([1,3,5,7,9], [2,4,6], method="exact")
    CHECK(mann_whitney_u(std::vector<double>{1, 3, 5, 7, 9}, std::vector<double>{2, 4, 6}).p_value
          == doctest::Approx(0.785714285714));
}

TEST_CASE("normal approximation with tie and continuity corrections")
{
    // Reference values: scipy.stats.mannwhitneyu(..., method="asymptotic").
    std::vector<double> a;
    std::vector<double> b;
    for (int i = 0; i < 10; ++i)
        a.push_back(i);
    for (int i = 0; i < 12; ++i)
        b.push_back(i + 3);
    MannWhitney r = mann_whitney_u(a, b);
    CHECK_FALSE(r.exact);
    CHECK(r.u == 24.5);
    CHECK(r.p_value == doctest::Approx(0.020755311537).epsilon(1e-9));

    r = mann_whitney_u(std::vector<double>{1, 1, 2, 2, 3, 3, 4, 4, 5, 5},
                       std::vector<double>{2, 3, 3, 4, 5, 5, 6, 6, 7, 7});
    CHECK(r.u == 22.0);
    CHECK(r.p_value == doctest::Approx(0.035425300582).epsilon(1e-9));

    CHECK_THROWS_AS(mann_whitney_u(std::vector<double>{}, std::vector<double>{1}),
                    std::invalid_argument);
}
