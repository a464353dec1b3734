#include "nils/rng.hpp"

#include <doctest.h>

#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>

using nils::Rng;

TEST_CASE("splitmix64 matches the reference stream")
{
    std::uint64_t state = 0;
    CHECK(nils::splitmix64(state) == 0xe220a8397b1dcdafULL);
    CHECK(nils::splitmix64(state) == 0x6e789e6aa1b965f4ULL);
    CHECK(nils::splitmix64(state) == 0x06c45d188009454fULL);
}

TEST_CASE("generator is deterministic for a seed")
{
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 1000; ++i)
        REQUIRE(a.next() == b.next());
    CHECK(Rng(1).next() != Rng(2).next());
}

TEST_CASE("below stays in range and covers every value")
{
    Rng rng(7);
    std::array<int, 7> counts{};
    for (int i = 0; i < 70000; ++i) {
        const auto v = rng.below(7);
        REQUIRE(v < 7);
        ++counts[v];
    }
    for (int c : counts) {
        CHECK(c > 9000);
        CHECK(c < 11000);
    }
    CHECK(rng.below(1) == 0);
    CHECK_THROWS_AS(rng.below(0), std::invalid_argument);
}

TEST_CASE("split streams differ from the parent and from each other")
{
    Rng parent(3);
    Rng c1 = parent.split();
    Rng c2 = parent.split();
    std::set<std::uint64_t> firsts{parent.next(), c1.next(), c2.next()};
    CHECK(firsts.size() == 3);
}

TEST_CASE("mix_seed is a pure function of its inputs")
{
    CHECK(nils::mix_seed(1, 2, 3) == nils::mix_seed(1, 2, 3));
    CHECK(nils::mix_seed(1, 2, 3) != nils::mix_seed(1, 3, 2));
    CHECK(nils::mix_seed(0, 0, 1) != nils::mix_seed(0, 1, 0));
}
