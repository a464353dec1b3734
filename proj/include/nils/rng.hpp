#pragma once

#include <array>
#include <cstdint>

namespace nils {

/// SplitMix64 step: advances `state` and returns the next mixed output.
std::uint64_t splitmix64(std::uint64_t& state);

/// Mixes several integers into one 64-bit seed. Pure function.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0);

/// xoshiro256** generator seeded through SplitMix64.
///
/// The bit stream is fully specified (no std::distribution involved), so a
/// given seed yields the same sequence on every platform and compiler.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed = 0);

    std::uint64_t next();

    /// Uniform integer in [0, bound). `bound` must be positive.
    std::uint64_t below(std::uint64_t bound);

    /// Independent child stream; advances this generator by one draw.
    Rng split();

    const std::array<std::uint64_t, 4>& state() const { return s_; }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()() { return next(); }

    friend bool operator==(const Rng&, const Rng&) = default;

private:
    std::array<std::uint64_t, 4> s_{};
};

} // namespace nils
