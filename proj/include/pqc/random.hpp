#pragma once

// Seeded random streams. Every trial or frequency gets its own stream derived
// from (seed, tags...), so results do not depend on evaluation order.

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace pqc {

/// SplitMix64; satisfies UniformRandomBitGenerator.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

inline std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> tags) noexcept {
    std::uint64_t h = seed;
    for (std::uint64_t t : tags) {
        SplitMix64 mix(h ^ (t * 0xd1b54a32d192ed03ULL));
        h = mix();
    }
    return SplitMix64(h)();
}

}  // namespace pqc
