#pragma once

#include <cstdint>
#include <random>

namespace liftgirth {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed for trial `index` of a run started with `seed`:
///   splitmix64(seed ^ splitmix64(index))
/// Both steps are fixed-width integer arithmetic, so the value is identical on
/// every platform.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept
{
    return splitmix64(seed ^ splitmix64(index));
}

/// Random source used by all randomized algorithms.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The standard distributions are not, so bounded integers are drawn
/// here by rejection sampling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t uniform(std::uint64_t n)
    {
        // 2^64 mod n; values below it would bias the remainder.
        const std::uint64_t threshold = (std::uint64_t{0} - n) % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x < threshold);
        return x % n;
    }

    template <typename Index>
    Index index(Index n)
    {
        return static_cast<Index>(uniform(static_cast<std::uint64_t>(n)));
    }

    bool coin() { return (engine_() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

} // namespace liftgirth
