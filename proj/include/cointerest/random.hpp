#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace cointerest {

/// SplitMix64 generator. The output stream depends only on the seed, so
/// shuffles driven by it are identical on every platform and standard library.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept
        : state_(seed)
    {
    }

    std::uint64_t next() noexcept
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, bound), bound > 0. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound) noexcept
    {
        const std::uint64_t limit = -bound % bound; // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next();
            if (r >= limit)
                return r % bound;
        }
    }

    /// Uniform double in [0, 1).
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Fisher-Yates shuffle.
template <typename T>
void shuffle(std::span<T> items, SplitMix64& rng)
{
    for (std::size_t i = items.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.below(i));
        using std::swap;
        swap(items[i - 1], items[j]);
    }
}

} // namespace cointerest
