#pragma once

#include <cmath>
#include <cstdint>

namespace trendhedge {

/**
 * Deterministic 64-bit generator used by the synthetic data generator.
 *
 * The algorithm is splitmix64 (Steele & Vigna), fixed here so that the
 * u64 stream is reproducible bit-for-bit across platforms and languages:
 *
 *   state += 0x9E3779B97F4A7C15
 *   z = state
 *   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
 *   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
 *   return z ^ (z >> 31)
 *
 * Derived draws:
 *   next_unit():   (next_u64() >> 11) * 2^-53, uniform in [0, 1)
 *   next_normal(): Box-Muller cosine branch,
 *                  sqrt(-2 ln(1 - u1)) * cos(2 pi u2),
 *                  consuming exactly two u64 draws per normal (no caching
 *                  of the sine branch).
 *
 * The u64 stream is bit-exact by construction; float-level draws match a
 * reimplementation to libm rounding (~1e-15 relative).
 */
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next_u64() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_unit() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal variate; consumes exactly two u64 draws.
    double next_normal() noexcept {
        const double u1 = next_unit();
        const double u2 = next_unit();
        // 1 - u1 is in (0, 1], so the log is finite.
        return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(kTwoPi * u2);
    }

private:
    static constexpr double kTwoPi = 6.283185307179586476925286766559;

    std::uint64_t state_;
};

} // namespace trendhedge
