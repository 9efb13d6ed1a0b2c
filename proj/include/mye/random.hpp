#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace mye {

/// Seeded generator with platform-independent draws.
///
/// std::mt19937_64 output is fully specified; the std distributions are not,
/// so every derived draw below is written out by hand.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below(0)");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// Uniform real in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

    /// Poisson draw by multiplication of uniforms; means above 30 are split
    /// into chunks so exp(-mean) never underflows.
    std::uint64_t poisson(double mean) {
        if (!(mean >= 0) || !std::isfinite(mean)) throw std::invalid_argument("poisson mean must be finite and >= 0");
        std::uint64_t total = 0;
        while (mean > 30.0) {
            total += poisson_small(30.0);
            mean -= 30.0;
        }
        return total + poisson_small(mean);
    }

private:
    std::uint64_t poisson_small(double mean) {
        const double threshold = std::exp(-mean);
        std::uint64_t k = 0;
        double prod = unit();
        while (prod > threshold) {
            ++k;
            prod *= unit();
        }
        return k;
    }

    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; used to derive independent sub-seeds.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace mye
