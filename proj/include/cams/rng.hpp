#pragma once

#include <cmath>
#include <cstdint>

namespace cams {

/// Small deterministic generator (splitmix64 core). Used instead of the
/// standard distributions so that a seed produces the same stream on every
/// platform and the generator can be re-derived per (template, replicate)
/// for order-independent parallel generation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(mix(seed ^ 0x9e3779b97f4a7c15ULL)) {}
    Rng(std::uint64_t seed, std::uint64_t stream) : Rng(mix(seed) ^ mix(stream * 2 + 1)) {}
    Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream)
        : Rng(mix(mix(seed) ^ mix(stream * 2 + 1)) ^ mix(substream * 2 + 0x632be59bd9b4e019ULL)) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n); n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    /// Normal(0, sd) via Box-Muller.
    double normal(double sd) {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return sd * std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace cams
