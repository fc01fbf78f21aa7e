#pragma once

#include <cmath>
#include <cstdint>

namespace symcap {

// Counter-based deterministic generator. Every draw is a pure function of
// (seed, counter, slot), so sample ranges can be split across workers and the
// combined result does not depend on the split.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    /// Uniform double in [0, 1), slot selects independent streams per counter.
    double uniform(std::uint64_t counter, std::uint32_t slot) const {
        return static_cast<double>(word(counter, slot) >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(std::uint64_t counter, std::uint32_t slot, double lo, double hi) const {
        return lo + (hi - lo) * uniform(counter, slot);
    }

    /// Standard normal via Box-Muller; consumes slots 2*slot and 2*slot+1.
    double normal(std::uint64_t counter, std::uint32_t slot) const {
        // keep u1 strictly positive
        const double u1 = (static_cast<double>(word(counter, 2 * slot) >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = uniform(counter, 2 * slot + 1);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    std::uint64_t word(std::uint64_t counter, std::uint32_t slot) const {
        std::uint64_t z = seed_ * 0x9e3779b97f4a7c15ull + counter * 0xbf58476d1ce4e5b9ull +
                          (static_cast<std::uint64_t>(slot) + 1) * 0x94d049bb133111ebull;
        z = mix(z);
        z = mix(z ^ seed_);
        return z;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
};

} // namespace symcap
