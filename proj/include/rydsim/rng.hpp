#pragma once

#include <cstdint>
#include <random>

namespace rydsim {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Seed of the idx-th substream of a master seed. Shots, scan points and other
// independent units of work each get their own substream so that results do
// not depend on scheduling.
inline std::uint64_t substream(std::uint64_t master, std::uint64_t idx) {
    return splitmix64(splitmix64(master) ^ (idx * 0x9E3779B97F4A7C15ull + 0x243F6A8885A308D3ull));
}

// Deterministic draws on top of mt19937_64. The distribution transforms are
// spelled out here (not std::*_distribution) so output bytes are identical
// across standard-library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // [0, n)
    std::uint64_t uniform_index(std::uint64_t n) {
        return static_cast<std::uint64_t>((static_cast<__uint128_t>(gen_()) * n) >> 64);
    }

    double normal() {
        // Box-Muller; one deviate per call, no cached state
        double u1 = uniform01();
        const double u2 = uniform01();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        constexpr double two_pi = 6.283185307179586476925286766559;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

    // Knuth product method below lambda = 50, Gaussian approximation above.
    int poisson(double lambda) {
        if (lambda <= 0.0) return 0;
        if (lambda < 50.0) {
            const double limit = std::exp(-lambda);
            int k = 0;
            double p = 1.0;
            do {
                ++k;
                p *= uniform01();
            } while (p > limit);
            return k - 1;
        }
        const double v = lambda + std::sqrt(lambda) * normal();
        return v < 0.0 ? 0 : static_cast<int>(v + 0.5);
    }

private:
    std::mt19937_64 gen_;
};

} // namespace rydsim
