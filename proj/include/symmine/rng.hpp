// SPDX-License-Identifier: Apache-2.0
//
// Seeded random number generation with named sub-streams.
//
// Every random choice in the pipeline flows through this generator so that
// runs are reproducible bit-for-bit across platforms and thread counts.
// std:: distributions are avoided on purpose: their output is not specified
// by the standard and differs between library implementations.

#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace symmine {

// FNV-1a, used to fold stream names into seeds.
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Derive the seed of a named sub-stream (stage name, per-document id, ...)
// from a parent seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view name) {
    return mix64(seed ^ fnv1a64(name));
}

// xoshiro256** seeded through splitmix64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& si : state_) {
            x += 0x9e3779b97f4a7c15ull;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            si = z ^ (z >> 31);
        }
        if (state_[0] == 0 && state_[1] == 0 && state_[2] == 0 && state_[3] == 0)
            state_[0] = 1;
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform double in [0, 1), 53 bits of precision.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Unbiased uniform integer in [0, n). Lemire's method. n must be > 0.
    std::size_t uniform_index(std::size_t n) {
        using u128 = unsigned __int128;
        std::uint64_t range = static_cast<std::uint64_t>(n);
        u128 m = static_cast<u128>(next()) * range;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < range) {
            const std::uint64_t threshold = (-range) % range;
            while (lo < threshold) {
                m = static_cast<u128>(next()) * range;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::size_t>(m >> 64);
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

} // namespace symmine
