#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace swapnet {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seedable stream over std::mt19937_64 with bias-free bounded draws, so
// identical seeds reproduce identical sequences on every platform.
// split(i) derives a decorrelated child stream; independent workers each
// take their own split. Callers that promise replayable output document
// their draw order in terms of the methods below.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next() { return engine_(); }

    // Uniform on [0, bound); bound >= 1. Rejection sampling, no modulo bias.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform on [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Uniform on [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    Rng split(std::uint64_t index) const {
        return Rng(splitmix64(seed_ ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
    }

    // min(k, pool.size()) distinct elements chosen uniformly without
    // replacement (partial Fisher-Yates); consumes exactly that many draws.
    // Result is sorted ascending.
    std::vector<int> sample_without_replacement(std::vector<int> pool, int k) {
        const int take = k < static_cast<int>(pool.size()) ? k : static_cast<int>(pool.size());
        for (int i = 0; i < take; ++i) {
            const int j = i + static_cast<int>(next_below(pool.size() - i));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(take);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace swapnet
