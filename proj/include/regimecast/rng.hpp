#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace regimecast {

// Seeded generator with its own double/categorical sampling so that results
// do not depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double exponential() { return -std::log1p(-uniform()); }

    // Index sampled proportionally to the (non-negative) weights.
    int categorical(const std::vector<double>& weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        double u = uniform() * total;
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) return static_cast<int>(i);
        }
        return static_cast<int>(weights.size()) - 1;
    }

    // Uniform point on the probability simplex of the given dimension.
    std::vector<double> simplex(int dim) {
        std::vector<double> v(dim);
        double total = 0.0;
        for (auto& x : v) {
            x = exponential();
            total += x;
        }
        for (auto& x : v) x /= total;
        return v;
    }

    int uniform_int(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }

private:
    std::mt19937_64 gen_;
};

inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t hash = 0xcbf29ce484222325ull) {
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

// Stable per-series seed derivation: hash(series_id) mixed with the run seed.
inline std::uint64_t derive_seed(std::string_view tag, std::uint64_t base) {
    std::uint64_t h = fnv1a64(tag);
    for (int i = 0; i < 8; ++i) {
        h ^= (base >> (8 * i)) & 0xff;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace regimecast
