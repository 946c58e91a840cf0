#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

namespace vx {

// Deterministic RNG with explicitly implemented distributions so that
// streams are bit-identical across platforms and standard libraries.
// Core generator is splitmix64; good enough statistics for data synthesis
// and weight init at this scale, and trivially seedable/forkable.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [0, n)
    int64_t uniform_int(int64_t n) {
        return n <= 1 ? 0 : static_cast<int64_t>(next_u64() % static_cast<uint64_t>(n));
    }

    // Box-Muller with a cached spare
    double normal(double mean = 0.0, double sd = 1.0) {
        if (has_spare_) {
            has_spare_ = false;
            return mean + sd * spare_;
        }
        double u1 = 0.0;
        while (u1 <= 0.0) u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return mean + sd * r * std::cos(a);
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Forked sub-stream: seed ^ fnv1a(label), mixed once. This is the
    // documented fan-out used by the CLI to derive per-component streams.
    Rng fork(std::string_view label) const {
        return Rng(mix(state_ ^ fnv1a(label)));
    }
    Rng fork(uint64_t salt) const { return Rng(mix(state_ ^ (salt * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL))); }

    static uint64_t fnv1a(std::string_view s) {
        uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

inline uint64_t derive_seed(uint64_t base, std::string_view component) {
    return Rng::mix(base ^ Rng::fnv1a(component));
}

}  // namespace vx
