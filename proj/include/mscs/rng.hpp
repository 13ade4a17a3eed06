#ifndef MSCS_RNG_HPP
#define MSCS_RNG_HPP

#include <cstdint>
#include <random>

namespace mscs {

// Seeded generator with portable draw semantics. std::mt19937_64 has a
// standard-mandated output sequence, and the bounded/unit draws below avoid
// std::uniform_*_distribution, whose algorithms differ between standard
// libraries. Identical seeds therefore give identical streams everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, bound). bound must be >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        // Reject draws below 2^64 mod bound so the remainder is unbiased.
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = engine_();
            if (x >= threshold) return x % bound;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool next_bernoulli(double p) { return next_unit() < p; }

private:
    std::mt19937_64 engine_;
};

// Decorrelated seed for a numbered substream (splitmix64 finalizer).
inline std::uint64_t seed_stream(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + (stream + 1) * 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace mscs

#endif
