#ifndef TDOM_RNG_HPP
#define TDOM_RNG_HPP

#include <cstdint>

namespace tdom {

// SplitMix64. All seeded generators in this project draw from this stream
// so that corpora are reproducible bit-for-bit across platforms and
// reimplementations. Bounded draws use plain modulo reduction.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish draw in [0, bound); bound must be positive.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    bool next_bit() { return next() & 1ULL; }

private:
    std::uint64_t state_;
};

}  // namespace tdom

#endif
