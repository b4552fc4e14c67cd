#pragma once

#include <cstdint>

namespace kjnn {

// SplitMix64: tiny, fast, and fully specified right here, so any rebuild of
// this library produces bit-identical random streams for the same seed.
// (std::mt19937_64 would also be deterministic, but seeding and forking
// per-trial streams is clumsier; a 64-bit mixer is the simpler contract.)
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) using the top 53 bits of one output word.
    constexpr double next_unit() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// Folds one word into a running 64-bit hash with the SplitMix64 finalizer.
// Used to derive independent sub-seeds from (seed, n, trial) style tuples.
constexpr std::uint64_t mix64(std::uint64_t h, std::uint64_t word) noexcept {
    std::uint64_t z = h + 0x9E3779B97F4A7C15ull + word * 0xD1B54A32D192ED03ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace kjnn
