#pragma once

// Seeded randomness used by every randomized operation in the library.
//
// The generator and all derived draws are frozen for the lifetime of the
// repository so that seeded outputs stay byte-stable:
//
//   * core generator: std::mt19937_64 seeded with a single 64-bit value
//     (state initialization is fully specified by the C++ standard);
//   * bounded integers: 64-bit rejection sampling (threshold = 2^64 mod bound),
//     never std::uniform_int_distribution, whose output is
//     implementation-defined;
//   * unit reals: top 53 bits of a draw, i.e. (x >> 11) * 2^-53;
//   * shuffling: Fisher-Yates from the highest index down, using bounded();
//   * stream derivation: the SplitMix64 finalizer applied to
//     seed + (stream + 1) * 0x9E3779B97F4A7C15.
//
// Changing any of these invalidates golden tests.

#include <cstdint>
#include <random>
#include <vector>

namespace dbcc {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Derives an independent sub-seed for a numbered stream (worker chunk,
/// construction attempt, per-k sampling loop, ...).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    return mix64(seed + (stream + 1) * 0x9E3779B97F4A7C15ull);
}

/// Deterministic 64-bit generator with the draw primitives fixed above.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform integer in [0, bound). bound must be nonzero.
    std::uint64_t bounded(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t x = next();
            if (x >= threshold)
                return x % bound;
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double real01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// In-place Fisher-Yates shuffle.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(bounded(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
};

} // namespace dbcc
