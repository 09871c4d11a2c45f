#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qgen {

// mt19937_64 with hand-rolled bounded draws. std::uniform_int_distribution is
// implementation-defined, so sampling through it would break the "fixed seed,
// bit-identical output" contract across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, n). Rejection sampling, no modulo bias.
    std::uint64_t index(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    // Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(index(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform_real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller (one draw per call; spare discarded).
    double normal() {
        double u1, u2;
        do {
            u1 = uniform_real();
        } while (u1 <= 0.0);
        u2 = uniform_real();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    // Independent child stream, e.g. one per generated board.
    Rng split() { return Rng(next_u64() ^ 0x9e3779b97f4a7c15ull); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace qgen
