#pragma once

#include <cstdint>

namespace affectus {

// xorshift64* seeded through splitmix64:
//   x ^= x >> 12; x ^= x << 25; x ^= x >> 27; return x * 0x2545F4914F6CDD1D
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed) noexcept {
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        state_ = z ^ (z >> 31);
        if (state_ == 0) state_ = 0x9E3779B97F4A7C15ull;
    }

    std::uint64_t next() noexcept {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1Dull;
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    // Uniform in [0, n) by rejection; n > 0.
    std::uint64_t below(std::uint64_t n) noexcept {
        std::uint64_t limit = -n % n;  // 2^64 mod n
        for (;;) {
            std::uint64_t x = next();
            if (x >= limit) return x % n;
        }
    }

    bool coin() noexcept { return (next() >> 63) != 0; }

private:
    std::uint64_t state_;
};

}  // namespace affectus
