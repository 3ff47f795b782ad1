#pragma once

#include <cmath>
#include <cstdint>

namespace lrising {

// Counter-based generator: output n is a pure function of (key, n), so
// streams can be evaluated out of order, split into independent child
// streams, and drawn lane-parallel in SIMD kernels without changing the
// sequence. State is 128 bits (64-bit key + 64-bit counter). The mixer is
// the SplitMix64 finalizer (Steele/Vigna), applied to key + n*golden.
class CounterRng {
public:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

    CounterRng() = default;
    explicit CounterRng(std::uint64_t seed) : key_(mix(seed ^ 0x5851F42D4C957F2Dull)) {}

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    // Stateless draws: value at an explicit counter.
    std::uint64_t at(std::uint64_t counter) const { return mix(key_ + counter * kGolden); }
    double uniform_at(std::uint64_t counter) const { return to_unit(at(counter)); }

    // Sequential draws advance the counter.
    std::uint64_t next_u64() { return at(counter_++); }
    double uniform() { return to_unit(next_u64()); }

    // n draws from [0, bound).
    std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

    // Standard normal via Box-Muller on two counter draws.
    double normal();

    // Independent child stream; children of distinct ids never collide
    // with each other or the parent.
    CounterRng split(std::uint64_t stream_id) const {
        CounterRng child;
        child.key_ = mix(key_ ^ mix(stream_id + 0x9E3779B97F4A7C15ull));
        return child;
    }

    std::uint64_t key() const { return key_; }
    std::uint64_t counter() const { return counter_; }
    void skip(std::uint64_t n) { counter_ += n; }

    static double to_unit(std::uint64_t x) {
        return static_cast<double>(x >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t key_ = 0x853C49E6748FEA9Bull;
    std::uint64_t counter_ = 0;
};

inline double CounterRng::normal() {
    // Box-Muller; discard the second variate to keep draws independent of
    // call pattern.
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

}  // namespace lrising
