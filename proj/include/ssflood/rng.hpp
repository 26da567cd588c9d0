#pragma once

#include <cstdint>

namespace ssf {

// SplitMix64 finalizer (Steele/Lea/Flood constants). Bijective on uint64.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// Order-free key combiner for deriving independent substreams from a seed.
constexpr std::uint64_t mix_key(std::uint64_t h, std::uint64_t v) {
    return mix64(h + kGolden + (v ^ (h << 6) ^ (h >> 2)));
}

// Substream tags. Every random draw in a trial is keyed by
// (trial_seed, tag, ids...) so results do not depend on evaluation order.
enum class Stream : std::uint64_t {
    source_pick   = 0x01,
    payload_bits  = 0x02,
    node_cfo      = 0x03,
    node_phase    = 0x04,
    wake          = 0x05,
    noise         = 0x06,
    fading        = 0x07,
    sweep_cell    = 0x08,
};

inline std::uint64_t stream_seed(std::uint64_t trial_seed, Stream tag,
                                 std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t h = mix_key(trial_seed, static_cast<std::uint64_t>(tag));
    h = mix_key(h, a);
    return mix_key(h, b);
}

// Small, fast, reproducible generator. Not cryptographic; statistical
// quality is sufficient for Monte Carlo use (passes the uniformity and
// collision checks in the test suite).
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += kGolden);
        return mix64(z);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Standard normal via Marsaglia's polar method.
    double next_gaussian();

    // Uniform integer in [0, bound) without modulo bias (Lemire).
    std::uint64_t next_below(std::uint64_t bound);

  private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace ssf
