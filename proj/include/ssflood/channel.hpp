#pragma once

#include <span>
#include <vector>

#include "ssflood/phy.hpp"

namespace ssf {

inline constexpr double kSpeedOfLight = 2.998e8;  // m/s

// Per-link, per-trial channel draw: integer sample delay plus one complex
// tap per path. fading none: a single real tap carrying the full path gain.
struct LinkRealization {
    std::vector<cplx> taps;
    int delay_samples = 0;
    double gain_db = 0.0;
};

// Log-distance law: -(reference_loss + 10 n log10(d / 1 m)) + system_gain.
// Throws on zero distance (co-located nodes unsupported).
double path_gain_db(const Vec2& src, const Vec2& dst, const ChannelParams& cp);

LinkRealization realize_link(SplitMix64& rng, const Vec2& src, const Vec2& dst,
                             const ChannelParams& cp, double sample_rate_hz);

// Adds frame through link into buffer; the frame's sample 0 lands at buffer
// index offset + link delay (tap i adds a further i-sample shift). Samples
// falling outside the buffer are dropped.
void accumulate_link(std::span<cplx> buffer, const SampleFrame& frame,
                     const LinkRealization& link, long long offset);

// Complex Gaussian noise at the configured floor, written over the buffer
// (not added). Drawing noise before signals keeps it independent of the
// transmitter list, so superposition is exactly linear for a fixed rng seed.
void fill_noise(std::span<cplx> buffer, double noise_floor_dbm, SplitMix64& rng);

struct Transmission {
    const SampleFrame* frame;
    const LinkRealization* link;
};

// Coherent sum of all transmissions (frames starting at sample 0) plus
// noise over n_samples.
SampleFrame superpose(std::span<const Transmission> active, double noise_floor_dbm,
                      bool noise_enabled, SplitMix64& rng, int n_samples);

}  // namespace ssf
