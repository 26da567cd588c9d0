#include "ssflood/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace ssf {

double path_gain_db(const Vec2& src, const Vec2& dst, const ChannelParams& cp) {
    const double d = distance(src, dst);
    if (d <= 0.0) throw std::invalid_argument("path_gain_db: co-located nodes unsupported");
    return -(cp.reference_loss_db + 10.0 * cp.path_loss_exponent * std::log10(d)) +
           cp.system_gain_db;
}

LinkRealization realize_link(SplitMix64& rng, const Vec2& src, const Vec2& dst,
                             const ChannelParams& cp, double sample_rate_hz) {
    LinkRealization link;
    link.gain_db = path_gain_db(src, dst, cp);
    const double d = distance(src, dst);
    link.delay_samples = static_cast<int>(std::lround(d / kSpeedOfLight * sample_rate_hz));
    const double gain_lin = std::pow(10.0, link.gain_db / 10.0);
    if (cp.fading == Fading::none) {
        link.taps = {cplx{std::sqrt(gain_lin), 0.0}};
        return link;
    }
    // Exponential power-delay profile, one tap per sample, total expected
    // power normalized to the path gain.
    const int n = cp.n_taps;
    std::vector<double> profile(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / sample_rate_hz;
        profile[i] = cp.rms_delay_spread_s > 0.0 ? std::exp(-t / cp.rms_delay_spread_s)
                                                 : (i == 0 ? 1.0 : 0.0);
        sum += profile[i];
    }
    link.taps.resize(n);
    for (int i = 0; i < n; ++i) {
        const double sigma = std::sqrt(gain_lin * profile[i] / sum / 2.0);
        link.taps[i] = cplx{sigma * rng.next_gaussian(), sigma * rng.next_gaussian()};
    }
    return link;
}

void accumulate_link(std::span<cplx> buffer, const SampleFrame& frame,
                     const LinkRealization& link, long long offset) {
    const long long len = static_cast<long long>(buffer.size());
    const long long flen = frame.size();
    for (size_t ti = 0; ti < link.taps.size(); ++ti) {
        const cplx tap = link.taps[ti];
        if (tap == cplx{0.0, 0.0}) continue;
        const long long base = offset + link.delay_samples + static_cast<long long>(ti);
        const long long from = std::max(0LL, -base);
        const long long to = std::min(flen, len - base);
        for (long long i = from; i < to; ++i) buffer[static_cast<size_t>(base + i)] += tap * frame.samples[static_cast<size_t>(i)];
    }
}

void fill_noise(std::span<cplx> buffer, double noise_floor_dbm, SplitMix64& rng) {
    const double power_mw = std::pow(10.0, noise_floor_dbm / 10.0);
    const double sigma = std::sqrt(power_mw / 2.0);
    for (cplx& s : buffer) {
        const double re = sigma * rng.next_gaussian();
        const double im = sigma * rng.next_gaussian();
        s = cplx{re, im};
    }
}

SampleFrame superpose(std::span<const Transmission> active, double noise_floor_dbm,
                      bool noise_enabled, SplitMix64& rng, int n_samples) {
    SampleFrame out;
    out.samples.assign(static_cast<size_t>(n_samples), cplx{0.0, 0.0});
    if (noise_enabled) fill_noise(out.samples, noise_floor_dbm, rng);
    for (const Transmission& tx : active) accumulate_link(out.samples, *tx.frame, *tx.link, 0);
    return out;
}

}  // namespace ssf
