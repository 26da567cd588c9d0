#include "ssflood/phy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ssf {

double SampleFrame::energy_mj() const {
    double acc = 0.0;
    for (const cplx& s : samples) acc += std::norm(s);
    return acc;
}

double raised_cosine(double t, double symbol_time, double alpha) {
    const double x = t / symbol_time;
    const double pi = std::numbers::pi;
    double sinc = 1.0;
    if (x != 0.0) sinc = std::sin(pi * x) / (pi * x);
    const double denom = 1.0 - (2.0 * alpha * x) * (2.0 * alpha * x);
    if (std::fabs(denom) < 1e-9) {
        // t = +/- T/(2 alpha): limit is (pi/4) sinc(1/(2 alpha)).
        const double y = 1.0 / (2.0 * alpha);
        const double lim_sinc = std::sin(pi * y) / (pi * y);
        return (pi / 4.0) * lim_sinc;
    }
    return sinc * std::cos(pi * alpha * x) / denom;
}

PulseShape make_pulse_shape(const PhyParams& phy) {
    validate(phy);
    PulseShape shape;
    shape.base_pulse_duration_s = phy.base_pulse_duration_s();
    shape.span_s = phy.pulse_duration_s;
    const int n = phy.pulse_samples();
    shape.taps.resize(n);
    const double fs = phy.sample_rate_hz;
    double peak = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = (i - 0.5 * (n - 1)) / fs;
        shape.taps[i] = raised_cosine(t, shape.base_pulse_duration_s, phy.roll_off);
        peak = std::max(peak, std::fabs(shape.taps[i]));
    }
    // Peak power equals tx_power: threshold decisions act on amplitudes.
    const double target = std::pow(10.0, phy.tx_power_dbm / 20.0);
    for (double& tap : shape.taps) tap *= target / peak;
    return shape;
}

SampleFrame modulate_symbol(int bit, const PulseShape& shape, const PhyParams& phy) {
    SampleFrame frame;
    frame.samples.assign(phy.symbol_samples(), cplx{0.0, 0.0});
    if (bit != 0) {
        for (size_t i = 0; i < shape.taps.size(); ++i) frame.samples[i] = cplx{shape.taps[i], 0.0};
    }
    return frame;
}

SampleFrame apply_cfo(const SampleFrame& frame, double cfo_hz, double initial_phase,
                      double sample_rate_hz) {
    SampleFrame out;
    out.samples.resize(frame.samples.size());
    const double step = 2.0 * std::numbers::pi * cfo_hz / sample_rate_hz;
    for (size_t n = 0; n < frame.samples.size(); ++n) {
        const double ph = step * static_cast<double>(n) + initial_phase;
        out.samples[n] = frame.samples[n] * std::polar(1.0, ph);
    }
    return out;
}

}  // namespace ssf
