#pragma once

#include <complex>
#include <vector>

#include "ssflood/params.hpp"

namespace ssf {

using cplx = std::complex<double>;

// One symbol period of complex baseband samples. Power convention:
// |sample|^2 is instantaneous power in mW, so a 0 dBm peak has magnitude 1.
struct SampleFrame {
    std::vector<cplx> samples;

    int size() const { return static_cast<int>(samples.size()); }
    double energy_mj() const;  // sum |s|^2 / fs is computed by the caller; this is sum |s|^2
};

// Truncated raised-cosine impulse response, peak-normalized so the shaped
// pulse's peak power equals tx_power.
struct PulseShape {
    std::vector<double> taps;
    double base_pulse_duration_s = 0.0;  // (1+alpha)/B
    double span_s = 0.0;                 // == Tp
};

// Raised cosine h(t) = sinc(t/T) cos(pi a t/T) / (1 - (2 a t/T)^2) with the
// removable singularities filled in.
double raised_cosine(double t, double symbol_time, double alpha);

PulseShape make_pulse_shape(const PhyParams& phy);

// bit 1: shaped pulse in samples [0, Tp*fs); bit 0: silence.
SampleFrame modulate_symbol(int bit, const PulseShape& shape, const PhyParams& phy);

// Per-sample unit rotation exp(j(2 pi cfo n / fs + phase)); magnitudes kept.
SampleFrame apply_cfo(const SampleFrame& frame, double cfo_hz, double initial_phase,
                      double sample_rate_hz);

}  // namespace ssf
