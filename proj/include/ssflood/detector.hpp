#pragma once

#include <cstdint>
#include <span>

#include "ssflood/phy.hpp"

namespace ssf {

// Position of a node's next detection window on its local sample timeline.
struct WindowState {
    std::int64_t next_window_start = 0;
    int window_len_samples = 0;
    bool synced = false;
};

struct DetectionResult {
    int bit = 0;
    int detect_offset = 0;  // samples from window start; meaningful for bit 1 only
};

// Amplitude (mW^1/2) corresponding to noise_floor + margin.
double threshold_amplitude(double noise_floor_dbm, double margin_db);

// Scans contiguous vote spans of vote_len samples at offsets
// 0..len - vote_len; returns 1 at the first offset where strictly more than
// half of the span's magnitudes exceed the threshold. Exact half votes 0.
DetectionResult detect(std::span<const cplx> window, double threshold, int vote_len);

// bit 0: stride by one symbol period; bit 1: re-anchor at the detection
// instant, next window opens one period later.
WindowState advance_window(const WindowState& ws, const DetectionResult& det,
                           int symbol_samples);

// Analytic upper bound on the probability that a noise-only window of
// window_len samples produces a false 1: per-sample Rayleigh exceedance
// exp(-thr^2 / noise_power), binomial majority tail, union bound over span
// offsets.
double false_alarm_probability(int window_len, int vote_len, double threshold,
                               double noise_floor_dbm);

}  // namespace ssf
