#include "ssflood/detector.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace ssf {

double threshold_amplitude(double noise_floor_dbm, double margin_db) {
    return std::sqrt(std::pow(10.0, (noise_floor_dbm + margin_db) / 10.0));
}

DetectionResult detect(std::span<const cplx> window, double threshold, int vote_len) {
    const int len = static_cast<int>(window.size());
    if (vote_len < 1 || vote_len > len)
        throw std::invalid_argument("detect: vote_len must be in [1, window length]");
    // Sliding count of super-threshold samples; strict majority wins,
    // earliest offset first.
    const double thr_sq = threshold * threshold;
    std::vector<char> above(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) above[static_cast<size_t>(i)] = std::norm(window[static_cast<size_t>(i)]) > thr_sq ? 1 : 0;
    int count = 0;
    for (int i = 0; i < vote_len; ++i) count += above[static_cast<size_t>(i)];
    for (int offset = 0;; ++offset) {
        if (2 * count > vote_len) return {1, offset};
        if (offset + vote_len >= len) break;
        count += above[static_cast<size_t>(offset + vote_len)] - above[static_cast<size_t>(offset)];
    }
    return {0, 0};
}

WindowState advance_window(const WindowState& ws, const DetectionResult& det,
                           int symbol_samples) {
    if (!ws.synced) throw std::logic_error("advance_window: window not synced");
    WindowState out = ws;
    if (det.bit == 1)
        out.next_window_start = ws.next_window_start + det.detect_offset + symbol_samples;
    else
        out.next_window_start = ws.next_window_start + symbol_samples;
    return out;
}

double false_alarm_probability(int window_len, int vote_len, double threshold,
                               double noise_floor_dbm) {
    const double noise_mw = std::pow(10.0, noise_floor_dbm / 10.0);
    const double p = std::exp(-threshold * threshold / noise_mw);
    // P(count > vote_len / 2) for count ~ Binomial(vote_len, p).
    const int need = vote_len / 2 + 1;
    double tail = 0.0;
    double log_cnk = 0.0;  // log C(vote_len, k), built incrementally
    for (int k = 1; k <= vote_len; ++k) {
        log_cnk += std::log(static_cast<double>(vote_len - k + 1)) - std::log(static_cast<double>(k));
        if (k < need) continue;
        tail += std::exp(log_cnk + k * std::log(p) + (vote_len - k) * std::log1p(-p));
    }
    const int offsets = window_len - vote_len + 1;
    return std::min(1.0, tail * offsets);
}

}  // namespace ssf
