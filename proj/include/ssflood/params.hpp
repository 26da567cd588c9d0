#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssflood/rng.hpp"

namespace ssf {

// Thrown for any invalid configuration; the message names the violated
// constraint. The CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Radio and protocol timing constants. Defaults model a 0 dBm pulse-based
// OOK link in the 2.4 GHz ISM band with CC2538-class power draws.
struct PhyParams {
    double tx_power_dbm = 0.0;
    double carrier_freq_hz = 2.491e9;
    double cfo_range_hz = 10e3;       // symmetric +/- range
    double bandwidth_hz = 3e6;
    double roll_off = 0.5;            // raised-cosine alpha
    double pulse_duration_s = 3e-6;   // shaped pulse span Tp
    double symbol_duration_s = 25e-6; // Ts
    double window_length_s = 10e-6;   // detection window
    double sample_rate_hz = 20e6;
    double noise_floor_dbm = -60.0;
    double threshold_margin_db = 9.0;
    int preamble_len = 8;
    double power_tx_mw = 94.41;
    double power_rx_mw = 80.82;
    double power_sleep_mw = 1.8;
    // Detection-to-retransmission delay. A forwarding node has to take in
    // the pulse before its vote can complete, so the default is one full
    // pulse duration; receiver ramp-up/down is folded in here and billed
    // at rx power.
    double turnaround_delay_s = 3e-6;
    // Majority-vote span in samples; 0 derives it from the base (unshaped)
    // pulse width (1+alpha)/bandwidth, 10 samples at defaults.
    int vote_span_samples = 0;
    // "aligned": every transmission starts at carrier phase zero, so
    // time-aligned concurrent pulses add constructively.
    // "random": per-node uniform phase per trial.
    bool random_tx_phase = false;

    double base_pulse_duration_s() const { return (1.0 + roll_off) / bandwidth_hz; }
    int symbol_samples() const { return static_cast<int>(std::lround(symbol_duration_s * sample_rate_hz)); }
    int pulse_samples() const { return static_cast<int>(std::lround(pulse_duration_s * sample_rate_hz)); }
    int window_samples() const { return static_cast<int>(std::lround(window_length_s * sample_rate_hz)); }
    int turnaround_samples() const { return static_cast<int>(std::lround(turnaround_delay_s * sample_rate_hz)); }
    int vote_samples() const {
        if (vote_span_samples > 0) return vote_span_samples;
        return static_cast<int>(std::lround(base_pulse_duration_s() * sample_rate_hz));
    }
};

// Throws ConfigError naming the first violated constraint.
void validate(const PhyParams& phy);

enum class Fading { none, rayleigh_block };

// Log-distance path loss plus an optional exponential-profile Rayleigh
// tapped delay line. Stands in for a full measured multipath model; every
// constant is configurable.
struct ChannelParams {
    double path_loss_exponent = 2.0;
    double reference_loss_db = 40.36;  // loss at 1 m (free space at 2491 MHz)
    double system_gain_db = 12.0;      // antenna/calibration margin, see README
    double rms_delay_spread_s = 50e-9;
    int n_taps = 4;
    Fading fading = Fading::none;
    double noise_floor_dbm = -60.0;    // mirrors PhyParams.noise_floor_dbm
    bool noise_enabled = true;
};

void validate(const ChannelParams& cp, const PhyParams& phy);

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline double distance(const Vec2& a, const Vec2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Node placement. Grid topologies place k x k nodes with spacing
// d = area_side / k, offset half a cell from the boundary; the sink is the
// node with maximal coordinates (upper-right corner).
struct Topology {
    std::vector<Vec2> positions;
    double grid_distance_m = 0.0;
    int sink_id = 0;

    int n_nodes() const { return static_cast<int>(positions.size()); }

    // Arbitrary placement, used by tests and bindings; grid_distance is the
    // nearest-neighbor distance (0 for a single node).
    static Topology custom(std::vector<Vec2> positions, int sink_id);
};

Topology build_grid_topology(int n_nodes, double area_side_m);

// Uniform over all nodes except the sink. Throws if there is no candidate.
int select_source(SplitMix64& rng, const Topology& topo);

// Stable, platform-independent per-trial seed: SplitMix64 stream element
// trial_index of the sequence seeded by base_seed.
inline std::uint64_t derive_trial_seed(std::uint64_t base_seed, std::uint64_t trial_index) {
    return mix64(base_seed + (trial_index + 1) * kGolden);
}

struct BchSpec {
    int n = 127;
    int k = 106;
    int t = 3;
    int pad_bits = 1;  // zeros appended to reach the on-air length

    int on_air_bits() const { return n + pad_bits; }
};

// Everything one campaign needs: radio, channel, topology, code, seeds.
struct CampaignConfig {
    int n_packets = 1000;
    double wake_probability = 1.0;
    std::uint64_t base_seed = 1;
    int n_nodes = 25;
    double area_side_m = 25.0;
    int tail_periods = 2;   // extra symbol periods simulated for in-flight pulses
    int idle_periods = 0;   // silent periods before the packet (energy not counted)
    BchSpec bch;
    PhyParams phy;
    ChannelParams channel;

    // Tests and bindings may bypass the grid builder.
    std::optional<Topology> topology_override;

    int payload_info_bits() const { return bch.k; }
    int on_air_bits() const { return bch.on_air_bits(); }

    Topology make_topology() const {
        if (topology_override) return *topology_override;
        return build_grid_topology(n_nodes, area_side_m);
    }
};

void validate(const CampaignConfig& cfg);

// Flat key=value configuration file ('#' comments, blank lines ignored).
// Keys are listed in docs/config.md; unknown keys are rejected.
CampaignConfig load_config_file(const std::string& path);
void apply_config_line(CampaignConfig& cfg, const std::string& key, const std::string& value);

// Effective configuration as "key = value" lines, parseable by
// apply_config_line. Embedded in every output file.
std::vector<std::string> config_lines(const CampaignConfig& cfg);

}  // namespace ssf
