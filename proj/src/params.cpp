#include "ssflood/params.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace ssf {

namespace {

void require(bool ok, const std::string& constraint) {
    if (!ok) throw ConfigError("configuration invalid: " + constraint);
}

bool is_integral_count(double x) {
    return x >= 0.5 && std::fabs(x - std::lround(x)) < 1e-6;
}

}  // namespace

void validate(const PhyParams& phy) {
    require(phy.pulse_duration_s < phy.window_length_s,
            "pulse_duration_s must be < window_length_s (guard interval)");
    require(phy.window_length_s <= phy.symbol_duration_s,
            "window_length_s must be <= symbol_duration_s");
    require(is_integral_count(phy.symbol_duration_s * phy.sample_rate_hz),
            "sample_rate_hz * symbol_duration_s must be a positive integer");
    require(is_integral_count(phy.pulse_duration_s * phy.sample_rate_hz),
            "sample_rate_hz * pulse_duration_s must be a positive integer");
    require(phy.power_sleep_mw < phy.power_rx_mw,
            "power_sleep_mw must be < power_rx_mw");
    require(phy.power_rx_mw < phy.power_tx_mw,
            "power_rx_mw must be < power_tx_mw");
    require(phy.cfo_range_hz >= 0.0, "cfo_range_hz must be >= 0");
    require(phy.roll_off >= 0.0 && phy.roll_off <= 1.0, "roll_off must be in [0, 1]");
    require(phy.preamble_len >= 1, "preamble_len must be >= 1");
    require(phy.sample_rate_hz > 0.0, "sample_rate_hz must be > 0");
    require(phy.bandwidth_hz > 0.0, "bandwidth_hz must be > 0");
    require(phy.turnaround_delay_s >= 0.0, "turnaround_delay_s must be >= 0");
    require(phy.vote_samples() >= 1, "vote span must be >= 1 sample");
    require(phy.vote_samples() <= phy.window_samples(),
            "vote span must fit inside the detection window");
}

void validate(const ChannelParams& cp, const PhyParams& phy) {
    require(cp.path_loss_exponent > 0.0, "path_loss_exponent must be > 0");
    require(cp.n_taps >= 1, "n_taps must be >= 1");
    require(cp.rms_delay_spread_s >= 0.0, "rms_delay_spread_s must be >= 0");
    require(cp.noise_floor_dbm == phy.noise_floor_dbm,
            "channel noise_floor_dbm must mirror phy.noise_floor_dbm");
}

Topology Topology::custom(std::vector<Vec2> positions, int sink_id) {
    if (positions.empty()) throw ConfigError("topology must contain at least one node");
    if (sink_id < 0 || sink_id >= static_cast<int>(positions.size()))
        throw ConfigError("sink_id out of range");
    Topology t;
    t.positions = std::move(positions);
    t.sink_id = sink_id;
    double dmin = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < t.positions.size(); ++i)
        for (size_t j = i + 1; j < t.positions.size(); ++j)
            dmin = std::min(dmin, distance(t.positions[i], t.positions[j]));
    t.grid_distance_m = std::isfinite(dmin) ? dmin : 0.0;
    return t;
}

Topology build_grid_topology(int n_nodes, double area_side_m) {
    if (n_nodes < 1) throw ConfigError("n_nodes must be >= 1");
    if (area_side_m <= 0.0) throw ConfigError("area_side_m must be > 0");
    const int k = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n_nodes))));
    if (k * k != n_nodes) {
        const int lo = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n_nodes))));
        std::ostringstream msg;
        msg << "n_nodes = " << n_nodes << " is not a perfect square; nearest are "
            << lo * lo << " and " << (lo + 1) * (lo + 1);
        throw ConfigError(msg.str());
    }
    Topology t;
    t.grid_distance_m = area_side_m / k;
    t.positions.reserve(n_nodes);
    // Half-cell offset keeps the grid centered in the deployment square.
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i)
            t.positions.push_back({(i + 0.5) * t.grid_distance_m, (j + 0.5) * t.grid_distance_m});
    t.sink_id = n_nodes - 1;  // maximal (x, y): upper-right corner
    return t;
}

int select_source(SplitMix64& rng, const Topology& topo) {
    const int n = topo.n_nodes();
    if (n < 2) throw ConfigError("source selection needs at least 2 nodes");
    const auto r = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - 1)));
    return r < topo.sink_id ? r : r + 1;
}

void validate(const CampaignConfig& cfg) {
    require(cfg.n_packets >= 1, "campaign.packets must be >= 1");
    require(cfg.wake_probability >= 0.0 && cfg.wake_probability <= 1.0,
            "campaign.wake_probability must be in [0, 1]");
    require(cfg.tail_periods >= 0, "campaign.tail_periods must be >= 0");
    require(cfg.idle_periods >= 0, "campaign.idle_periods must be >= 0");
    require(cfg.bch.pad_bits >= 0, "bch.pad_bits must be >= 0");
    require(cfg.bch.k < cfg.bch.n, "bch.k must be < bch.n");
    validate(cfg.phy);
    validate(cfg.channel, cfg.phy);
    if (!cfg.topology_override) {
        build_grid_topology(cfg.n_nodes, cfg.area_side_m);  // shape check
    }
}

namespace {

double parse_double(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        const double x = std::stod(value, &pos);
        while (pos < value.size() && std::isspace(static_cast<unsigned char>(value[pos]))) ++pos;
        if (pos != value.size()) throw std::invalid_argument(value);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': cannot parse '" + value + "' as a number");
    }
}

long long parse_int(const std::string& key, const std::string& value) {
    const double x = parse_double(key, value);
    if (std::fabs(x - std::llround(x)) > 1e-9)
        throw ConfigError("key '" + key + "': expected an integer, got '" + value + "'");
    return std::llround(x);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last)
        throw ConfigError("key '" + key + "': cannot parse '" + value + "' as an unsigned integer");
    return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "on" || value == "true" || value == "1") return true;
    if (value == "off" || value == "false" || value == "0") return false;
    throw ConfigError("key '" + key + "': expected on/off, got '" + value + "'");
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

void apply_config_line(CampaignConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "campaign.packets") cfg.n_packets = static_cast<int>(parse_int(key, value));
    else if (key == "campaign.wake_probability") cfg.wake_probability = parse_double(key, value);
    else if (key == "campaign.base_seed") cfg.base_seed = parse_u64(key, value);
    else if (key == "campaign.tail_periods") cfg.tail_periods = static_cast<int>(parse_int(key, value));
    else if (key == "campaign.idle_periods") cfg.idle_periods = static_cast<int>(parse_int(key, value));
    else if (key == "topology.nodes") cfg.n_nodes = static_cast<int>(parse_int(key, value));
    else if (key == "topology.area_m") cfg.area_side_m = parse_double(key, value);
    else if (key == "bch.n") cfg.bch.n = static_cast<int>(parse_int(key, value));
    else if (key == "bch.k") cfg.bch.k = static_cast<int>(parse_int(key, value));
    else if (key == "bch.t") cfg.bch.t = static_cast<int>(parse_int(key, value));
    else if (key == "bch.pad_bits") cfg.bch.pad_bits = static_cast<int>(parse_int(key, value));
    else if (key == "phy.tx_power_dbm") cfg.phy.tx_power_dbm = parse_double(key, value);
    else if (key == "phy.carrier_freq_hz") cfg.phy.carrier_freq_hz = parse_double(key, value);
    else if (key == "phy.cfo_range_hz") cfg.phy.cfo_range_hz = parse_double(key, value);
    else if (key == "phy.bandwidth_hz") cfg.phy.bandwidth_hz = parse_double(key, value);
    else if (key == "phy.roll_off") cfg.phy.roll_off = parse_double(key, value);
    else if (key == "phy.pulse_duration_s") cfg.phy.pulse_duration_s = parse_double(key, value);
    else if (key == "phy.symbol_duration_s") cfg.phy.symbol_duration_s = parse_double(key, value);
    else if (key == "phy.window_length_s") cfg.phy.window_length_s = parse_double(key, value);
    else if (key == "phy.sample_rate_hz") cfg.phy.sample_rate_hz = parse_double(key, value);
    else if (key == "phy.noise_floor_dbm") {
        cfg.phy.noise_floor_dbm = parse_double(key, value);
        cfg.channel.noise_floor_dbm = cfg.phy.noise_floor_dbm;
    } else if (key == "phy.threshold_margin_db") cfg.phy.threshold_margin_db = parse_double(key, value);
    else if (key == "phy.preamble_len") cfg.phy.preamble_len = static_cast<int>(parse_int(key, value));
    else if (key == "phy.power_tx_mw") cfg.phy.power_tx_mw = parse_double(key, value);
    else if (key == "phy.power_rx_mw") cfg.phy.power_rx_mw = parse_double(key, value);
    else if (key == "phy.power_sleep_mw") cfg.phy.power_sleep_mw = parse_double(key, value);
    else if (key == "phy.turnaround_delay_s") cfg.phy.turnaround_delay_s = parse_double(key, value);
    else if (key == "phy.vote_span_samples") cfg.phy.vote_span_samples = static_cast<int>(parse_int(key, value));
    else if (key == "phy.tx_phase") {
        if (value == "aligned") cfg.phy.random_tx_phase = false;
        else if (value == "random") cfg.phy.random_tx_phase = true;
        else throw ConfigError("key 'phy.tx_phase': expected aligned or random");
    } else if (key == "channel.path_loss_exponent") cfg.channel.path_loss_exponent = parse_double(key, value);
    else if (key == "channel.reference_loss_db") cfg.channel.reference_loss_db = parse_double(key, value);
    else if (key == "channel.system_gain_db") cfg.channel.system_gain_db = parse_double(key, value);
    else if (key == "channel.rms_delay_spread_s") cfg.channel.rms_delay_spread_s = parse_double(key, value);
    else if (key == "channel.n_taps") cfg.channel.n_taps = static_cast<int>(parse_int(key, value));
    else if (key == "channel.fading") {
        if (value == "none") cfg.channel.fading = Fading::none;
        else if (value == "rayleigh-block") cfg.channel.fading = Fading::rayleigh_block;
        else throw ConfigError("key 'channel.fading': expected none or rayleigh-block");
    } else if (key == "channel.noise") cfg.channel.noise_enabled = parse_bool(key, value);
    else throw ConfigError("unknown configuration key '" + key + "'");
}

CampaignConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    CampaignConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line.substr(0, line.find('#')));
        if (stripped.empty()) continue;
        const size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
        apply_config_line(cfg, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
    return cfg;
}

namespace {

std::string fmt(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

}  // namespace

std::vector<std::string> config_lines(const CampaignConfig& c) {
    std::vector<std::string> out;
    auto add = [&out](const std::string& k, const std::string& v) { out.push_back(k + " = " + v); };
    add("campaign.packets", std::to_string(c.n_packets));
    add("campaign.wake_probability", fmt(c.wake_probability));
    add("campaign.base_seed", std::to_string(c.base_seed));
    add("campaign.tail_periods", std::to_string(c.tail_periods));
    add("campaign.idle_periods", std::to_string(c.idle_periods));
    add("topology.nodes", std::to_string(c.n_nodes));
    add("topology.area_m", fmt(c.area_side_m));
    add("bch.n", std::to_string(c.bch.n));
    add("bch.k", std::to_string(c.bch.k));
    add("bch.t", std::to_string(c.bch.t));
    add("bch.pad_bits", std::to_string(c.bch.pad_bits));
    add("phy.tx_power_dbm", fmt(c.phy.tx_power_dbm));
    add("phy.carrier_freq_hz", fmt(c.phy.carrier_freq_hz));
    add("phy.cfo_range_hz", fmt(c.phy.cfo_range_hz));
    add("phy.bandwidth_hz", fmt(c.phy.bandwidth_hz));
    add("phy.roll_off", fmt(c.phy.roll_off));
    add("phy.pulse_duration_s", fmt(c.phy.pulse_duration_s));
    add("phy.symbol_duration_s", fmt(c.phy.symbol_duration_s));
    add("phy.window_length_s", fmt(c.phy.window_length_s));
    add("phy.sample_rate_hz", fmt(c.phy.sample_rate_hz));
    add("phy.noise_floor_dbm", fmt(c.phy.noise_floor_dbm));
    add("phy.threshold_margin_db", fmt(c.phy.threshold_margin_db));
    add("phy.preamble_len", std::to_string(c.phy.preamble_len));
    add("phy.power_tx_mw", fmt(c.phy.power_tx_mw));
    add("phy.power_rx_mw", fmt(c.phy.power_rx_mw));
    add("phy.power_sleep_mw", fmt(c.phy.power_sleep_mw));
    add("phy.turnaround_delay_s", fmt(c.phy.turnaround_delay_s));
    add("phy.vote_span_samples", std::to_string(c.phy.vote_span_samples));
    add("phy.tx_phase", c.phy.random_tx_phase ? "random" : "aligned");
    add("channel.path_loss_exponent", fmt(c.channel.path_loss_exponent));
    add("channel.reference_loss_db", fmt(c.channel.reference_loss_db));
    add("channel.system_gain_db", fmt(c.channel.system_gain_db));
    add("channel.rms_delay_spread_s", fmt(c.channel.rms_delay_spread_s));
    add("channel.n_taps", std::to_string(c.channel.n_taps));
    add("channel.fading", c.channel.fading == Fading::none ? "none" : "rayleigh-block");
    add("channel.noise", c.channel.noise_enabled ? "on" : "off");
    return out;
}

}  // namespace ssf
