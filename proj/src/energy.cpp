#include "ssflood/energy.hpp"

#include <cmath>
#include <stdexcept>

namespace ssf {

std::string_view to_string(SymbolState s) {
    switch (s) {
        case SymbolState::listen_empty: return "listen-empty";
        case SymbolState::sleep: return "sleep";
        case SymbolState::listen_detect: return "listen-detect";
        case SymbolState::one_bit_relay: return "1-bit relay";
        case SymbolState::zero_bit_relay: return "0-bit relay";
    }
    return "?";
}

void EnergyLedger::merge(const EnergyLedger& other) {
    for (int i = 0; i < kNumSymbolStates; ++i) {
        by_state[static_cast<size_t>(i)].periods += other.by_state[static_cast<size_t>(i)].periods;
        by_state[static_cast<size_t>(i)].duration_samples += other.by_state[static_cast<size_t>(i)].duration_samples;
        by_state[static_cast<size_t>(i)].energy_j += other.by_state[static_cast<size_t>(i)].energy_j;
    }
    tx_samples += other.tx_samples;
    rx_samples += other.rx_samples;
    sleep_samples += other.sleep_samples;
    tx_energy_j += other.tx_energy_j;
    rx_energy_j += other.rx_energy_j;
    sleep_energy_j += other.sleep_energy_j;
    periods += other.periods;
}

void account_symbol(EnergyLedger& ledger, SymbolState state, int listen_samples,
                    int tx_samples, const PhyParams& phy) {
    const int ts = phy.symbol_samples();
    if (listen_samples < 0 || tx_samples < 0 || listen_samples + tx_samples > ts)
        throw std::logic_error("account_symbol: listen + tx exceeds the symbol period");
    const int sleep_samples = ts - listen_samples - tx_samples;
    const double dt = 1.0 / phy.sample_rate_hz;
    const double e_rx = phy.power_rx_mw * 1e-3 * listen_samples * dt;
    const double e_tx = phy.power_tx_mw * 1e-3 * tx_samples * dt;
    const double e_sleep = phy.power_sleep_mw * 1e-3 * sleep_samples * dt;

    auto& acc = ledger.by_state[static_cast<size_t>(state)];
    acc.periods += 1;
    acc.duration_samples += ts;
    acc.energy_j += e_rx + e_tx + e_sleep;

    ledger.rx_samples += listen_samples;
    ledger.tx_samples += tx_samples;
    ledger.sleep_samples += sleep_samples;
    ledger.rx_energy_j += e_rx;
    ledger.tx_energy_j += e_tx;
    ledger.sleep_energy_j += e_sleep;
    ledger.periods += 1;
}

bool ledger_consistent(const EnergyLedger& ledger, const PhyParams& phy) {
    if (ledger.total_samples() != ledger.periods * phy.symbol_samples()) return false;
    std::int64_t state_periods = 0;
    double state_energy = 0.0;
    for (const auto& acc : ledger.by_state) {
        state_periods += acc.periods;
        state_energy += acc.energy_j;
    }
    if (state_periods != ledger.periods) return false;
    const double total = ledger.total_energy_j();
    return std::fabs(state_energy - total) <= 1e-9 * std::max(1.0, std::fabs(total));
}

StateEnergy expected_state_energy(SymbolState state, const PhyParams& phy,
                                  std::optional<std::pair<double, double>> listen_range) {
    const double ts = phy.symbol_duration_s;
    const double tp = phy.pulse_duration_s;
    const double p_rx = phy.power_rx_mw, p_tx = phy.power_tx_mw, p_sl = phy.power_sleep_mw;

    double listen_mean = 0.0, listen_std = 0.0, tx = 0.0;
    switch (state) {
        case SymbolState::sleep:
            break;
        case SymbolState::listen_empty:
            listen_mean = ts;
            break;
        case SymbolState::zero_bit_relay:
            listen_mean = phy.window_length_s;
            break;
        case SymbolState::listen_detect: {
            const auto [lo, hi] = listen_range.value_or(std::make_pair(0.0, ts));
            listen_mean = 0.5 * (lo + hi);
            listen_std = (hi - lo) / std::sqrt(12.0);
            tx = tp;
            break;
        }
        case SymbolState::one_bit_relay: {
            const auto [lo, hi] = listen_range.value_or(std::make_pair(0.0, phy.window_length_s));
            listen_mean = 0.5 * (lo + hi);
            listen_std = (hi - lo) / std::sqrt(12.0);
            tx = tp;
            break;
        }
    }
    StateEnergy out;
    // Energy is linear in the listen time, so std scales by (p_rx - p_sleep).
    const double mean_mj = p_rx * listen_mean + p_tx * tx + p_sl * (ts - listen_mean - tx);
    out.mean_uj = mean_mj * 1e3;  // mW * s = mJ
    out.mean_mw = mean_mj / ts;
    out.std_uj = (p_rx - p_sl) * listen_std * 1e3;
    return out;
}

PacketEnergy packet_energy_report(std::span<const EnergyLedger> relay_ledgers,
                                  std::int64_t relay_packet_count) {
    if (relay_packet_count < 1)
        throw std::invalid_argument("packet_energy_report: needs at least one packet");
    double tx = 0.0, rx = 0.0, sl = 0.0;
    for (const EnergyLedger& l : relay_ledgers) {
        tx += l.tx_energy_j;
        rx += l.rx_energy_j;
        sl += l.sleep_energy_j;
    }
    const double scale = 1e6 / static_cast<double>(relay_packet_count);
    return {tx * scale, rx * scale, sl * scale};
}

}  // namespace ssf
