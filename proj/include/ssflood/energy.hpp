#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "ssflood/params.hpp"

namespace ssf {

// Per-symbol-period node state, the unit of energy accounting.
enum class SymbolState : int {
    listen_empty = 0,   // listened a full period, detected nothing
    sleep = 1,
    listen_detect = 2,  // unsynchronized listen that acquired the packet
    one_bit_relay = 3,  // in-window detection (and forwarding, for relays)
    zero_bit_relay = 4, // in-window silence
};
inline constexpr int kNumSymbolStates = 5;

std::string_view to_string(SymbolState s);

// Time is tracked in whole samples so the per-period partition
// tx + rx + sleep == Ts holds exactly.
struct EnergyLedger {
    struct StateAcc {
        std::int64_t periods = 0;
        std::int64_t duration_samples = 0;
        double energy_j = 0.0;
    };
    std::array<StateAcc, kNumSymbolStates> by_state{};
    std::int64_t tx_samples = 0, rx_samples = 0, sleep_samples = 0;
    double tx_energy_j = 0.0, rx_energy_j = 0.0, sleep_energy_j = 0.0;
    std::int64_t periods = 0;

    double total_energy_j() const { return tx_energy_j + rx_energy_j + sleep_energy_j; }
    std::int64_t total_samples() const { return tx_samples + rx_samples + sleep_samples; }
    void merge(const EnergyLedger& other);
};

// One symbol period: listen_samples at rx power, tx_samples at tx power,
// the remainder of Ts asleep. Throws if listen + tx exceeds the period.
void account_symbol(EnergyLedger& ledger, SymbolState state, int listen_samples,
                    int tx_samples, const PhyParams& phy);

// Internal-consistency check: per-mode and per-state accumulations agree and
// the time partition sums to periods * Ts exactly.
bool ledger_consistent(const EnergyLedger& ledger, const PhyParams& phy);

struct StateEnergy {
    double mean_mw = 0.0;
    double mean_uj = 0.0;
    double std_uj = 0.0;
};

// Closed-form mean/std per state under the documented timing model:
//   sleep         no radio activity
//   listen_empty  rx for the full symbol period
//   zero_bit      rx for the detection window, then sleep
//   listen_detect rx for t ~ U[listen range], one pulse tx, sleep remainder
//   one_bit       same shape with t ~ U[0, window]
// listen_range overrides the uniform listen-time range (seconds).
StateEnergy expected_state_energy(SymbolState state, const PhyParams& phy,
                                  std::optional<std::pair<double, double>> listen_range = std::nullopt);

struct PacketEnergy {
    double tx_uj = 0.0, rx_uj = 0.0, sleep_uj = 0.0;
    double total_uj() const { return tx_uj + rx_uj + sleep_uj; }
};

// Mean energy per packet per relay, split by radio mode, over ledgers that
// already aggregate whole campaigns. relay_packet_count = number of
// (relay, packet) pairs the ledgers cover.
PacketEnergy packet_energy_report(std::span<const EnergyLedger> relay_ledgers,
                                  std::int64_t relay_packet_count);

}  // namespace ssf
