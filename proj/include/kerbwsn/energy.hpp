#pragma once

#include "kerbwsn/protocol.hpp"

#include <cstdint>
#include <vector>

namespace kerbwsn {

// All energy quantities are integer milliunits; traces are bit-exact.
struct EnergyParams {
    std::uint64_t initial_energy = 1'000'000;
    std::uint64_t cost_fixed_tx = 100;
    std::uint64_t cost_per_byte = 1;
    std::uint64_t verify_cost = 10;

    bool operator==(const EnergyParams&) const = default;
};

// Denial must stay cheaper than any response transmission; the lifetime gap
// between the authenticated and open configurations comes from this.
inline bool energy_params_valid(const EnergyParams& p) {
    return p.verify_cost < p.cost_fixed_tx;
}

inline std::uint64_t tx_cost(const EnergyParams& params, std::uint64_t packet_bytes) {
    return params.cost_fixed_tx + params.cost_per_byte * packet_bytes;
}

/// Saturating battery with a charge log. remaining never increases, and
/// initial - remaining always equals the sum of logged draws.
class EnergyState {
public:
    explicit EnergyState(std::uint64_t initial = 0) : initial_(initial), remaining_(initial) {}

    std::uint64_t remaining() const { return remaining_; }
    std::uint64_t initial() const { return initial_; }
    bool exhausted() const { return remaining_ == 0; }

    // Draws up to `amount`; logs the energy actually taken.
    void charge(std::uint64_t amount) {
        std::uint64_t drawn = amount < remaining_ ? amount : remaining_;
        remaining_ -= drawn;
        charges_.push_back(drawn);
    }

    const std::vector<std::uint64_t>& charge_log() const { return charges_; }

    std::uint64_t total_charged() const {
        std::uint64_t sum = 0;
        for (std::uint64_t c : charges_) sum += c;
        return sum;
    }

private:
    std::uint64_t initial_;
    std::uint64_t remaining_;
    std::vector<std::uint64_t> charges_;
};

/// Remaining energy per tick. series[0] is the initial charge; series[t] is
/// the level after tick t. lifetime is the first tick at which the level
/// reached zero, or the run length if it never did.
struct EnergyTrace {
    std::vector<std::uint64_t> series;
    Tick lifetime = 0;

    bool non_increasing() const {
        for (std::size_t i = 1; i < series.size(); ++i) {
            if (series[i] > series[i - 1]) return false;
        }
        return true;
    }
};

} // namespace kerbwsn
