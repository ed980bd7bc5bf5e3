#pragma once

#include "kerbwsn/energy.hpp"
#include "kerbwsn/scenario.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kerbwsn {

/// Drains the primary base station tick by tick: every user of the first
/// realm issues one query per tick (authorized ones through the full ticket
/// flow when the layer is on, the rest as raw queries) until the energy
/// reaches zero or max_ticks pass.
EnergyTrace run_lifetime_experiment(const Scenario& scenario, bool auth_enabled);

/// One query round per user count; aggregate bytes on the network (query
/// delivery, flood, collection, response) recorded per count.
std::vector<std::pair<std::uint32_t, std::uint64_t>> traffic_vs_users(
    const Scenario& scenario, const std::vector<std::uint32_t>& user_counts);

/// One authenticated lifetime experiment per initial energy value.
std::vector<std::pair<std::uint64_t, Tick>> lifetime_vs_energy(
    const Scenario& scenario, const std::vector<std::uint64_t>& initial_energies);

// CSV emission, fixed headers:
//   figure 10 -> users,total_bytes
//   figures 11/12 -> tick,remaining_milliunits
//   figure 13 -> initial_energy,lifetime_ticks
std::string figure_csv(const Scenario& scenario, int which);

} // namespace kerbwsn
