#pragma once

#include "kerbwsn/energy.hpp"
#include "kerbwsn/kdc.hpp"
#include "kerbwsn/result.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kerbwsn {

struct UserSpec {
    std::string name;
    std::string password;
    std::uint32_t addr = 0;
    bool authorized = true;  // unauthorized users are never registered at the KDC

    bool operator==(const UserSpec&) const = default;
};

struct ServiceSpec {
    std::string name;
    std::uint32_t addr = 0;

    bool operator==(const ServiceSpec&) const = default;
};

struct RealmSpec {
    std::string name;
    std::vector<UserSpec> users;
    std::vector<ServiceSpec> services;

    bool operator==(const RealmSpec&) const = default;
};

/// Full simulation configuration. One seed drives every random draw in a
/// run; experiments and figures are scoped to the first realm and its first
/// base station, further realms serve cross-realm flows.
struct Scenario {
    std::uint64_t seed = 42;
    Tick max_ticks = 10'000;

    std::uint32_t n_nodes = 12;
    std::int64_t area = 100;
    std::int64_t range = 40;
    std::uint32_t reading_packet = kDefaultReadingPacketBytes;
    std::uint32_t query_packet = kDefaultQueryPacketBytes;

    EnergyParams energy;
    KdcConfig kdc;

    std::vector<std::uint32_t> fig10_user_counts = {0, 1, 2, 4, 8, 16};
    std::vector<std::uint64_t> fig13_energies = {250'000, 500'000, 1'000'000};

    std::vector<RealmSpec> realms;

    bool operator==(const Scenario&) const = default;
};

// The fully populated default scenario: realm WSN (alice and bob authorized,
// mallory not, station bs1) plus realm FIELD (carol, station bs2).
Scenario default_scenario();

struct ScenarioError {
    ErrorKind kind = ErrorKind::ParseError;
    int line = 0;  // 0 when the failure is not tied to a line
    std::string message;
};

/// Parses the line-oriented `section.key = value` format (see README).
/// Unknown keys are errors; missing keys fall back to defaults; files with
/// no realm entries get the default realms. Structural problems report
/// ParseError with the line number, violated invariants report
/// ValidationError naming the invariant.
Result<Scenario, ScenarioError> parse_scenario(std::string_view text);

Result<Scenario, ScenarioError> load_scenario_file(const std::string& path);

/// Canonical text form; parse(render(s)) == s for every valid scenario.
std::string render_scenario(const Scenario& scenario);

// Validation only (render/parse call it themselves).
Result<Unit, ScenarioError> validate_scenario(const Scenario& scenario);

} // namespace kerbwsn
