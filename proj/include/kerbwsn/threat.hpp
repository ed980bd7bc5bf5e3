#pragma once

#include "kerbwsn/network.hpp"
#include "kerbwsn/world.hpp"

#include <optional>
#include <string>

namespace kerbwsn {

/// Result of one adversary scenario, returned as data so tests and the
/// attack-report command assert the same facts. served == true means the
/// adversary obtained sensor data.
struct AttackOutcome {
    std::string attack_name;
    bool served = false;
    std::optional<ErrorKind> rejection;
    WireLog transcript;
};

// The adversary is a passive eavesdropper plus active injector: it knows all
// protocol formats and every byte that crossed the network, but no secret
// keys. Each attack takes the world it runs against; with the security layer
// disabled the same adversary goes straight through, which is the baseline
// the layer removes.

/// Intro threat 1: pretend to be another user. Guessed-password logins and
/// every built-in ticket forgery strategy.
AttackOutcome attack_impersonation(World& world);

/// Intro threat 2: capture an exchange, resend the bytes verbatim, both
/// within and after the skew window, including against an unrelated station.
AttackOutcome attack_replay(World& world);

/// Intro threat 3: present a stolen valid ticket from an altered network
/// address, and sweep addresses for one that slips through.
AttackOutcome attack_address_spoof(World& world);

/// The unprotected baseline: an unregistered user's raw query, served when
/// the layer is off and refused when it is on.
AttackOutcome demo_unauthenticated_vulnerability(World& world);

} // namespace kerbwsn
