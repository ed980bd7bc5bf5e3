#pragma once

#include "kerbwsn/scenario.hpp"

#include <string>

namespace kerbwsn {

/// Annotated five-step exchange (client, AS, TGS, base station) for the
/// first authorized user and first station of the first realm.
std::string handshake_transcript(const Scenario& scenario);

/// Same flow against a base station in the second realm, via the home TGS
/// and the peer TGS with the shared inter-realm key.
std::string cross_realm_transcript(const Scenario& scenario);

struct AttackReport {
    std::string table;
    bool all_expected = true;  // attacks denied with the layer on, baseline served with it off
};

AttackReport attack_report(const Scenario& scenario);

/// Summary of a full run: topology, both lifetime experiments, traffic.
std::string run_summary(const Scenario& scenario);

} // namespace kerbwsn
