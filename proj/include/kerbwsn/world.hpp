#pragma once

#include "kerbwsn/base_station.hpp"
#include "kerbwsn/client.hpp"
#include "kerbwsn/kdc.hpp"
#include "kerbwsn/network.hpp"
#include "kerbwsn/scenario.hpp"
#include "kerbwsn/sensor_net.hpp"

#include <memory>
#include <vector>

namespace kerbwsn {

/// A scenario brought to life: topology, one KDC per realm, one base station
/// per declared service, pairwise inter-realm keys, and the delivery fabric.
/// Only authorized users are registered at their KDC. Addresses of members
/// are stable for the lifetime of the world (non-copyable, non-movable).
class World {
public:
    World(const Scenario& scenario, bool auth_enabled);

    World(const World&) = delete;
    World& operator=(const World&) = delete;

    const Scenario& scenario() const { return scenario_; }
    bool auth_enabled() const { return auth_enabled_; }

    Topology& topology() { return topo_; }
    Network& net() { return net_; }
    Rng& rng() { return protocol_rng_; }

    Kdc& kdc(std::size_t realm_index) { return *kdcs_.at(realm_index); }
    std::size_t realm_count() const { return kdcs_.size(); }

    BaseStation& station(const Principal& service);
    // The station experiments and figures are about.
    BaseStation& primary_station();
    Principal primary_service() const;

    const UserSpec& user_spec(std::size_t realm_index, std::string_view name) const;
    Principal user_principal(std::size_t realm_index, std::string_view name) const;

    std::uint32_t next_query_id() { return query_counter_++; }

    // Fresh key outside every registry, for forgery strategies.
    SecretKey random_unregistered_key() { return random_session_key(attacker_rng_); }

private:
    Scenario scenario_;
    bool auth_enabled_;
    Rng protocol_rng_;
    Rng attacker_rng_;
    Topology topo_;
    std::vector<std::unique_ptr<Kdc>> kdcs_;
    std::vector<std::unique_ptr<BaseStation>> stations_;
    Network net_;
    std::uint32_t query_counter_ = 1;
};

} // namespace kerbwsn
