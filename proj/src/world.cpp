#include "kerbwsn/world.hpp"

#include <stdexcept>

namespace kerbwsn {

World::World(const Scenario& scenario, bool auth_enabled)
    : scenario_(scenario),
      auth_enabled_(auth_enabled),
      protocol_rng_(Rng(scenario.seed).split("protocol")),
      attacker_rng_(Rng(scenario.seed).split("attacker")) {
    Rng topo_rng = Rng(scenario.seed).split("topology");
    Rng key_rng = Rng(scenario.seed).split("keys");

    topo_ = build_topology(scenario.n_nodes, scenario.area, scenario.range, topo_rng);

    for (const RealmSpec& realm : scenario.realms) {
        auto kdc = std::make_unique<Kdc>(realm.name, scenario.kdc, key_rng);
        for (const UserSpec& user : realm.users) {
            if (!user.authorized) continue;
            auto registered = kdc->register_user(Principal{user.name, realm.name}, user.password);
            if (!registered) throw std::runtime_error("user registration failed");
        }
        for (const ServiceSpec& service : realm.services) {
            Principal principal{service.name, realm.name};
            SecretKey key = kdc->mint_key(key_rng);
            auto registered = kdc->register_service(principal, key);
            if (!registered) throw std::runtime_error("service registration failed");
            stations_.push_back(std::make_unique<BaseStation>(
                principal, NetAddress{service.addr}, key, auth_enabled,
                scenario.kdc.max_clock_skew, scenario.energy, &topo_,
                scenario.reading_packet));
        }
        kdcs_.push_back(std::move(kdc));
    }

    // Every realm pair shares one inter-realm key, registered on both sides.
    for (std::size_t i = 0; i < kdcs_.size(); ++i) {
        for (std::size_t j = i + 1; j < kdcs_.size(); ++j) {
            SecretKey key = kdcs_[i]->mint_key(key_rng);
            kdcs_[i]->register_remote_realm(kdcs_[j]->realm(), key);
            kdcs_[j]->register_remote_realm(kdcs_[i]->realm(), key);
        }
    }

    for (auto& kdc : kdcs_) net_.attach_kdc(kdc.get());
    for (auto& station : stations_) net_.attach_station(station.get());
}

BaseStation& World::station(const Principal& service) {
    BaseStation* found = net_.station_for(service);
    if (found == nullptr) throw std::out_of_range("no such station");
    return *found;
}

BaseStation& World::primary_station() {
    return station(primary_service());
}

Principal World::primary_service() const {
    const RealmSpec& realm = scenario_.realms.front();
    return Principal{realm.services.front().name, realm.name};
}

const UserSpec& World::user_spec(std::size_t realm_index, std::string_view name) const {
    const RealmSpec& realm = scenario_.realms.at(realm_index);
    for (const UserSpec& user : realm.users) {
        if (user.name == name) return user;
    }
    throw std::out_of_range("no such user");
}

Principal World::user_principal(std::size_t realm_index, std::string_view name) const {
    return Principal{std::string(name), scenario_.realms.at(realm_index).name};
}

} // namespace kerbwsn
