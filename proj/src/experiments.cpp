#include "kerbwsn/experiments.hpp"

#include "kerbwsn/world.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace kerbwsn {

namespace {

// Authorized users keep a live session across ticks; expired TGTs trigger a
// re-login with the scenario password.
struct ExperimentDriver {
    World& world;
    std::map<std::string, ClientSession> sessions;

    void authorized_access(const UserSpec& user, Tick now) {
        Principal principal = world.user_principal(0, user.name);
        Principal service = world.primary_service();
        SensorQuery query{world.next_query_id()};

        auto it = sessions.find(user.name);
        if (it == sessions.end()) {
            auto session = login(principal, user.password, NetAddress{user.addr}, world.net(),
                                 now, world.rng());
            if (!session) throw std::runtime_error("experiment login failed");
            it = sessions.emplace(user.name, std::move(session).take()).first;
        }

        auto response = access_base_station(it->second, service, query, world.net(), now,
                                            world.rng());
        if (!response && (response.error() == ErrorKind::ExpiredTgt ||
                          response.error() == ErrorKind::NoTgt)) {
            auto session = login(principal, user.password, NetAddress{user.addr}, world.net(),
                                 now, world.rng());
            if (!session) throw std::runtime_error("experiment re-login failed");
            it->second = std::move(session).take();
            access_base_station(it->second, service, query, world.net(), now, world.rng());
        }
    }

    void raw_access(const UserSpec& user, Tick now) {
        RawQuery query{SensorQuery{world.next_query_id()}};
        world.net().send_to_station(world.primary_service(), encode(query),
                                    NetAddress{user.addr}, now);
    }
};

} // namespace

EnergyTrace run_lifetime_experiment(const Scenario& scenario, bool auth_enabled) {
    World world(scenario, auth_enabled);
    BaseStation& station = world.primary_station();
    const RealmSpec& realm = scenario.realms.front();

    ExperimentDriver driver{world, {}};

    EnergyTrace trace;
    trace.series.push_back(station.energy().remaining());
    if (station.energy().exhausted()) {
        trace.lifetime = 0;
        return trace;
    }

    for (Tick now = 1; now <= scenario.max_ticks; ++now) {
        for (const UserSpec& user : realm.users) {
            if (auth_enabled && user.authorized) {
                driver.authorized_access(user, now);
            } else {
                driver.raw_access(user, now);
            }
        }
        trace.series.push_back(station.energy().remaining());
        if (station.energy().exhausted()) {
            trace.lifetime = now;
            return trace;
        }
    }
    trace.lifetime = scenario.max_ticks;
    return trace;
}

std::vector<std::pair<std::uint32_t, std::uint64_t>> traffic_vs_users(
    const Scenario& scenario, const std::vector<std::uint32_t>& user_counts) {
    Rng topo_rng = Rng(scenario.seed).split("topology");
    Topology topo = build_topology(scenario.n_nodes, scenario.area, scenario.range, topo_rng);

    std::vector<std::pair<std::uint32_t, std::uint64_t>> series;
    series.reserve(user_counts.size());
    for (std::uint32_t users : user_counts) {
        std::uint64_t total = 0;
        for (std::uint32_t u = 0; u < users; ++u) {
            // user -> base station query packet
            total += scenario.query_packet;
            // base station floods the query to the sensors
            total += one_to_many_flood(topo, scenario.query_packet).total_bytes;
            // readings travel back over the multi-hop tree
            CollectionRound round = many_to_one_round(topo, scenario.reading_packet);
            total += round.total_bytes;
            // base station -> user response
            total += static_cast<std::uint64_t>(scenario.reading_packet) * round.delivered.size();
        }
        series.emplace_back(users, total);
    }
    return series;
}

std::vector<std::pair<std::uint64_t, Tick>> lifetime_vs_energy(
    const Scenario& scenario, const std::vector<std::uint64_t>& initial_energies) {
    std::vector<std::pair<std::uint64_t, Tick>> series;
    series.reserve(initial_energies.size());
    for (std::uint64_t energy : initial_energies) {
        Scenario variant = scenario;
        variant.energy.initial_energy = energy;
        EnergyTrace trace = run_lifetime_experiment(variant, true);
        series.emplace_back(energy, trace.lifetime);
    }
    return series;
}

std::string figure_csv(const Scenario& scenario, int which) {
    std::ostringstream out;
    switch (which) {
        case 10: {
            out << "users,total_bytes\n";
            for (auto [users, bytes] : traffic_vs_users(scenario, scenario.fig10_user_counts)) {
                out << users << ',' << bytes << '\n';
            }
            break;
        }
        case 11:
        case 12: {
            EnergyTrace trace = run_lifetime_experiment(scenario, which == 12);
            out << "tick,remaining_milliunits\n";
            for (std::size_t t = 0; t < trace.series.size(); ++t) {
                out << t << ',' << trace.series[t] << '\n';
            }
            break;
        }
        case 13: {
            out << "initial_energy,lifetime_ticks\n";
            for (auto [energy, lifetime] : lifetime_vs_energy(scenario, scenario.fig13_energies)) {
                out << energy << ',' << lifetime << '\n';
            }
            break;
        }
        default:
            throw std::invalid_argument("figure must be 10, 11, 12, or 13");
    }
    return out.str();
}

} // namespace kerbwsn
