#include "kerbwsn/threat.hpp"

#include "kerbwsn/client.hpp"

#include <stdexcept>

namespace kerbwsn {

namespace {

struct Cast {
    Principal victim;
    NetAddress victim_addr;
    std::string victim_password;
    Principal attacker;   // unauthorized: the KDC has never heard of them
    NetAddress attacker_addr;
    Principal service;
};

Cast pick_cast(World& world) {
    const RealmSpec& realm = world.scenario().realms.front();
    const UserSpec* victim = nullptr;
    const UserSpec* attacker = nullptr;
    for (const UserSpec& user : realm.users) {
        if (user.authorized && victim == nullptr) victim = &user;
        if (!user.authorized && attacker == nullptr) attacker = &user;
    }
    if (victim == nullptr || attacker == nullptr) {
        throw std::runtime_error("threat scenarios need an authorized and an unauthorized user");
    }
    return Cast{Principal{victim->name, realm.name},
                NetAddress{victim->addr},
                victim->password,
                Principal{attacker->name, realm.name},
                NetAddress{attacker->addr},
                Principal{realm.services.front().name, realm.name}};
}

// Tracks served/rejection over a sequence of attempts against the station.
struct OutcomeBuilder {
    World& world;
    AttackOutcome outcome;
    std::size_t log_start;

    OutcomeBuilder(World& w, std::string name)
        : world(w), log_start(w.net().wire_log().entries.size()) {
        outcome.attack_name = std::move(name);
    }

    void note_station_reply(const Bytes& reply) {
        auto tag = peek_tag(reply);
        if (tag && tag.value() == WireTag::SensorResponse) {
            outcome.served = true;
        } else if (auto err = decode_error_reply(reply)) {
            outcome.rejection = err.value().kind;
        }
    }

    AttackOutcome finish() {
        const auto& entries = world.net().wire_log().entries;
        outcome.transcript.entries.assign(entries.begin() + static_cast<std::ptrdiff_t>(log_start),
                                          entries.end());
        if (outcome.served) outcome.rejection.reset();
        return std::move(outcome);
    }
};

// A completed legitimate exchange whose bytes the adversary has captured.
struct CapturedTraffic {
    Bytes as_request;
    Bytes tgs_request;
    Bytes ap_request;
    Tick when;
};

CapturedTraffic run_victim_flow(World& world, const Cast& cast, Tick start) {
    std::size_t log_start = world.net().wire_log().entries.size();
    auto session = login(cast.victim, cast.victim_password, cast.victim_addr, world.net(),
                         start, world.rng());
    if (!session) throw std::runtime_error("victim login failed");
    auto response = access_base_station(session.value(), cast.service,
                                        SensorQuery{world.next_query_id()}, world.net(), start,
                                        world.rng());
    if (!response && world.auth_enabled()) throw std::runtime_error("victim access failed");

    CapturedTraffic captured;
    captured.when = start;
    const auto& entries = world.net().wire_log().entries;
    for (std::size_t i = log_start; i < entries.size(); ++i) {
        auto tag = peek_tag(entries[i].bytes);
        if (!tag) continue;
        if (tag.value() == WireTag::AsRequest) captured.as_request = entries[i].bytes;
        if (tag.value() == WireTag::TgsRequest) captured.tgs_request = entries[i].bytes;
        if (tag.value() == WireTag::ApRequest) captured.ap_request = entries[i].bytes;
    }
    return captured;
}

Bytes forge_ap_request(World& world, const Cast& cast, const SealedBlob& ticket_blob,
                       const SecretKey& authenticator_key, NetAddress claimed_addr, Tick now) {
    Authenticator auth;
    auth.client = cast.victim;
    auth.client_addr = claimed_addr;
    auth.timestamp = now;

    ApRequest req;
    req.user = cast.victim;
    req.service_ticket = ticket_blob;
    req.authenticator = seal(encode(auth), authenticator_key, world.rng().next_nonce());
    req.query = SensorQuery{world.next_query_id()};
    return encode(req);
}

// A ticket built from whole cloth: right structure, wrong key.
SealedBlob forge_ticket(World& world, const Cast& cast, const SecretKey& sealing_key,
                        const SecretKey& session_key, Tick now) {
    Ticket ticket;
    ticket.client = cast.victim;
    ticket.client_addr = cast.victim_addr;
    ticket.service = cast.service;
    ticket.session_key = session_key;
    ticket.issued_at = now;
    ticket.lifetime = 100;
    return seal(encode(ticket), sealing_key, world.rng().next_nonce());
}

} // namespace

AttackOutcome attack_impersonation(World& world) {
    Cast cast = pick_cast(world);
    OutcomeBuilder builder(world, "impersonation");
    Tick now = 0;

    if (!world.auth_enabled()) {
        // No layer to defeat: ask and receive.
        RawQuery query{SensorQuery{world.next_query_id()}};
        Bytes reply = world.net().send_to_station(cast.service, encode(query),
                                                  cast.attacker_addr, now);
        builder.note_station_reply(reply);
        return builder.finish();
    }

    // Guessed-password logins as the victim: the AS replies, the seal does
    // not open, no credential is obtained.
    for (const char* guess : {"password", "letmein", "hunter2"}) {
        auto session = login(cast.victim, guess, cast.attacker_addr, world.net(), now,
                             world.rng());
        if (session) {
            builder.outcome.served = true;  // possessing a session == broken
        } else {
            builder.outcome.rejection = session.error();
        }
        now += 1;
    }

    // Login as self: never registered.
    auto self_login = login(cast.attacker, "guessme", cast.attacker_addr, world.net(), now,
                            world.rng());
    if (!self_login) builder.outcome.rejection = self_login.error();
    now += 1;

    // Forgery strategies: structurally valid tickets under every key the
    // adversary can lay hands on.
    SecretKey random_key = world.random_unregistered_key();
    SecretKey guessed_user_key =
        derive_key("password", cast.victim.name, cast.victim.realm).value();
    SecretKey session_key = world.random_unregistered_key();

    for (const SecretKey& sealing_key : {random_key, guessed_user_key, session_key}) {
        SealedBlob ticket = forge_ticket(world, cast, sealing_key, session_key, now);
        Bytes request = forge_ap_request(world, cast, ticket, session_key, cast.victim_addr, now);
        Bytes reply = world.net().send_to_station(cast.service, request, cast.victim_addr, now);
        builder.note_station_reply(reply);
        now += 1;
    }

    // Reusing an eavesdropped sealed TGT as if it were a service ticket:
    // sealed under the TGS key, not the station's.
    CapturedTraffic captured = run_victim_flow(world, cast, now);
    now += 1;
    auto tgs_req = decode_tgs_request(captured.tgs_request);
    if (tgs_req) {
        Bytes request = forge_ap_request(world, cast, tgs_req.value().tgt, session_key,
                                         cast.victim_addr, now);
        Bytes reply = world.net().send_to_station(cast.service, request, cast.victim_addr, now);
        builder.note_station_reply(reply);
    }

    return builder.finish();
}

AttackOutcome attack_replay(World& world) {
    Cast cast = pick_cast(world);
    OutcomeBuilder builder(world, "replay");

    Tick start = 10;
    CapturedTraffic captured = run_victim_flow(world, cast, start);
    Tick skew = world.scenario().kdc.max_clock_skew;

    auto replay_all = [&](Tick when) {
        // Any non-error answer to a replayed request means the protection
        // failed, even if the payload is useless to the adversary.
        Bytes as_reply = world.net().send_to_kdc(cast.victim.realm, captured.as_request,
                                                 cast.victim_addr, when, world.rng());
        if (auto err = decode_error_reply(as_reply)) {
            builder.outcome.rejection = err.value().kind;
        } else {
            builder.outcome.served = true;
        }

        Bytes tgs_reply = world.net().send_to_kdc(cast.victim.realm, captured.tgs_request,
                                                  cast.victim_addr, when, world.rng());
        if (auto err = decode_error_reply(tgs_reply)) {
            builder.outcome.rejection = err.value().kind;
        } else if (auto ok = decode_tgs_reply(tgs_reply); ok) {
            // A re-issued ticket would still be sealed for the session key
            // the adversary lacks, but the replay itself must not pass.
            builder.outcome.served = true;
        }

        Bytes ap_reply = world.net().send_to_station(cast.service, captured.ap_request,
                                                     cast.victim_addr, when);
        builder.note_station_reply(ap_reply);
    };

    // Immediately (inside the skew window) and again after it closes.
    replay_all(captured.when);
    replay_all(captured.when + skew + 1);

    // Against an unrelated station sharing no session: a fresh key nobody
    // ever exchanged.
    BaseStation other(Principal{"bs-other", cast.service.realm}, NetAddress{999},
                      world.random_unregistered_key(), world.auth_enabled(),
                      world.scenario().kdc.max_clock_skew, world.scenario().energy,
                      &world.topology(), world.scenario().reading_packet);
    Bytes other_reply = other.handle_wire(captured.ap_request, cast.victim_addr, captured.when);
    builder.note_station_reply(other_reply);

    return builder.finish();
}

AttackOutcome attack_address_spoof(World& world) {
    Cast cast = pick_cast(world);
    OutcomeBuilder builder(world, "address-spoof");

    if (!world.auth_enabled()) {
        RawQuery query{SensorQuery{world.next_query_id()}};
        Bytes reply = world.net().send_to_station(cast.service, encode(query),
                                                  cast.attacker_addr, 0);
        builder.note_station_reply(reply);
        return builder.finish();
    }

    Tick start = 10;
    CapturedTraffic captured = run_victim_flow(world, cast, start);
    auto ap = decode_ap_request(captured.ap_request);
    if (!ap) throw std::runtime_error("captured request failed to decode");
    const SealedBlob& stolen_ticket = ap.value().service_ticket;

    // Stolen ticket submitted from the adversary's own address.
    Bytes from_attacker = world.net().send_to_station(cast.service, captured.ap_request,
                                                      cast.attacker_addr, start);
    builder.note_station_reply(from_attacker);

    // Address spoofed to the victim's, but the fresh authenticator is sealed
    // under a key that is not the session key.
    SecretKey wrong_key = world.random_unregistered_key();
    Bytes spoofed = forge_ap_request(world, cast, stolen_ticket, wrong_key, cast.victim_addr,
                                     start + 1);
    Bytes spoofed_reply = world.net().send_to_station(cast.service, spoofed, cast.victim_addr,
                                                      start + 1);
    builder.note_station_reply(spoofed_reply);

    // Sweep: the captured request from every address in the scenario plus a
    // band of made-up ones. Nothing may serve.
    std::vector<std::uint32_t> sweep;
    for (const UserSpec& user : world.scenario().realms.front().users) sweep.push_back(user.addr);
    for (std::uint32_t addr = 2; addr < 34; ++addr) sweep.push_back(addr);
    for (std::uint32_t addr : sweep) {
        Bytes reply = world.net().send_to_station(cast.service, captured.ap_request,
                                                  NetAddress{addr}, start);
        builder.note_station_reply(reply);
    }

    return builder.finish();
}

AttackOutcome demo_unauthenticated_vulnerability(World& world) {
    Cast cast = pick_cast(world);
    OutcomeBuilder builder(world, "unauthenticated-query");
    RawQuery query{SensorQuery{world.next_query_id()}};
    Bytes reply = world.net().send_to_station(cast.service, encode(query), cast.attacker_addr, 0);
    builder.note_station_reply(reply);
    return builder.finish();
}

} // namespace kerbwsn
