#include "kerbwsn/client.hpp"

namespace kerbwsn {

namespace {

// Decodes a reply that is either the expected kind or an ErrorReply carrying
// the server's rejection.
template <typename T>
Result<T> expect_reply(const Bytes& reply, Result<T> (*decode_fn)(ByteView)) {
    auto tag = peek_tag(reply);
    if (!tag) return tag.error();
    if (tag.value() == WireTag::ErrorReply) {
        auto err = decode_error_reply(reply);
        if (!err) return err.error();
        return err.value().kind;
    }
    return decode_fn(reply);
}

Result<CachedCredential> run_tgs_exchange(ClientSession& session, const Principal& service,
                                          const std::string& kdc_realm,
                                          const CachedCredential& tgt_entry, Network& net,
                                          Tick now, Rng& rng) {
    Authenticator auth;
    auth.client = session.user;
    auth.client_addr = session.addr;
    auth.timestamp = session.local_time(now);

    TgsRequest req;
    req.user = session.user;
    req.service = service;
    req.tgt = tgt_entry.ticket;
    req.authenticator = seal(encode(auth), tgt_entry.session_key, rng.next_nonce());

    Bytes reply_bytes = net.send_to_kdc(kdc_realm, encode(req), session.addr, now, rng);
    auto reply = expect_reply<TgsReply>(reply_bytes, decode_tgs_reply);
    if (!reply) return reply.error();

    auto opened = open_sealed(reply.value().sealed_for_client, tgt_entry.session_key);
    if (!opened) return ErrorKind::IntegrityFailure;
    auto grant = decode_credential_grant(opened.value());
    if (!grant) return ErrorKind::IntegrityFailure;

    CachedCredential entry;
    entry.ticket = grant.value().ticket;
    entry.session_key = grant.value().session_key;
    entry.issued_at = grant.value().issued_at;
    entry.lifetime = grant.value().lifetime;
    return entry;
}

} // namespace

Result<ClientSession> login(const Principal& user, std::string_view password, NetAddress addr,
                            Network& net, Tick now, Rng& rng) {
    auto key = derive_key(password, user.name, user.realm);
    if (!key) return key.error();

    AsRequest req;
    req.user = user;
    req.tgs = Principal{"tgs", user.realm};
    req.requested_at = now;

    Bytes reply_bytes = net.send_to_kdc(user.realm, encode(req), addr, now, rng);
    auto reply = expect_reply<AsReply>(reply_bytes, decode_as_reply);
    if (!reply) return reply.error();

    // The wrong password means the wrong key, which means the seal refuses
    // to open. This is the only place a bad password can surface.
    auto opened = open_sealed(reply.value().sealed_for_client, key.value());
    if (!opened) return ErrorKind::WrongPassword;
    auto grant = decode_credential_grant(opened.value());
    if (!grant) return ErrorKind::WrongPassword;

    ClientSession session;
    session.user = user;
    session.addr = addr;
    session.user_key = key.value();
    CachedCredential tgt;
    tgt.ticket = grant.value().ticket;
    tgt.session_key = grant.value().session_key;
    tgt.issued_at = grant.value().issued_at;
    tgt.lifetime = grant.value().lifetime;
    session.tgt = tgt;
    return session;
}

Result<CachedCredential> obtain_service_ticket(ClientSession& session, const Principal& service,
                                               Network& net, Tick now, Rng& rng) {
    if (auto it = session.service_tickets.find(service); it != session.service_tickets.end()) {
        if (it->second.valid_at(now)) return it->second;
        session.service_tickets.erase(it);
    }

    if (!session.tgt.has_value()) return ErrorKind::NoTgt;
    if (!session.tgt->valid_at(now)) return ErrorKind::ExpiredTgt;

    CachedCredential entry;
    if (service.realm == session.user.realm) {
        auto local = run_tgs_exchange(session, service, session.user.realm, *session.tgt, net,
                                      now, rng);
        if (!local) return local.error();
        entry = local.value();
    } else {
        // Remote service: first a cross-realm TGT for the peer TGS from the
        // home KDC, then the service ticket from the peer KDC. The
        // cross-realm TGT is cached like any other service ticket.
        Principal remote_tgs{"tgs", service.realm};
        CachedCredential cross;
        if (auto it = session.service_tickets.find(remote_tgs);
            it != session.service_tickets.end() && it->second.valid_at(now)) {
            cross = it->second;
        } else {
            session.service_tickets.erase(remote_tgs);
            auto fetched = run_tgs_exchange(session, remote_tgs, session.user.realm,
                                            *session.tgt, net, now, rng);
            if (!fetched) return fetched.error();
            cross = fetched.value();
            session.service_tickets[remote_tgs] = cross;
        }
        auto remote = run_tgs_exchange(session, service, service.realm, cross, net, now, rng);
        if (!remote) return remote.error();
        entry = remote.value();
    }

    session.service_tickets[service] = entry;
    return entry;
}

Result<SensorResponse> access_base_station(ClientSession& session, const Principal& service,
                                           const SensorQuery& query, Network& net, Tick now,
                                           Rng& rng) {
    auto credential = obtain_service_ticket(session, service, net, now, rng);
    if (!credential) return credential.error();

    Authenticator auth;
    auth.client = session.user;
    auth.client_addr = session.addr;
    auth.timestamp = session.local_time(now);

    ApRequest req;
    req.user = session.user;
    req.service_ticket = credential.value().ticket;
    req.authenticator = seal(encode(auth), credential.value().session_key, rng.next_nonce());
    req.query = query;

    Bytes reply_bytes = net.send_to_station(service, encode(req), session.addr, now);
    return expect_reply<SensorResponse>(reply_bytes, decode_sensor_response);
}

} // namespace kerbwsn
