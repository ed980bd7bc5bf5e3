#include "kerbwsn/kdc.hpp"

namespace kerbwsn {

Kdc::Kdc(std::string realm, KdcConfig config, Rng& rng)
    : realm_(std::move(realm)), config_(config) {
    tgs_key_ = random_session_key(rng, next_key_id_++);
}

SecretKey Kdc::mint_key(Rng& rng) {
    return random_session_key(rng, next_key_id_++);
}

Status Kdc::register_user(const Principal& user, std::string_view password) {
    if (!principal_valid(user)) return ErrorKind::InvalidInput;
    if (users_.contains(user)) return ErrorKind::AlreadyRegistered;
    auto key = derive_key(password, user.name, user.realm);
    if (!key) return key.error();
    SecretKey stored = key.value();
    stored.key_id = next_key_id_++;
    users_.emplace(user, stored);
    return ok_status();
}

Status Kdc::register_service(const Principal& service, const SecretKey& key) {
    if (!principal_valid(service)) return ErrorKind::InvalidInput;
    if (services_.contains(service)) return ErrorKind::AlreadyRegistered;
    services_.emplace(service, key);
    return ok_status();
}

Status Kdc::register_remote_realm(const std::string& realm, const SecretKey& inter_realm_key) {
    if (realm == realm_) return ErrorKind::InvalidInput;
    if (remote_realms_.contains(realm)) return ErrorKind::AlreadyRegistered;
    remote_realms_.emplace(realm, inter_realm_key);
    return ok_status();
}

Result<AsReply> Kdc::as_exchange(const AsRequest& req, NetAddress client_addr, Tick now,
                                 Rng& rng) {
    ++as_count_;

    auto user_it = users_.find(req.user);
    if (user_it == users_.end()) return ErrorKind::UnknownPrincipal;
    if (req.tgs != tgs_principal()) return ErrorKind::UnknownService;

    // Replayed login requests are rejected just like replayed authenticators.
    Tick skew = config_.max_clock_skew;
    Tick delta = req.requested_at > now ? req.requested_at - now : now - req.requested_at;
    if (delta > skew) return ErrorKind::StaleAuthenticator;
    if (replay_cache_.seen(ReplayCache::Context::As, req.user, client_addr, req.requested_at)) {
        return ErrorKind::ReplayDetected;
    }
    replay_cache_.record(ReplayCache::Context::As, req.user, client_addr, req.requested_at,
                         now, skew);

    Ticket tgt;
    tgt.client = req.user;
    tgt.client_addr = client_addr;
    tgt.service = tgs_principal();
    tgt.session_key = random_session_key(rng);
    tgt.issued_at = now;
    tgt.lifetime = config_.tgt_lifetime;

    CredentialGrant grant;
    grant.session_key = tgt.session_key;
    grant.issued_at = tgt.issued_at;
    grant.lifetime = tgt.lifetime;
    grant.ticket = seal(encode(tgt), tgs_key_, rng.next_nonce());

    AsReply reply;
    reply.sealed_for_client = seal(encode(grant), user_it->second, rng.next_nonce());
    return reply;
}

Result<Ticket> Kdc::open_tgt(const SealedBlob& blob) const {
    // A TGT presented here is sealed either under our own TGS key or, for a
    // ticket issued by a peer realm, under one of the inter-realm keys.
    auto opened = open_sealed(blob, tgs_key_);
    if (!opened) {
        for (const auto& [realm, key] : remote_realms_) {
            opened = open_sealed(blob, key);
            if (opened) break;
        }
    }
    if (!opened) return ErrorKind::IntegrityFailure;
    auto ticket = decode_ticket(opened.value());
    if (!ticket) return ErrorKind::IntegrityFailure;
    return ticket;
}

Result<TgsReply> Kdc::tgs_exchange(const TgsRequest& req, Tick now, Rng& rng) {
    ++tgs_count_;

    auto tgt = open_tgt(req.tgt);
    if (!tgt) return tgt.error();
    const Ticket& ticket = tgt.value();

    // A TGT honored here must name this TGS, whether issued locally or by a
    // peer realm for us.
    if (ticket.service != tgs_principal()) return ErrorKind::IntegrityFailure;

    if (!ticket.valid_at(now)) return ErrorKind::ExpiredTicket;

    auto opened_auth = open_sealed(req.authenticator, ticket.session_key);
    if (!opened_auth) return ErrorKind::IntegrityFailure;
    auto decoded_auth = decode_authenticator(opened_auth.value());
    if (!decoded_auth) return ErrorKind::IntegrityFailure;
    const Authenticator& auth = decoded_auth.value();

    if (auth.client != ticket.client || req.user != ticket.client) {
        return ErrorKind::IntegrityFailure;
    }
    if (auth.client_addr != ticket.client_addr) return ErrorKind::AddressMismatch;

    Tick skew = config_.max_clock_skew;
    Tick delta = auth.timestamp > now ? auth.timestamp - now : now - auth.timestamp;
    if (delta > skew) return ErrorKind::StaleAuthenticator;

    if (replay_cache_.seen(ReplayCache::Context::Tgs, auth.client, auth.client_addr,
                           auth.timestamp)) {
        return ErrorKind::ReplayDetected;
    }

    // Pick the sealing key: local service key, or the inter-realm key when
    // the requested service is the TGS of a registered peer realm.
    const SecretKey* sealing_key = nullptr;
    if (auto it = services_.find(req.service); it != services_.end()) {
        sealing_key = &it->second;
    } else if (req.service.realm != realm_) {
        auto it = remote_realms_.find(req.service.realm);
        if (it == remote_realms_.end()) return ErrorKind::UnknownRealm;
        if (req.service != Principal{"tgs", req.service.realm}) return ErrorKind::UnknownService;
        sealing_key = &it->second;
    } else {
        return ErrorKind::UnknownService;
    }

    replay_cache_.record(ReplayCache::Context::Tgs, auth.client, auth.client_addr,
                         auth.timestamp, now, skew);

    Ticket service_ticket;
    service_ticket.client = ticket.client;
    service_ticket.client_addr = ticket.client_addr;
    service_ticket.service = req.service;
    service_ticket.session_key = random_session_key(rng);
    service_ticket.issued_at = now;
    service_ticket.lifetime = config_.service_ticket_lifetime;

    CredentialGrant grant;
    grant.session_key = service_ticket.session_key;
    grant.issued_at = service_ticket.issued_at;
    grant.lifetime = service_ticket.lifetime;
    grant.ticket = seal(encode(service_ticket), *sealing_key, rng.next_nonce());

    TgsReply reply;
    reply.sealed_for_client = seal(encode(grant), ticket.session_key, rng.next_nonce());
    return reply;
}

Bytes Kdc::handle_wire(ByteView request, NetAddress source, Tick now, Rng& rng) {
    auto tag = peek_tag(request);
    if (!tag) return encode(ErrorReply{tag.error()});

    switch (tag.value()) {
        case WireTag::AsRequest: {
            auto req = decode_as_request(request);
            if (!req) return encode(ErrorReply{req.error()});
            auto reply = as_exchange(req.value(), source, now, rng);
            if (!reply) return encode(ErrorReply{reply.error()});
            return encode(reply.value());
        }
        case WireTag::TgsRequest: {
            auto req = decode_tgs_request(request);
            if (!req) return encode(ErrorReply{req.error()});
            auto reply = tgs_exchange(req.value(), now, rng);
            if (!reply) return encode(ErrorReply{reply.error()});
            return encode(reply.value());
        }
        default:
            return encode(ErrorReply{ErrorKind::WrongType});
    }
}

Bytes Kdc::serialize_db() const {
    Bytes out;
    auto append_text = [&out](std::string_view s) {
        out.insert(out.end(), s.begin(), s.end());
        out.push_back(0);
    };
    auto append_key = [&out](const SecretKey& k) {
        out.insert(out.end(), k.bytes.begin(), k.bytes.end());
    };

    append_text(realm_);
    append_key(tgs_key_);
    for (const auto& [principal, key] : users_) {
        append_text(principal.name);
        append_text(principal.realm);
        append_key(key);
    }
    for (const auto& [principal, key] : services_) {
        append_text(principal.name);
        append_text(principal.realm);
        append_key(key);
    }
    for (const auto& [realm, key] : remote_realms_) {
        append_text(realm);
        append_key(key);
    }
    return out;
}

} // namespace kerbwsn
