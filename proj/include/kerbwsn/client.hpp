#pragma once

#include "kerbwsn/network.hpp"
#include "kerbwsn/protocol.hpp"
#include "kerbwsn/rng.hpp"

#include <map>
#include <optional>

namespace kerbwsn {

struct CachedCredential {
    SealedBlob ticket;
    SecretKey session_key;
    Tick issued_at = 0;
    Tick lifetime = 0;

    bool valid_at(Tick now) const { return issued_at <= now && now <= issued_at + lifetime; }
};

/// User-side state machine: login, ticket caching, service access. Tickets
/// are cached and reused until they expire; the password and the derived key
/// never leave the session — only sealed blobs and principal names cross the
/// network.
class ClientSession {
public:
    Principal user;
    NetAddress addr;
    SecretKey user_key;
    // Authenticator timestamps use the client's local clock; scenarios can
    // skew it to exercise staleness handling.
    std::int64_t clock_offset = 0;

    std::optional<CachedCredential> tgt;
    std::map<Principal, CachedCredential> service_tickets;

    Tick local_time(Tick now) const {
        return static_cast<Tick>(static_cast<std::int64_t>(now) + clock_offset);
    }
};

/// AS exchange on behalf of the user. The reply is sealed under the
/// password-derived key; a wrong password surfaces here, at decryption, as
/// WrongPassword — the server cannot tell.
Result<ClientSession> login(const Principal& user, std::string_view password, NetAddress addr,
                            Network& net, Tick now, Rng& rng);

/// Returns the cached entry while it is unexpired; otherwise runs the TGS
/// exchange — via a cross-realm TGT first when the service lives in another
/// realm — and caches the result.
Result<CachedCredential> obtain_service_ticket(ClientSession& session, const Principal& service,
                                               Network& net, Tick now, Rng& rng);

/// Full access path (step 5): acquires tickets as needed, builds an
/// ApRequest with a fresh authenticator, and returns the station's response.
Result<SensorResponse> access_base_station(ClientSession& session, const Principal& service,
                                           const SensorQuery& query, Network& net, Tick now,
                                           Rng& rng);

} // namespace kerbwsn
