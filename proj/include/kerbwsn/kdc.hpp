#pragma once

#include "kerbwsn/crypto.hpp"
#include "kerbwsn/protocol.hpp"
#include "kerbwsn/replay_cache.hpp"
#include "kerbwsn/rng.hpp"

#include <map>
#include <string>

namespace kerbwsn {

struct KdcConfig {
    Tick tgt_lifetime = 480;
    Tick service_ticket_lifetime = 100;
    Tick max_clock_skew = 5;

    bool operator==(const KdcConfig&) const = default;
};

/// The centralized server: Authentication Server plus Ticket Granting Server
/// over one principal database. User keys are derive_key outputs; raw
/// passwords are never stored. One instance is a single logical state
/// machine (exchanges mutate only the replay cache); distinct realms run
/// distinct instances.
class Kdc {
public:
    Kdc(std::string realm, KdcConfig config, Rng& rng);

    const std::string& realm() const { return realm_; }
    const KdcConfig& config() const { return config_; }
    Principal tgs_principal() const { return Principal{"tgs", realm_}; }

    // Allocates a key with a registry-unique id; used for service and
    // inter-realm keys that are then shared out of band.
    SecretKey mint_key(Rng& rng);

    Status register_user(const Principal& user, std::string_view password);
    Status register_service(const Principal& service, const SecretKey& key);
    Status register_remote_realm(const std::string& realm, const SecretKey& inter_realm_key);

    /// AS exchange (steps 1-2): for a known user, replies with a
    /// CredentialGrant sealed under the user's derived key containing the
    /// TGS session key and a TGT sealed under the TGS key. The AS cannot
    /// detect a wrong password; a client holding the wrong key simply fails
    /// to open the reply. client_addr comes from the transport envelope and
    /// is bound into the TGT.
    Result<AsReply> as_exchange(const AsRequest& req, NetAddress client_addr, Tick now,
                                Rng& rng);

    /// TGS exchange (steps 3-4): verifies the TGT and authenticator, checks
    /// the time limit, then issues a service ticket sealed under the service
    /// key, or a cross-realm TGT sealed under the inter-realm key when the
    /// requested service lives in a registered remote realm.
    Result<TgsReply> tgs_exchange(const TgsRequest& req, Tick now, Rng& rng);

    // Byte-level entry point used by the simulated network: decodes the
    // request, dispatches, and encodes the reply (ErrorReply on failure).
    Bytes handle_wire(ByteView request, NetAddress source, Tick now, Rng& rng);

    // Canonical dump of the principal database, for audits. Contains names,
    // realm labels, and key material only.
    Bytes serialize_db() const;

    // Exchange counters, for instrumented tests.
    std::uint64_t as_exchange_count() const { return as_count_; }
    std::uint64_t tgs_exchange_count() const { return tgs_count_; }

    bool user_registered(const Principal& user) const { return users_.contains(user); }

private:
    std::uint32_t next_key_id_ = 1;

    std::string realm_;
    KdcConfig config_;
    SecretKey tgs_key_;
    std::map<Principal, SecretKey> users_;
    std::map<Principal, SecretKey> services_;
    std::map<std::string, SecretKey> remote_realms_;
    ReplayCache replay_cache_;
    std::uint64_t as_count_ = 0;
    std::uint64_t tgs_count_ = 0;

    Result<Ticket> open_tgt(const SealedBlob& blob) const;
};

} // namespace kerbwsn
