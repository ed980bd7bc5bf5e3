#pragma once

#include "kerbwsn/bytes.hpp"
#include "kerbwsn/crypto.hpp"
#include "kerbwsn/result.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace kerbwsn {

using Tick = std::uint64_t;

struct Principal {
    std::string name;
    std::string realm;

    auto operator<=>(const Principal&) const = default;
};

// Name and realm must be non-empty and must not contain '/'.
bool principal_valid(const Principal& p);

struct NetAddress {
    std::uint32_t value = 0;

    auto operator<=>(const NetAddress&) const = default;
};

struct Ticket {
    Principal client;
    NetAddress client_addr;
    Principal service;
    SecretKey session_key;
    Tick issued_at = 0;
    Tick lifetime = 0;

    bool operator==(const Ticket&) const = default;

    // Expiry is inclusive at both ends.
    bool valid_at(Tick now) const { return issued_at <= now && now <= issued_at + lifetime; }
};

/// Freshness proof sealed under a session key; the replay countermeasure.
struct Authenticator {
    Principal client;
    NetAddress client_addr;
    Tick timestamp = 0;

    bool operator==(const Authenticator&) const = default;
};

/// Plaintext of AS/TGS replies: the session key plus the sealed ticket, with
/// the ticket's validity window repeated so the client can manage its cache
/// without being able to open the ticket itself.
struct CredentialGrant {
    SecretKey session_key;
    Tick issued_at = 0;
    Tick lifetime = 0;
    SealedBlob ticket;

    bool operator==(const CredentialGrant&) const = default;
};

struct AsRequest {
    Principal user;
    Principal tgs;
    Tick requested_at = 0;

    bool operator==(const AsRequest&) const = default;
};

struct AsReply {
    SealedBlob sealed_for_client;

    bool operator==(const AsReply&) const = default;
};

struct TgsRequest {
    Principal user;
    Principal service;
    SealedBlob tgt;
    SealedBlob authenticator;

    bool operator==(const TgsRequest&) const = default;
};

struct TgsReply {
    SealedBlob sealed_for_client;

    bool operator==(const TgsReply&) const = default;
};

struct SensorQuery {
    std::uint32_t query_id = 0;

    bool operator==(const SensorQuery&) const = default;
};

struct ApRequest {
    Principal user;
    SealedBlob service_ticket;
    SealedBlob authenticator;
    SensorQuery query;

    bool operator==(const ApRequest&) const = default;
};

/// Unauthenticated query; only served when the security layer is disabled.
struct RawQuery {
    SensorQuery query;

    bool operator==(const RawQuery&) const = default;
};

struct Reading {
    std::uint32_t node_id = 0;
    std::int64_t value = 0;

    bool operator==(const Reading&) const = default;
};

struct SensorResponse {
    std::vector<Reading> readings;

    bool operator==(const SensorResponse&) const = default;
};

struct ErrorReply {
    ErrorKind kind = ErrorKind::InvalidInput;

    bool operator==(const ErrorReply&) const = default;
};

// Canonical encoding: a leading one-byte type tag, then every field in
// declaration order; integers big-endian fixed width (u32 = 4 bytes,
// u64 = 8 bytes, i64 = two's complement u64); text and byte fields as a
// 4-byte big-endian length prefix plus the raw bytes. Nested Principal /
// SecretKey / SealedBlob / SensorQuery values encode inline without a tag.
// The encoding is injective and is the wire/storage format for all sealed
// payloads and golden files.
enum class WireTag : std::uint8_t {
    Ticket = 0x01,
    Authenticator = 0x02,
    CredentialGrant = 0x03,
    AsRequest = 0x10,
    AsReply = 0x11,
    TgsRequest = 0x12,
    TgsReply = 0x13,
    ApRequest = 0x14,
    RawQuery = 0x20,
    SensorResponse = 0x21,
    ErrorReply = 0x2e,
};

Bytes encode(const Ticket& v);
Bytes encode(const Authenticator& v);
Bytes encode(const CredentialGrant& v);
Bytes encode(const AsRequest& v);
Bytes encode(const AsReply& v);
Bytes encode(const TgsRequest& v);
Bytes encode(const TgsReply& v);
Bytes encode(const ApRequest& v);
Bytes encode(const RawQuery& v);
Bytes encode(const SensorResponse& v);
Bytes encode(const ErrorReply& v);

// Inline (untagged) forms, used where a value nests inside a container or a
// bare blob must be compared byte-for-byte.
Bytes encode_sealed_blob(const SealedBlob& v);

Result<Ticket> decode_ticket(ByteView bytes);
Result<Authenticator> decode_authenticator(ByteView bytes);
Result<CredentialGrant> decode_credential_grant(ByteView bytes);
Result<AsRequest> decode_as_request(ByteView bytes);
Result<AsReply> decode_as_reply(ByteView bytes);
Result<TgsRequest> decode_tgs_request(ByteView bytes);
Result<TgsReply> decode_tgs_reply(ByteView bytes);
Result<ApRequest> decode_ap_request(ByteView bytes);
Result<RawQuery> decode_raw_query(ByteView bytes);
Result<SensorResponse> decode_sensor_response(ByteView bytes);
Result<ErrorReply> decode_error_reply(ByteView bytes);

// Tag of an encoded message without decoding it; MalformedEncoding if empty.
Result<WireTag> peek_tag(ByteView bytes);

} // namespace kerbwsn
