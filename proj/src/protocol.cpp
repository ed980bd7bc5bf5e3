#include "kerbwsn/protocol.hpp"

#include <cstring>

namespace kerbwsn {

bool principal_valid(const Principal& p) {
    if (p.name.empty() || p.realm.empty()) return false;
    if (p.name.find('/') != std::string::npos) return false;
    if (p.realm.find('/') != std::string::npos) return false;
    return true;
}

namespace {

class Encoder {
public:
    void tag(WireTag t) { out_.push_back(static_cast<std::uint8_t>(t)); }

    void u8(std::uint8_t v) { out_.push_back(v); }

    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (24 - 8 * i)));
    }

    void u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (56 - 8 * i)));
    }

    void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }

    void blob(ByteView data) {
        u32(static_cast<std::uint32_t>(data.size()));
        out_.insert(out_.end(), data.begin(), data.end());
    }

    void text(std::string_view s) {
        blob(ByteView(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
    }

    void principal(const Principal& p) {
        text(p.name);
        text(p.realm);
    }

    void secret_key(const SecretKey& k) {
        u32(k.key_id);
        blob(ByteView(k.bytes.data(), k.bytes.size()));
    }

    void sealed(const SealedBlob& b) {
        u32(b.key_id);
        blob(ByteView(b.nonce.data(), b.nonce.size()));
        blob(b.ciphertext);
        blob(ByteView(b.tag.data(), b.tag.size()));
    }

    Bytes take() { return std::move(out_); }

private:
    Bytes out_;
};

class Decoder {
public:
    explicit Decoder(ByteView in) : in_(in), pos_(0) {}

    bool u8(std::uint8_t& v) {
        if (pos_ + 1 > in_.size()) return false;
        v = in_[pos_++];
        return true;
    }

    bool u32(std::uint32_t& v) {
        if (pos_ + 4 > in_.size()) return false;
        v = 0;
        for (int i = 0; i < 4; ++i) v = v << 8 | in_[pos_++];
        return true;
    }

    bool u64(std::uint64_t& v) {
        if (pos_ + 8 > in_.size()) return false;
        v = 0;
        for (int i = 0; i < 8; ++i) v = v << 8 | in_[pos_++];
        return true;
    }

    bool i64(std::int64_t& v) {
        std::uint64_t u;
        if (!u64(u)) return false;
        v = static_cast<std::int64_t>(u);
        return true;
    }

    bool blob(Bytes& out) {
        std::uint32_t len;
        if (!u32(len)) return false;
        if (pos_ + len > in_.size()) return false;
        out.assign(in_.begin() + static_cast<std::ptrdiff_t>(pos_),
                   in_.begin() + static_cast<std::ptrdiff_t>(pos_ + len));
        pos_ += len;
        return true;
    }

    bool text(std::string& out) {
        Bytes raw;
        if (!blob(raw)) return false;
        out.assign(raw.begin(), raw.end());
        return true;
    }

    bool principal(Principal& p) {
        if (!text(p.name) || !text(p.realm)) return false;
        return principal_valid(p);
    }

    bool secret_key(SecretKey& k) {
        if (!u32(k.key_id)) return false;
        Bytes raw;
        if (!blob(raw) || raw.size() != k.bytes.size()) return false;
        std::memcpy(k.bytes.data(), raw.data(), raw.size());
        return true;
    }

    bool sealed(SealedBlob& b) {
        if (!u32(b.key_id)) return false;
        Bytes nonce;
        if (!blob(nonce) || nonce.size() != b.nonce.size()) return false;
        std::memcpy(b.nonce.data(), nonce.data(), nonce.size());
        if (!blob(b.ciphertext)) return false;
        Bytes tag;
        if (!blob(tag) || tag.size() != b.tag.size()) return false;
        std::memcpy(b.tag.data(), tag.data(), tag.size());
        return true;
    }

    bool done() const { return pos_ == in_.size(); }

    // Checks and consumes the leading tag; distinguishes "wrong message
    // kind" from structural damage.
    Result<Unit> expect_tag(WireTag want) {
        std::uint8_t t;
        if (!u8(t)) return ErrorKind::MalformedEncoding;
        if (t != static_cast<std::uint8_t>(want)) return ErrorKind::WrongType;
        return Unit{};
    }

private:
    ByteView in_;
    std::size_t pos_;
};

} // namespace

Bytes encode(const Ticket& v) {
    Encoder e;
    e.tag(WireTag::Ticket);
    e.principal(v.client);
    e.u32(v.client_addr.value);
    e.principal(v.service);
    e.secret_key(v.session_key);
    e.u64(v.issued_at);
    e.u64(v.lifetime);
    return e.take();
}

Bytes encode(const Authenticator& v) {
    Encoder e;
    e.tag(WireTag::Authenticator);
    e.principal(v.client);
    e.u32(v.client_addr.value);
    e.u64(v.timestamp);
    return e.take();
}

Bytes encode(const CredentialGrant& v) {
    Encoder e;
    e.tag(WireTag::CredentialGrant);
    e.secret_key(v.session_key);
    e.u64(v.issued_at);
    e.u64(v.lifetime);
    e.sealed(v.ticket);
    return e.take();
}

Bytes encode(const AsRequest& v) {
    Encoder e;
    e.tag(WireTag::AsRequest);
    e.principal(v.user);
    e.principal(v.tgs);
    e.u64(v.requested_at);
    return e.take();
}

Bytes encode(const AsReply& v) {
    Encoder e;
    e.tag(WireTag::AsReply);
    e.sealed(v.sealed_for_client);
    return e.take();
}

Bytes encode(const TgsRequest& v) {
    Encoder e;
    e.tag(WireTag::TgsRequest);
    e.principal(v.user);
    e.principal(v.service);
    e.sealed(v.tgt);
    e.sealed(v.authenticator);
    return e.take();
}

Bytes encode(const TgsReply& v) {
    Encoder e;
    e.tag(WireTag::TgsReply);
    e.sealed(v.sealed_for_client);
    return e.take();
}

Bytes encode(const ApRequest& v) {
    Encoder e;
    e.tag(WireTag::ApRequest);
    e.principal(v.user);
    e.sealed(v.service_ticket);
    e.sealed(v.authenticator);
    e.u32(v.query.query_id);
    return e.take();
}

Bytes encode(const RawQuery& v) {
    Encoder e;
    e.tag(WireTag::RawQuery);
    e.u32(v.query.query_id);
    return e.take();
}

Bytes encode(const SensorResponse& v) {
    Encoder e;
    e.tag(WireTag::SensorResponse);
    e.u32(static_cast<std::uint32_t>(v.readings.size()));
    for (const Reading& r : v.readings) {
        e.u32(r.node_id);
        e.i64(r.value);
    }
    return e.take();
}

Bytes encode(const ErrorReply& v) {
    Encoder e;
    e.tag(WireTag::ErrorReply);
    e.u8(static_cast<std::uint8_t>(v.kind));
    return e.take();
}

Bytes encode_sealed_blob(const SealedBlob& v) {
    Encoder e;
    e.sealed(v);
    return e.take();
}

Result<WireTag> peek_tag(ByteView bytes) {
    if (bytes.empty()) return ErrorKind::MalformedEncoding;
    return static_cast<WireTag>(bytes[0]);
}

Result<Ticket> decode_ticket(ByteView bytes) {
    Decoder d(bytes);
    if (auto t = d.expect_tag(WireTag::Ticket); !t) return t.error();
    Ticket v;
    if (!d.principal(v.client)) return ErrorKind::MalformedEncoding;
    if (!d.u32(v.client_addr.value)) return ErrorKind::MalformedEncoding;
    if (!d.principal(v.service)) return ErrorKind::MalformedEncoding;
    if (!d.secret_key(v.session_key)) return ErrorKind::MalformedEncoding;
    if (!d.u64(v.issued_at)) return ErrorKind::MalformedEncoding;
    if (!d.u64(v.lifetime)) return ErrorKind::MalformedEncoding;
    if (v.lifetime == 0) return ErrorKind::MalformedEncoding;
    if (!d.done()) return ErrorKind::MalformedEncoding;
    return v;
}

Result<Authenticator> decode_authenticator(ByteView bytes) {
    Decoder d(bytes);
    if (auto t = d.expect_tag(WireTag::Authenticator); !t) return t.error();
    Authenticator v;
    if (!d.principal(v.client)) return ErrorKind::MalformedEncoding;
    if (!d.u32(v.client_addr.value)) return ErrorKind::MalformedEncoding;
    if (!d.u64(v.timestamp)) return ErrorKind::MalformedEncoding;
    if (!d.done()) return ErrorKind::MalformedEncoding;
    return v;
}

Result<CredentialGrant> decode_credential_grant(ByteView bytes) {
    Decoder d(bytes);
    if (auto t = d.expect_tag(WireTag::CredentialGrant); !t) return t.error();
    CredentialGrant v;
    if (!d.secret_key(v.session_key)) return ErrorKind::MalformedEncoding;
    if (!d.u64(v.issued_at)) return ErrorKind::MalformedEncoding;
    if (!d.u64(v.lifetime)) return ErrorKind::MalformedEncoding;
    if (!d.sealed(v.ticket)) return ErrorKind::MalformedEncoding;
    if (!d.done()) return ErrorKind::MalformedEncoding;
    return v;
}

Result<AsRequest> decode_as_request(ByteView bytes) {
    Decoder d(bytes);
    if (auto t = d.expect_tag(WireTag::AsRequest); !t) return t.error();
    AsRequest v;
    if (!d.principal(v.user)) return ErrorKind::MalformedEncoding;
    if (!d.principal(v.tgs)) return ErrorKind::MalformedEncoding;
    if (!d.u64(v.requested_at)) return ErrorKind::MalformedEncoding;
    if (!d.done()) return ErrorKind::MalformedEncoding;
    return v;
}

Result<AsReply> decode_as_reply(ByteView bytes) {
    Decoder d(bytes);
    if (auto t = d.expect_tag(WireTag::AsReply); !t) return t.error();
    AsReply v;
    if (!d.sealed(v.sealed_for_client)) return ErrorKind::MalformedEncoding;
    if (!d.done()) return ErrorKind::MalformedEncoding;
    return v;
}

Result<TgsRequest> decode_tgs_request(ByteView bytes) {
    Decoder d(bytes);
    if (auto t = d.expect_tag(WireTag::TgsRequest); !t) return t.error();
    TgsRequest v;
    if (!d.principal(v.user)) return ErrorKind::MalformedEncoding;
    if (!d.principal(v.service)) return ErrorKind::MalformedEncoding;
    if (!d.sealed(v.tgt)) return ErrorKind::MalformedEncoding;
    if (!d.sealed(v.authenticator)) return ErrorKind::MalformedEncoding;
    if (!d.done()) return ErrorKind::MalformedEncoding;
    return v;
}

Result<TgsReply> decode_tgs_reply(ByteView bytes) {
    Decoder d(bytes);
    if (auto t = d.expect_tag(WireTag::TgsReply); !t) return t.error();
    TgsReply v;
    if (!d.sealed(v.sealed_for_client)) return ErrorKind::MalformedEncoding;
    if (!d.done()) return ErrorKind::MalformedEncoding;
    return v;
}

Result<ApRequest> decode_ap_request(ByteView bytes) {
    Decoder d(bytes);
    if (auto t = d.expect_tag(WireTag::ApRequest); !t) return t.error();
    ApRequest v;
    if (!d.principal(v.user)) return ErrorKind::MalformedEncoding;
    if (!d.sealed(v.service_ticket)) return ErrorKind::MalformedEncoding;
    if (!d.sealed(v.authenticator)) return ErrorKind::MalformedEncoding;
    if (!d.u32(v.query.query_id)) return ErrorKind::MalformedEncoding;
    if (!d.done()) return ErrorKind::MalformedEncoding;
    return v;
}

Result<RawQuery> decode_raw_query(ByteView bytes) {
    Decoder d(bytes);
    if (auto t = d.expect_tag(WireTag::RawQuery); !t) return t.error();
    RawQuery v;
    if (!d.u32(v.query.query_id)) return ErrorKind::MalformedEncoding;
    if (!d.done()) return ErrorKind::MalformedEncoding;
    return v;
}

Result<SensorResponse> decode_sensor_response(ByteView bytes) {
    Decoder d(bytes);
    if (auto t = d.expect_tag(WireTag::SensorResponse); !t) return t.error();
    SensorResponse v;
    std::uint32_t count;
    if (!d.u32(count)) return ErrorKind::MalformedEncoding;
    for (std::uint32_t i = 0; i < count; ++i) {
        Reading r;
        if (!d.u32(r.node_id)) return ErrorKind::MalformedEncoding;
        if (!d.i64(r.value)) return ErrorKind::MalformedEncoding;
        v.readings.push_back(r);
    }
    if (!d.done()) return ErrorKind::MalformedEncoding;
    return v;
}

Result<ErrorReply> decode_error_reply(ByteView bytes) {
    Decoder d(bytes);
    if (auto t = d.expect_tag(WireTag::ErrorReply); !t) return t.error();
    std::uint8_t code;
    if (!d.u8(code)) return ErrorKind::MalformedEncoding;
    ErrorReply v;
    if (!error_kind_from_code(code, v.kind)) return ErrorKind::MalformedEncoding;
    if (!d.done()) return ErrorKind::MalformedEncoding;
    return v;
}

} // namespace kerbwsn
