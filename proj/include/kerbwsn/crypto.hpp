#pragma once

#include "kerbwsn/bytes.hpp"
#include "kerbwsn/result.hpp"
#include "kerbwsn/rng.hpp"

#include <array>
#include <cstdint>
#include <string_view>

namespace kerbwsn {

struct SecretKey {
    std::uint32_t key_id = 0;
    std::array<std::uint8_t, 32> bytes{};

    bool operator==(const SecretKey&) const = default;
};

/// Output of seal(): nonce + ciphertext + integrity tag. key_id names the
/// sealing key so protocol layers can route to the right registry entry; it
/// is not covered by the tag.
struct SealedBlob {
    std::uint32_t key_id = 0;
    std::array<std::uint8_t, 16> nonce{};
    Bytes ciphertext;
    std::array<std::uint8_t, 16> tag{};

    bool operator==(const SealedBlob&) const = default;
};

// NOT production cryptography. The cipher is a SHA-256 XOR keystream with a
// hash tag: deterministic, dependency-free, and bit-exact across languages,
// which is what the simulator needs. This interface is the swap point for a
// vetted AEAD.

/// Password-based key derivation. Deterministic:
/// SHA-256("kdf-v1" || lp(realm) || lp(name) || lp(password)) where lp is a
/// 4-byte big-endian length prefix. Rejects empty passwords.
Result<SecretKey> derive_key(std::string_view password, std::string_view principal_name,
                             std::string_view realm);

/// Seals plaintext under (key, nonce). Keystream block i is
/// SHA-256(key || nonce || i as 8-byte big-endian); the tag is the first 16
/// bytes of SHA-256(key || nonce || ciphertext). |ciphertext| == |plaintext|.
SealedBlob seal(ByteView plaintext, const SecretKey& key,
                const std::array<std::uint8_t, 16>& nonce);

/// Recovers the plaintext iff the recomputed tag matches. A mismatch means a
/// wrong key or tampering; this check is what defeats forged tickets.
Result<Bytes> open_sealed(const SealedBlob& blob, const SecretKey& key);

/// Fresh 32-byte session key from the caller's generator.
SecretKey random_session_key(Rng& rng, std::uint32_t key_id = 0);

} // namespace kerbwsn
