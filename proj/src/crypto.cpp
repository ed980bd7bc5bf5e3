#include "kerbwsn/crypto.hpp"

#include "kerbwsn/sha256.hpp"

namespace kerbwsn {

namespace {

void update_len_prefixed(Sha256& h, std::string_view s) {
    std::uint8_t len_be[4];
    std::uint32_t n = static_cast<std::uint32_t>(s.size());
    for (int i = 0; i < 4; ++i) len_be[i] = static_cast<std::uint8_t>(n >> (24 - 8 * i));
    h.update(ByteView(len_be, 4));
    h.update(s);
}

Digest keystream_block(const SecretKey& key, const std::array<std::uint8_t, 16>& nonce,
                       std::uint64_t counter) {
    Sha256 h;
    h.update(ByteView(key.bytes.data(), key.bytes.size()));
    h.update(ByteView(nonce.data(), nonce.size()));
    std::uint8_t counter_be[8];
    for (int i = 0; i < 8; ++i) counter_be[i] = static_cast<std::uint8_t>(counter >> (56 - 8 * i));
    h.update(ByteView(counter_be, 8));
    return h.finish();
}

std::array<std::uint8_t, 16> compute_tag(const SecretKey& key,
                                         const std::array<std::uint8_t, 16>& nonce,
                                         ByteView ciphertext) {
    Sha256 h;
    h.update(ByteView(key.bytes.data(), key.bytes.size()));
    h.update(ByteView(nonce.data(), nonce.size()));
    h.update(ciphertext);
    Digest d = h.finish();
    std::array<std::uint8_t, 16> tag{};
    for (int i = 0; i < 16; ++i) tag[i] = d[i];
    return tag;
}

} // namespace

Result<SecretKey> derive_key(std::string_view password, std::string_view principal_name,
                             std::string_view realm) {
    if (password.empty()) return ErrorKind::InvalidInput;
    Sha256 h;
    h.update(std::string_view("kdf-v1"));
    update_len_prefixed(h, realm);
    update_len_prefixed(h, principal_name);
    update_len_prefixed(h, password);
    SecretKey key;
    key.bytes = h.finish();
    return key;
}

SealedBlob seal(ByteView plaintext, const SecretKey& key,
                const std::array<std::uint8_t, 16>& nonce) {
    SealedBlob blob;
    blob.key_id = key.key_id;
    blob.nonce = nonce;
    blob.ciphertext.resize(plaintext.size());
    std::uint64_t counter = 0;
    std::size_t pos = 0;
    while (pos < plaintext.size()) {
        Digest block = keystream_block(key, nonce, counter++);
        std::size_t take = std::min<std::size_t>(32, plaintext.size() - pos);
        for (std::size_t i = 0; i < take; ++i) {
            blob.ciphertext[pos + i] = plaintext[pos + i] ^ block[i];
        }
        pos += take;
    }
    blob.tag = compute_tag(key, nonce, blob.ciphertext);
    return blob;
}

Result<Bytes> open_sealed(const SealedBlob& blob, const SecretKey& key) {
    if (compute_tag(key, blob.nonce, blob.ciphertext) != blob.tag) {
        return ErrorKind::IntegrityFailure;
    }
    Bytes plaintext(blob.ciphertext.size());
    std::uint64_t counter = 0;
    std::size_t pos = 0;
    while (pos < blob.ciphertext.size()) {
        Digest block = keystream_block(key, blob.nonce, counter++);
        std::size_t take = std::min<std::size_t>(32, blob.ciphertext.size() - pos);
        for (std::size_t i = 0; i < take; ++i) {
            plaintext[pos + i] = blob.ciphertext[pos + i] ^ block[i];
        }
        pos += take;
    }
    return plaintext;
}

SecretKey random_session_key(Rng& rng, std::uint32_t key_id) {
    SecretKey key;
    key.key_id = key_id;
    key.bytes = rng.next_key_bytes();
    return key;
}

} // namespace kerbwsn
