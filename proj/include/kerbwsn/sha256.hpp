#pragma once

#include "kerbwsn/bytes.hpp"

#include <array>
#include <cstdint>

namespace kerbwsn {

using Digest = std::array<std::uint8_t, 32>;

// Incremental SHA-256 (FIPS 180-4).
class Sha256 {
public:
    Sha256();

    void update(ByteView data);
    void update(std::string_view text);
    Digest finish();

    static Digest hash(ByteView data);

private:
    void process_block(const std::uint8_t* block);

    std::array<std::uint32_t, 8> state_;
    std::array<std::uint8_t, 64> buffer_;
    std::uint64_t total_bytes_;
    std::size_t buffered_;
};

} // namespace kerbwsn
