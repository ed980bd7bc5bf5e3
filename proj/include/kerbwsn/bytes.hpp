#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kerbwsn {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

std::string to_hex(ByteView data);

// Parses an even-length hex string; returns false on any non-hex character.
bool from_hex(std::string_view hex, Bytes& out);

// True if `needle` occurs as a contiguous byte substring of `haystack`.
bool contains_bytes(ByteView haystack, ByteView needle);

} // namespace kerbwsn
