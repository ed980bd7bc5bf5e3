#include "kerbwsn/rng.hpp"

namespace kerbwsn {

namespace {

// splitmix64 finalizer; also used to whiten seeds.
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : s) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), state_(mix64(seed ^ 0x5851f42d4c957f2dULL)) {}

std::uint64_t Rng::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) return 0;
    return next_u64() % n;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(below(span));
}

std::array<std::uint8_t, 32> Rng::next_key_bytes() {
    std::array<std::uint8_t, 32> out{};
    for (int word = 0; word < 4; ++word) {
        std::uint64_t v = next_u64();
        for (int i = 0; i < 8; ++i) {
            out[8 * word + i] = static_cast<std::uint8_t>(v >> (56 - 8 * i));
        }
    }
    return out;
}

std::array<std::uint8_t, 16> Rng::next_nonce() {
    std::array<std::uint8_t, 16> out{};
    for (int word = 0; word < 2; ++word) {
        std::uint64_t v = next_u64();
        for (int i = 0; i < 8; ++i) {
            out[8 * word + i] = static_cast<std::uint8_t>(v >> (56 - 8 * i));
        }
    }
    return out;
}

Rng Rng::split(std::string_view label) const {
    return Rng(mix64(seed_ ^ fnv1a64(label)));
}

} // namespace kerbwsn
