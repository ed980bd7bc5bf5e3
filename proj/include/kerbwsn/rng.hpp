#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace kerbwsn {

/// Deterministic generator behind all simulator randomness. Every stream
/// descends from the scenario seed; split() derives an independent child
/// stream from a label without consuming parent state, so the draw order of
/// one subsystem cannot perturb another.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform in [0, n); n == 0 returns 0.
    std::uint64_t below(std::uint64_t n);

    // Uniform in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi);

    std::array<std::uint8_t, 32> next_key_bytes();
    std::array<std::uint8_t, 16> next_nonce();

    Rng split(std::string_view label) const;

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

} // namespace kerbwsn
