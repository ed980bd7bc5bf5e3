#pragma once

#include "kerbwsn/protocol.hpp"

#include <cstdint>
#include <deque>

namespace kerbwsn {

/// Bounded memory of recently accepted (client, address, timestamp) triples.
/// One implementation, instantiated at the KDC and at each base station.
///
/// The context byte separates exchange types sharing one cache (AS, TGS, AP),
/// so a login and a ticket request in the same tick do not collide.
///
/// Eviction of entries older than the skew window cannot cause a missed
/// replay: the caller's freshness check rejects such timestamps before the
/// cache is consulted.
class ReplayCache {
public:
    enum class Context : std::uint8_t { As = 0, Tgs = 1, Ap = 2 };

    explicit ReplayCache(std::size_t capacity = 1024) : capacity_(capacity) {}

    bool seen(Context ctx, const Principal& client, NetAddress addr, Tick timestamp) const {
        for (const Entry& e : entries_) {
            if (e.ctx == ctx && e.timestamp == timestamp && e.addr == addr &&
                e.client == client) {
                return true;
            }
        }
        return false;
    }

    void record(Context ctx, const Principal& client, NetAddress addr, Tick timestamp,
                Tick now, Tick skew_window) {
        Tick horizon = now >= skew_window ? now - skew_window : 0;
        while (!entries_.empty() && entries_.front().timestamp < horizon) {
            entries_.pop_front();
        }
        while (entries_.size() >= capacity_) {
            entries_.pop_front();
        }
        entries_.push_back(Entry{ctx, client, addr, timestamp});
    }

    std::size_t size() const { return entries_.size(); }

private:
    struct Entry {
        Context ctx;
        Principal client;
        NetAddress addr;
        Tick timestamp;
    };

    std::size_t capacity_;
    std::deque<Entry> entries_;
};

} // namespace kerbwsn
