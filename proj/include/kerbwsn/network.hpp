#pragma once

#include "kerbwsn/base_station.hpp"
#include "kerbwsn/kdc.hpp"
#include "kerbwsn/protocol.hpp"

#include <map>
#include <string>
#include <vector>

namespace kerbwsn {

/// Record of every byte string that crossed the simulated network, both
/// directions. Attacks replay entries verbatim; invariant tests scan them
/// for secrets that must never appear.
struct WireLog {
    struct Entry {
        NetAddress source;
        std::string destination;
        Bytes bytes;
    };

    std::vector<Entry> entries;

    void log(NetAddress source, std::string destination, Bytes bytes) {
        entries.push_back(Entry{source, std::move(destination), std::move(bytes)});
    }
};

/// In-process delivery fabric: routes encoded requests to KDCs and base
/// stations and logs all traffic. There is no OS networking anywhere; this
/// is the only path messages take.
class Network {
public:
    void attach_kdc(Kdc* kdc) { kdcs_[kdc->realm()] = kdc; }
    void attach_station(BaseStation* station) { stations_[station->service()] = station; }

    Kdc* kdc_for(const std::string& realm) {
        auto it = kdcs_.find(realm);
        return it == kdcs_.end() ? nullptr : it->second;
    }

    BaseStation* station_for(const Principal& service) {
        auto it = stations_.find(service);
        return it == stations_.end() ? nullptr : it->second;
    }

    // Both return the encoded reply (ErrorReply bytes on failure), logging
    // request and reply.
    Bytes send_to_kdc(const std::string& realm, ByteView request, NetAddress source, Tick now,
                      Rng& rng);
    Bytes send_to_station(const Principal& service, ByteView request, NetAddress source,
                          Tick now);

    WireLog& wire_log() { return log_; }
    const WireLog& wire_log() const { return log_; }

    // KDCs answer from a well-known address on the simulated net.
    static constexpr NetAddress kKdcAddress{1};

private:
    std::map<std::string, Kdc*> kdcs_;
    std::map<Principal, BaseStation*> stations_;
    WireLog log_;
};

} // namespace kerbwsn
