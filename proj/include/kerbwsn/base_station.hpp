#pragma once

#include "kerbwsn/crypto.hpp"
#include "kerbwsn/energy.hpp"
#include "kerbwsn/protocol.hpp"
#include "kerbwsn/replay_cache.hpp"
#include "kerbwsn/sensor_net.hpp"

#include <cstdint>

namespace kerbwsn {

/// The WSN gateway. With the security layer enabled, no sensor data leaves
/// without a verified ticket and authenticator; a rejected request costs
/// only the verification work, never a response transmission. With the
/// layer disabled, any raw query is served — the baseline vulnerability.
class BaseStation {
public:
    BaseStation(Principal service, NetAddress addr, SecretKey service_key, bool auth_enabled,
                Tick max_clock_skew, EnergyParams energy_params, const Topology* net,
                std::uint32_t reading_packet_bytes = kDefaultReadingPacketBytes);

    const Principal& service() const { return service_; }
    NetAddress addr() const { return addr_; }
    bool auth_enabled() const { return auth_enabled_; }

    Result<SensorResponse> handle_request(const ApRequest& req, NetAddress source_addr,
                                          Tick now);
    Result<SensorResponse> handle_request(const RawQuery& req, NetAddress source_addr,
                                          Tick now);

    // Byte-level entry point for the simulated network; accepts ApRequest or
    // RawQuery encodings and replies with SensorResponse or ErrorReply bytes.
    Bytes handle_wire(ByteView request, NetAddress source_addr, Tick now);

    /// Runs one collection round and packages the delivered readings.
    /// Callers are already authorized (or the layer is off). Charges the
    /// response transmission.
    Result<SensorResponse> serve_query(const SensorQuery& query, Tick now);

    std::uint64_t response_bytes(const SensorResponse& response) const {
        return static_cast<std::uint64_t>(reading_packet_bytes_) * response.readings.size();
    }

    const EnergyState& energy() const { return energy_; }
    EnergyState& energy() { return energy_; }

private:
    Principal service_;
    NetAddress addr_;
    SecretKey service_key_;
    bool auth_enabled_;
    Tick max_clock_skew_;
    EnergyParams energy_params_;
    ReplayCache replay_cache_;
    EnergyState energy_;
    const Topology* net_;
    std::uint32_t reading_packet_bytes_;

    // Full credential check; on success returns the verified ticket.
    Result<Ticket> verify(const ApRequest& req, NetAddress source_addr, Tick now);
};

} // namespace kerbwsn
