#pragma once

#include "kerbwsn/protocol.hpp"
#include "kerbwsn/result.hpp"
#include "kerbwsn/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kerbwsn {

// All distances are integer milli-units: comparisons are exact (squared
// distances in 64-bit) and topology fixtures round-trip byte-identically.
constexpr std::int64_t kMilli = 1000;

constexpr std::uint32_t kDefaultReadingPacketBytes = 32;
constexpr std::uint32_t kDefaultQueryPacketBytes = 16;

struct SensorNode {
    std::uint32_t id = 0;
    std::int64_t x_milli = 0;
    std::int64_t y_milli = 0;
    std::int64_t range_milli = 0;
    std::int64_t reading = 0;

    bool operator==(const SensorNode&) const = default;
};

/// Fixed node placement plus the base station position. Adjacency uses the
/// symmetric unit-disk rule: i~j iff dist(i,j) <= min(range_i, range_j).
/// Node positions never change after build.
struct Topology {
    std::vector<SensorNode> nodes;
    std::int64_t base_x_milli = 0;
    std::int64_t base_y_milli = 0;
    std::int64_t base_range_milli = 0;

    bool operator==(const Topology&) const = default;
};

/// Uniform random placement over an area x area square (units), base station
/// at the center, all radios sharing `range` (units). Deterministic per rng
/// stream.
Topology build_topology(std::uint32_t n_nodes, std::int64_t area_units,
                        std::int64_t range_units, Rng& rng);

bool nodes_linked(const SensorNode& a, const SensorNode& b);
bool base_linked(const Topology& topo, const SensorNode& node);

// Neighbor ids of each node, ascending; index == node id.
std::vector<std::vector<std::uint32_t>> adjacency(const Topology& topo);

struct CollectionRound {
    std::vector<Reading> delivered;           // ascending node id
    std::vector<std::uint32_t> hop_counts;    // parallel to delivered
    std::vector<std::uint32_t> disconnected;  // ascending node id
    std::uint64_t total_bytes = 0;
};

/// Many-to-one traffic: every node with a multi-hop path to the base
/// contributes its reading along a shortest hop path (ties broken toward the
/// lowest node id); each traversed hop costs one reading packet.
/// Disconnection is data, not an error.
CollectionRound many_to_one_round(const Topology& topo,
                                  std::uint32_t reading_packet_bytes = kDefaultReadingPacketBytes);

struct FloodResult {
    std::vector<std::uint32_t> reached;  // ascending node id
    std::uint64_t retransmissions = 0;   // one per reached node
    std::uint64_t total_bytes = 0;       // base transmit + retransmissions
};

/// One-to-many traffic: the base floods a query; duplicate suppression means
/// each reached node forwards exactly once.
FloodResult one_to_many_flood(const Topology& topo,
                              std::uint32_t query_packet_bytes = kDefaultQueryPacketBytes);

/// Local traffic: the neighbor set of one node.
Result<std::vector<std::uint32_t>> local_broadcast(const Topology& topo, std::uint32_t node_id);

// Fixture format: "base <x> <y> <range>" then one "node <id> <x> <y> <range>
// <reading>" line per node, all values integer milli-units.
std::string dump_topology(const Topology& topo);
Result<Topology> load_topology(std::string_view text);

} // namespace kerbwsn
