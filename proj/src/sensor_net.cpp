#include "kerbwsn/sensor_net.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

namespace kerbwsn {

namespace {

bool within(std::int64_t dx, std::int64_t dy, std::int64_t reach) {
    return dx * dx + dy * dy <= reach * reach;
}

// BFS depths from the base station; UINT32_MAX marks unreachable. Neighbor
// expansion in ascending id order fixes routes and byte counts.
std::vector<std::uint32_t> hop_depths(const Topology& topo,
                                      const std::vector<std::vector<std::uint32_t>>& adj) {
    constexpr std::uint32_t unreachable = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> depth(topo.nodes.size(), unreachable);
    std::deque<std::uint32_t> frontier;
    for (const SensorNode& node : topo.nodes) {
        if (base_linked(topo, node)) {
            depth[node.id] = 1;
            frontier.push_back(node.id);
        }
    }
    while (!frontier.empty()) {
        std::uint32_t current = frontier.front();
        frontier.pop_front();
        for (std::uint32_t next : adj[current]) {
            if (depth[next] == unreachable) {
                depth[next] = depth[current] + 1;
                frontier.push_back(next);
            }
        }
    }
    return depth;
}

} // namespace

Topology build_topology(std::uint32_t n_nodes, std::int64_t area_units,
                        std::int64_t range_units, Rng& rng) {
    Topology topo;
    std::int64_t area_milli = area_units * kMilli;
    topo.base_x_milli = area_milli / 2;
    topo.base_y_milli = area_milli / 2;
    topo.base_range_milli = range_units * kMilli;
    topo.nodes.reserve(n_nodes);
    for (std::uint32_t i = 0; i < n_nodes; ++i) {
        SensorNode node;
        node.id = i;
        node.x_milli = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(area_milli) + 1));
        node.y_milli = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(area_milli) + 1));
        node.range_milli = range_units * kMilli;
        node.reading = rng.range(0, 1000);
        topo.nodes.push_back(node);
    }
    return topo;
}

bool nodes_linked(const SensorNode& a, const SensorNode& b) {
    return within(a.x_milli - b.x_milli, a.y_milli - b.y_milli,
                  std::min(a.range_milli, b.range_milli));
}

bool base_linked(const Topology& topo, const SensorNode& node) {
    return within(topo.base_x_milli - node.x_milli, topo.base_y_milli - node.y_milli,
                  std::min(topo.base_range_milli, node.range_milli));
}

std::vector<std::vector<std::uint32_t>> adjacency(const Topology& topo) {
    std::vector<std::vector<std::uint32_t>> adj(topo.nodes.size());
    for (std::size_t i = 0; i < topo.nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < topo.nodes.size(); ++j) {
            if (nodes_linked(topo.nodes[i], topo.nodes[j])) {
                adj[i].push_back(static_cast<std::uint32_t>(j));
                adj[j].push_back(static_cast<std::uint32_t>(i));
            }
        }
    }
    return adj;
}

CollectionRound many_to_one_round(const Topology& topo, std::uint32_t reading_packet_bytes) {
    constexpr std::uint32_t unreachable = std::numeric_limits<std::uint32_t>::max();
    CollectionRound round;
    auto adj = adjacency(topo);
    auto depth = hop_depths(topo, adj);
    for (const SensorNode& node : topo.nodes) {
        if (depth[node.id] == unreachable) {
            round.disconnected.push_back(node.id);
            continue;
        }
        round.delivered.push_back(Reading{node.id, node.reading});
        round.hop_counts.push_back(depth[node.id]);
        round.total_bytes += static_cast<std::uint64_t>(depth[node.id]) * reading_packet_bytes;
    }
    return round;
}

FloodResult one_to_many_flood(const Topology& topo, std::uint32_t query_packet_bytes) {
    constexpr std::uint32_t unreachable = std::numeric_limits<std::uint32_t>::max();
    FloodResult flood;
    auto adj = adjacency(topo);
    auto depth = hop_depths(topo, adj);
    for (const SensorNode& node : topo.nodes) {
        if (depth[node.id] != unreachable) flood.reached.push_back(node.id);
    }
    flood.retransmissions = flood.reached.size();
    flood.total_bytes = (1 + flood.retransmissions) * query_packet_bytes;
    return flood;
}

Result<std::vector<std::uint32_t>> local_broadcast(const Topology& topo, std::uint32_t node_id) {
    if (node_id >= topo.nodes.size()) return ErrorKind::UnknownNode;
    std::vector<std::uint32_t> neighbors;
    for (const SensorNode& other : topo.nodes) {
        if (other.id != node_id && nodes_linked(topo.nodes[node_id], other)) {
            neighbors.push_back(other.id);
        }
    }
    return neighbors;
}

std::string dump_topology(const Topology& topo) {
    std::ostringstream out;
    out << "base " << topo.base_x_milli << ' ' << topo.base_y_milli << ' '
        << topo.base_range_milli << '\n';
    for (const SensorNode& node : topo.nodes) {
        out << "node " << node.id << ' ' << node.x_milli << ' ' << node.y_milli << ' '
            << node.range_milli << ' ' << node.reading << '\n';
    }
    return out.str();
}

Result<Topology> load_topology(std::string_view text) {
    Topology topo;
    std::istringstream in{std::string(text)};
    std::string line;
    bool saw_base = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string kind;
        fields >> kind;
        if (kind == "base") {
            if (!(fields >> topo.base_x_milli >> topo.base_y_milli >> topo.base_range_milli)) {
                return ErrorKind::MalformedEncoding;
            }
            saw_base = true;
        } else if (kind == "node") {
            SensorNode node;
            if (!(fields >> node.id >> node.x_milli >> node.y_milli >> node.range_milli >>
                  node.reading)) {
                return ErrorKind::MalformedEncoding;
            }
            if (node.id != topo.nodes.size()) return ErrorKind::MalformedEncoding;
            topo.nodes.push_back(node);
        } else {
            return ErrorKind::MalformedEncoding;
        }
        std::string trailing;
        if (fields >> trailing) return ErrorKind::MalformedEncoding;
    }
    if (!saw_base) return ErrorKind::MalformedEncoding;
    return topo;
}

} // namespace kerbwsn
