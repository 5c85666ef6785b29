#pragma once

#include "netloc/network.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace netloc {

// Directed graph with paired arc slots: slot 2k is a forward arc, slot 2k+1
// its reverse (capacity 0), so the reverse of arc a is a ^ 1 and the tail of
// arc a is head(a ^ 1).
//
// When built by build_flow_network the vertex layout is the split-node
// transform over n agents and m anchors:
//   agent with dense rank k  -> in = 2k, out = 2k + 1
//   anchor with dense rank t -> 2n + t
//   virtual sink             -> 2n + m
// Dense ranks follow ascending node id. Generic digraphs (tests, solver
// cross-checks) leave the rank maps empty.
struct FlowNetwork {
    static constexpr std::int32_t kNone = -1;

    std::int32_t vertex_count = 0;
    std::vector<std::int32_t> arc_head;               // per slot
    std::vector<std::int32_t> arc_cap;                // base capacities; reverse slots 0
    std::vector<std::vector<std::int32_t>> out_arcs;  // vertex -> slot ids

    std::vector<std::int32_t> agent_rank;    // node -> dense agent index or kNone
    std::vector<std::int32_t> anchor_rank;   // node -> dense anchor index or kNone
    std::int32_t agent_count = 0;
    std::int32_t anchor_count = 0;
    std::int32_t sink_index = kNone;

    FlowNetwork() = default;
    explicit FlowNetwork(std::int32_t vertices) : vertex_count(vertices), out_arcs(vertices) {}

    // Adds forward + reverse slot pair; returns the forward slot id.
    std::int32_t add_arc(std::int32_t from, std::int32_t to, std::int32_t capacity);

    std::int32_t arc_tail(std::int32_t arc) const { return arc_head[arc ^ 1]; }
    std::size_t forward_arc_count() const { return arc_head.size() / 2; }

    bool has_split_index() const { return sink_index != kNone; }
    bool is_agent_node(NodeId v) const { return agent_rank[v] != kNone; }
    std::int32_t in_vertex(NodeId agent) const { return 2 * agent_rank[agent]; }
    std::int32_t out_vertex(NodeId agent) const { return 2 * agent_rank[agent] + 1; }
    std::int32_t anchor_vertex(NodeId anchor) const {
        return 2 * agent_count + anchor_rank[anchor];
    }
};

// The split-node unit-capacity transform: one internal arc per agent, an arc
// from an agent's out-vertex to each neighbor (anchor vertex, or the
// neighbor's in-vertex), and one arc per anchor into the sink.
FlowNetwork build_flow_network(const std::vector<std::vector<NodeId>>& adjacency,
                               const std::vector<Role>& roles);

// Zeroes every capacity touching the agent's split pair, matching row/column
// zeroing of the capacity matrix. Idempotent. Throws std::invalid_argument if
// the node is an anchor (anchors are never removed).
void remove_agent(FlowNetwork& fn, NodeId agent);

// Debug view of the transformed graph (vertex names a{id}_in, a{id}_out,
// b{id}, omega; arcs with zeroed capacity are drawn dashed).
void write_dot(const FlowNetwork& fn, std::ostream& os);

}  // namespace netloc
