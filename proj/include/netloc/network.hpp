#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

namespace netloc {

using NodeId = std::uint32_t;

enum class Role : std::uint8_t { Anchor, Agent };

// Undirected network over dense node ids 0..n-1 with an anchor/agent role per
// node. Adjacency is kept both as sorted neighbor lists (iteration) and a
// hashed edge set (O(1) membership for triangle tests). Immutable after
// construction; safe to share read-only across concurrent detection runs.
class Network {
public:
    Network() = default;

    std::size_t node_count() const { return roles_.size(); }
    std::size_t edge_count() const { return edge_set_.size(); }

    Role role(NodeId v) const { return roles_[v]; }
    bool is_anchor(NodeId v) const { return roles_[v] == Role::Anchor; }
    bool is_agent(NodeId v) const { return roles_[v] == Role::Agent; }
    const std::vector<Role>& roles() const { return roles_; }

    const std::vector<NodeId>& neighbors(NodeId v) const { return adj_[v]; }
    const std::vector<std::vector<NodeId>>& adjacency() const { return adj_; }
    std::size_t degree(NodeId v) const { return adj_[v].size(); }
    bool has_edge(NodeId u, NodeId v) const;

    std::size_t anchor_count() const;
    std::vector<NodeId> anchors() const;
    std::vector<NodeId> agents() const;

    // Unique edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

    // Positions are carried only by generators and exports; detection is
    // purely topological and never reads them.
    bool has_positions() const { return !positions_.empty(); }
    int position_dim() const { return pos_dim_; }
    const std::vector<double>& positions() const { return positions_; }  // node-major
    double position(NodeId v, int axis) const { return positions_[v * pos_dim_ + axis]; }
    void set_positions(std::vector<double> node_major_coords, int dim);

    bool operator==(const Network& other) const {
        return roles_ == other.roles_ && adj_ == other.adj_ &&
               positions_ == other.positions_ && pos_dim_ == other.pos_dim_;
    }

    static std::uint64_t edge_key(NodeId u, NodeId v) {
        if (u > v) std::swap(u, v);
        return (static_cast<std::uint64_t>(u) << 32) | v;
    }

private:
    friend Network build_network(const std::vector<std::pair<NodeId, NodeId>>&,
                                 const std::vector<NodeId>&, std::size_t);

    std::vector<Role> roles_;
    std::vector<std::vector<NodeId>> adj_;
    std::unordered_set<std::uint64_t> edge_set_;
    std::vector<double> positions_;
    int pos_dim_ = 0;
};

// Builds a Network with symmetric, deduplicated adjacency.
// Throws std::invalid_argument naming the offending edge on an out-of-range
// id or a self-loop.
Network build_network(const std::vector<std::pair<NodeId, NodeId>>& edges,
                      const std::vector<NodeId>& anchor_ids,
                      std::size_t node_count);

}  // namespace netloc
