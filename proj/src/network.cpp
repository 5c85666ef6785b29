#include "netloc/network.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace netloc {

bool Network::has_edge(NodeId u, NodeId v) const {
    if (u == v) return false;
    return edge_set_.count(edge_key(u, v)) != 0;
}

std::size_t Network::anchor_count() const {
    std::size_t m = 0;
    for (Role r : roles_)
        if (r == Role::Anchor) ++m;
    return m;
}

std::vector<NodeId> Network::anchors() const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < roles_.size(); ++v)
        if (roles_[v] == Role::Anchor) out.push_back(v);
    return out;
}

std::vector<NodeId> Network::agents() const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < roles_.size(); ++v)
        if (roles_[v] == Role::Agent) out.push_back(v);
    return out;
}

std::vector<std::pair<NodeId, NodeId>> Network::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_set_.size());
    for (NodeId u = 0; u < adj_.size(); ++u)
        for (NodeId v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
}

void Network::set_positions(std::vector<double> node_major_coords, int dim) {
    if (dim <= 0) throw std::invalid_argument("position dimension must be positive");
    if (node_major_coords.size() != roles_.size() * static_cast<std::size_t>(dim))
        throw std::invalid_argument("position array size does not match node count * dimension");
    positions_ = std::move(node_major_coords);
    pos_dim_ = dim;
}

Network build_network(const std::vector<std::pair<NodeId, NodeId>>& edges,
                      const std::vector<NodeId>& anchor_ids,
                      std::size_t node_count) {
    Network net;
    net.roles_.assign(node_count, Role::Agent);
    net.adj_.resize(node_count);

    for (NodeId a : anchor_ids) {
        if (a >= node_count)
            throw std::invalid_argument("anchor " + std::to_string(a) + ": id out of range (n=" +
                                        std::to_string(node_count) + ")");
        net.roles_[a] = Role::Anchor;
    }

    for (const auto& [u, v] : edges) {
        const std::string name = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
        if (u >= node_count || v >= node_count)
            throw std::invalid_argument("edge " + name + ": id out of range (n=" +
                                        std::to_string(node_count) + ")");
        if (u == v) throw std::invalid_argument("edge " + name + ": self-loop");
        if (net.edge_set_.insert(Network::edge_key(u, v)).second) {
            net.adj_[u].push_back(v);
            net.adj_[v].push_back(u);
        }
    }
    for (auto& nbrs : net.adj_) std::sort(nbrs.begin(), nbrs.end());
    return net;
}

}  // namespace netloc
