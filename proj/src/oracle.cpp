#include "netloc/oracle.hpp"

#include "netloc/generated.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace netloc {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(NodeId v) { return Mask{1} << v; }

struct MaskGraph {
    std::vector<Mask> rows;  // alive-restricted adjacency
    Mask anchors = 0;        // alive anchors
    Mask candidates = 0;     // alive vertices except the source
};

MaskGraph build_masks(const std::vector<std::vector<NodeId>>& adjacency,
                      const std::vector<Role>& roles, const std::vector<char>& alive,
                      NodeId source) {
    const std::size_t n = roles.size();
    MaskGraph g;
    g.rows.assign(n, 0);
    for (NodeId u = 0; u < n; ++u) {
        if (!alive[u]) continue;
        for (NodeId v : adjacency[u])
            if (alive[v]) g.rows[u] |= bit(v);
    }
    for (NodeId v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        if (roles[v] == Role::Anchor) g.anchors |= bit(v);
        if (v != source) g.candidates |= bit(v);
    }
    return g;
}

// Is any anchor outside `removed` reachable from the source through agent
// vertices outside `removed`? Anchors absorb: they end paths, never relay.
bool anchors_reachable(const MaskGraph& g, const std::vector<Role>& roles, NodeId source,
                       Mask removed) {
    const Mask live_anchors = g.anchors & ~removed;
    if (live_anchors == 0) return false;
    Mask visited = bit(source);
    Mask frontier = bit(source);
    while (frontier) {
        Mask next = 0;
        while (frontier) {
            const int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            const Mask reach = g.rows[u] & ~removed & ~visited;
            if (reach & live_anchors) return true;
            Mask expand = reach;
            while (expand) {
                const int w = std::countr_zero(expand);
                expand &= expand - 1;
                if (roles[w] == Role::Agent) next |= bit(w);
            }
            visited |= reach;
        }
        frontier = next;
    }
    return false;
}

// Enumerate subsets of `candidates` of exactly `want` vertices; returns true
// if any of them disconnects the source from all anchors.
bool exists_disconnecting_set(const MaskGraph& g, const std::vector<Role>& roles, NodeId source,
                              const std::vector<NodeId>& candidates, std::size_t first,
                              int want, Mask chosen) {
    if (want == 0) return !anchors_reachable(g, roles, source, chosen);
    for (std::size_t idx = first; idx + want <= candidates.size(); ++idx) {
        if (exists_disconnecting_set(g, roles, source, candidates, idx + 1, want - 1,
                                     chosen | bit(candidates[idx])))
            return true;
    }
    return false;
}

void check_limits(std::size_t n, int upper, const OracleLimits& limits) {
    if (n > limits.max_nodes)
        throw std::runtime_error("oracle refusal: instance has " + std::to_string(n) +
                                 " nodes, limit is " + std::to_string(limits.max_nodes));
    if (n > 64) throw std::runtime_error("oracle refusal: mask width exceeded");
    if (limits.max_cut_size && upper > *limits.max_cut_size + 1)
        throw std::invalid_argument("oracle: upper exceeds max_cut_size + 1");
}

}  // namespace

int count_disjoint_paths_bruteforce(const std::vector<std::vector<NodeId>>& adjacency,
                                    const std::vector<Role>& roles,
                                    const std::vector<char>& alive, NodeId source_agent,
                                    int upper, const OracleLimits& limits) {
    const std::size_t n = roles.size();
    check_limits(n, upper, limits);
    if (source_agent >= n || roles[source_agent] != Role::Agent)
        throw std::invalid_argument("oracle source must be an agent");
    if (!alive[source_agent]) throw std::invalid_argument("oracle source must be alive");
    if (upper <= 0) return 0;

    const MaskGraph g = build_masks(adjacency, roles, alive, source_agent);
    std::vector<NodeId> candidates;
    for (NodeId v = 0; v < n; ++v)
        if (g.candidates & bit(v)) candidates.push_back(v);

    for (int s = 0; s < upper; ++s)
        if (exists_disconnecting_set(g, roles, source_agent, candidates, 0, s, 0)) return s;
    return upper;
}

int count_disjoint_paths_bruteforce(const std::vector<std::vector<NodeId>>& adjacency,
                                    const std::vector<Role>& roles, NodeId source_agent,
                                    int upper, const OracleLimits& limits) {
    return count_disjoint_paths_bruteforce(adjacency, roles,
                                           std::vector<char>(roles.size(), 1), source_agent,
                                           upper, limits);
}

std::vector<NodeId> oracle_fixpoint(const Network& net, const DetectionConfig& cfg,
                                    const OracleLimits& limits) {
    if (cfg.dimension < 2) throw std::invalid_argument("dimension must be >= 2");
    const std::size_t n = net.node_count();
    if (n > limits.max_nodes)
        throw std::runtime_error("oracle refusal: instance has " + std::to_string(n) +
                                 " nodes, limit is " + std::to_string(limits.max_nodes));

    const auto adjacency = cfg.mode == DetectionMode::Bll
                               ? generated_graph(net, cfg.dimension).neighbors
                               : net.adjacency();
    const int threshold = cfg.threshold();
    std::vector<char> alive(n, 1);

    bool changed = true;
    while (changed) {
        changed = false;
        for (NodeId i = 0; i < n; ++i) {
            if (!alive[i] || net.is_anchor(i)) continue;
            if (count_disjoint_paths_bruteforce(adjacency, net.roles(), alive, i, threshold,
                                                limits) < threshold) {
                alive[i] = 0;
                changed = true;
            }
        }
    }

    std::vector<NodeId> out;
    for (NodeId v = 0; v < n; ++v)
        if (net.is_anchor(v) || alive[v]) out.push_back(v);
    return out;
}

}  // namespace netloc
