#pragma once

#include "netloc/network.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

// Shared builders and brute-force oracles for the test suites. The oracles
// here are deliberately dumb and independent of the library's implementation
// paths.
namespace testutil {

using netloc::Network;
using netloc::NodeId;
using netloc::Role;

inline Network complete_graph(std::size_t n, const std::vector<NodeId>& anchors) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return netloc::build_network(edges, anchors, n);
}

inline Network path_graph(std::size_t n, const std::vector<NodeId>& anchors) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return netloc::build_network(edges, anchors, n);
}

// Exhaustive subset enumeration: does any T of size `want`, drawn from
// candidates[first..], make T ∪ fixed pairwise adjacent?
inline bool clique_completion_exists(const Network& net, const std::vector<NodeId>& candidates,
                                     std::size_t first, int want, std::vector<NodeId>& chosen,
                                     NodeId j) {
    if (want == 0) {
        for (std::size_t a = 0; a < chosen.size(); ++a) {
            if (!net.has_edge(chosen[a], j)) return false;
            for (std::size_t b = a + 1; b < chosen.size(); ++b)
                if (!net.has_edge(chosen[a], chosen[b])) return false;
        }
        return true;
    }
    for (std::size_t idx = first; idx + static_cast<std::size_t>(want) <= candidates.size();
         ++idx) {
        chosen.push_back(candidates[idx]);
        if (clique_completion_exists(net, candidates, idx + 1, want - 1, chosen, j)) {
            chosen.pop_back();
            return true;
        }
        chosen.pop_back();
    }
    return false;
}

// Direct reading of the barycentric-neighbor rule: j qualifies when some d
// further neighbors of i, together with j, are pairwise adjacent.
inline std::vector<NodeId> barycentric_oracle(const Network& net, NodeId i, int d) {
    std::vector<NodeId> out;
    for (NodeId j : net.neighbors(i)) {
        std::vector<NodeId> others;
        for (NodeId w : net.neighbors(i))
            if (w != j) others.push_back(w);
        std::vector<NodeId> chosen;
        if (clique_completion_exists(net, others, 0, d, chosen, j)) out.push_back(j);
    }
    return out;
}

// Exhaustive vertex-disjoint path-set search (exponential; keep n <= 8).
// Counts the most paths from `src` to distinct anchors sharing no vertex but
// `src`, by trying every simple path for the next slot and recursing.
namespace detail {

inline int pathset_search(const std::vector<std::vector<NodeId>>& adj,
                          const std::vector<Role>& roles, NodeId src, std::uint64_t used);

inline int pathset_extend(const std::vector<std::vector<NodeId>>& adj,
                          const std::vector<Role>& roles, NodeId src, std::uint64_t used,
                          NodeId at, std::uint64_t path) {
    int best = 0;
    for (NodeId w : adj[at]) {
        const std::uint64_t wbit = std::uint64_t{1} << w;
        if (w == src || ((used | path) & wbit)) continue;
        if (roles[w] == Role::Anchor) {
            best = std::max(best, 1 + pathset_search(adj, roles, src, used | path | wbit));
        } else {
            best = std::max(best, pathset_extend(adj, roles, src, used, w, path | wbit));
        }
    }
    return best;
}

inline int pathset_search(const std::vector<std::vector<NodeId>>& adj,
                          const std::vector<Role>& roles, NodeId src, std::uint64_t used) {
    return pathset_extend(adj, roles, src, used, src, 0);
}

}  // namespace detail

inline int disjoint_paths_pathset(const std::vector<std::vector<NodeId>>& adj,
                                  const std::vector<Role>& roles, NodeId src) {
    return detail::pathset_search(adj, roles, src, 0);
}

}  // namespace testutil
