#pragma once

#include "netloc/detector.hpp"
#include "netloc/network.hpp"

#include <optional>
#include <vector>

namespace netloc {

// Desk-scale guardrails for the brute-force routines.
struct OracleLimits {
    std::size_t max_nodes = 14;
    // Largest vertex-cut cardinality enumerated; unset means upper - 1 (cost
    // is C(n, max_cut_size) connectivity probes).
    std::optional<int> max_cut_size;
};

// Maximum number of paths from an agent to distinct anchors sharing no vertex
// except the source, clamped at `upper`. Computed by Menger duality: the
// answer is >= t exactly when no vertex set of size < t (anchors removable;
// a removed anchor cannot serve as an endpoint) disconnects the source from
// every anchor. Throws std::runtime_error when the instance exceeds
// limits.max_nodes.
int count_disjoint_paths_bruteforce(const std::vector<std::vector<NodeId>>& adjacency,
                                    const std::vector<Role>& roles, NodeId source_agent,
                                    int upper, const OracleLimits& limits = {});

// Same, restricted to the subgraph induced by `alive` (the source must be
// alive; dead vertices carry no paths and cannot join cuts).
int count_disjoint_paths_bruteforce(const std::vector<std::vector<NodeId>>& adjacency,
                                    const std::vector<Role>& roles,
                                    const std::vector<char>& alive, NodeId source_agent,
                                    int upper, const OracleLimits& limits = {});

// Reference fixpoint: repeatedly delete any agent with fewer than
// dimension+1 disjoint paths on the current induced subgraph (BLL mode counts
// through the generated graph of the full network, mirroring the detector).
// Returns survivors plus anchors, sorted.
std::vector<NodeId> oracle_fixpoint(const Network& net, const DetectionConfig& cfg,
                                    const OracleLimits& limits = {});

}  // namespace netloc
