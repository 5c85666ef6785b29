#pragma once

#include "netloc/network.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace netloc {

enum class DetectionMode { Bll, Nll };

// Immediate removal zeroes a failed agent's capacities before the sweep
// continues; EndOfPass batches the zeroing until the sweep is done. Both
// reach the same fixpoint (order independence is a tested property).
enum class RemovalSchedule { Immediate, EndOfPass };

struct DetectionConfig {
    DetectionMode mode = DetectionMode::Bll;
    int dimension = 2;  // flow threshold is dimension + 1
    RemovalSchedule schedule = RemovalSchedule::Immediate;
    // Sweep order override (must be a permutation of the agent set); used by
    // the order-independence tests. Default is ascending node id.
    std::optional<std::vector<NodeId>> agent_order;

    int threshold() const { return dimension + 1; }
};

struct LocalizabilityReport {
    std::string mode;  // "bll" | "nll" | "tp"
    int dimension = 2;
    std::vector<std::uint8_t> iota;   // per node, 1 = localizable
    std::vector<NodeId> localizable;  // sorted; all anchors plus agents with iota = 1
    std::vector<NodeId> removed_order;
    int passes = 0;
};

const char* mode_name(DetectionMode mode);

// Iterative max-flow detection: prune agents whose out-vertex pushes fewer
// than dimension+1 units into the virtual sink, until a sweep removes
// nothing. BLL mode routes flow through the generated graph, NLL through the
// raw adjacency.
LocalizabilityReport detect(const Network& net, const DetectionConfig& cfg = {});

// Flow value for one agent against the full, unpruned network. Diagnostic:
// necessary but not sufficient for membership in the localizable set.
// Throws std::invalid_argument if the node is an anchor.
std::int64_t detect_single(const Network& net, const DetectionConfig& cfg, NodeId agent);

}  // namespace netloc
