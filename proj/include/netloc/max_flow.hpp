#pragma once

#include "netloc/flow_network.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace netloc {

struct FlowResult {
    std::int64_t value = 0;
    // Per forward arc slot (same indexing as FlowNetwork::arc_head), 0..cap.
    std::optional<std::vector<std::int32_t>> flow;
    // Forward slot ids of saturated arcs crossing the source-side residual cut.
    std::optional<std::vector<std::int32_t>> min_cut_arcs;
};

struct MaxFlowOptions {
    // Saturate the reported value at this threshold. The reference solver
    // stops augmenting once reached; push-relabel solves exactly and clamps.
    std::optional<std::int64_t> early_exit_at;
    bool want_flow = false;
    bool want_min_cut = false;
};

// Goldberg push-relabel: FIFO active-vertex selection, gap heuristic, global
// relabeling every |V| discharges.
FlowResult max_flow_push_relabel(const FlowNetwork& fn, std::int32_t source, std::int32_t sink,
                                 const MaxFlowOptions& opt = {});

// Independent shortest-augmenting-path (Edmonds-Karp) solver; the reference
// side of the solver cross-check.
FlowResult max_flow_reference(const FlowNetwork& fn, std::int32_t source, std::int32_t sink,
                              const MaxFlowOptions& opt = {});

}  // namespace netloc
