#include "netloc/detector.hpp"

#include "netloc/flow_network.hpp"
#include "netloc/generated.hpp"
#include "netloc/max_flow.hpp"

#include <algorithm>
#include <stdexcept>

namespace netloc {

namespace {

std::vector<std::vector<NodeId>> mode_adjacency(const Network& net, const DetectionConfig& cfg) {
    if (cfg.mode == DetectionMode::Bll) return generated_graph(net, cfg.dimension).neighbors;
    return net.adjacency();
}

std::vector<NodeId> sweep_order(const Network& net, const DetectionConfig& cfg) {
    const auto agents = net.agents();
    if (!cfg.agent_order) return agents;
    auto order = *cfg.agent_order;
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != agents)
        throw std::invalid_argument("agent_order must be a permutation of the agent set");
    return order;
}

}  // namespace

const char* mode_name(DetectionMode mode) {
    return mode == DetectionMode::Bll ? "bll" : "nll";
}

LocalizabilityReport detect(const Network& net, const DetectionConfig& cfg) {
    if (cfg.dimension < 2) throw std::invalid_argument("dimension must be >= 2");
    const auto order = sweep_order(net, cfg);
    const int threshold = cfg.threshold();

    FlowNetwork fn = build_flow_network(mode_adjacency(net, cfg), net.roles());

    LocalizabilityReport report;
    report.mode = mode_name(cfg.mode);
    report.dimension = cfg.dimension;
    report.iota.assign(net.node_count(), 0);
    for (NodeId v = 0; v < net.node_count(); ++v)
        if (net.is_anchor(v)) report.iota[v] = 1;

    std::vector<char> alive(net.node_count(), 1);
    MaxFlowOptions opt;
    opt.early_exit_at = threshold;

    bool removed_any = true;
    while (removed_any) {
        removed_any = false;
        ++report.passes;
        std::vector<NodeId> batch;
        for (NodeId i : order) {
            if (!alive[i]) continue;
            const auto flow =
                max_flow_push_relabel(fn, fn.out_vertex(i), fn.sink_index, opt).value;
            if (flow >= threshold) {
                report.iota[i] = 1;
            } else {
                report.iota[i] = 0;
                alive[i] = 0;
                report.removed_order.push_back(i);
                removed_any = true;
                if (cfg.schedule == RemovalSchedule::Immediate)
                    remove_agent(fn, i);
                else
                    batch.push_back(i);
            }
        }
        for (NodeId i : batch) remove_agent(fn, i);
    }

    for (NodeId v = 0; v < net.node_count(); ++v)
        if (report.iota[v]) report.localizable.push_back(v);
    return report;
}

std::int64_t detect_single(const Network& net, const DetectionConfig& cfg, NodeId agent) {
    if (cfg.dimension < 2) throw std::invalid_argument("dimension must be >= 2");
    if (agent >= net.node_count()) throw std::invalid_argument("node id out of range");
    if (net.is_anchor(agent))
        throw std::invalid_argument("detect_single: node " + std::to_string(agent) +
                                    " is an anchor");
    FlowNetwork fn = build_flow_network(mode_adjacency(net, cfg), net.roles());
    return max_flow_push_relabel(fn, fn.out_vertex(agent), fn.sink_index).value;
}

}  // namespace netloc
