#include "netloc/flow_network.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace netloc {

std::int32_t FlowNetwork::add_arc(std::int32_t from, std::int32_t to, std::int32_t capacity) {
    if (from < 0 || from >= vertex_count || to < 0 || to >= vertex_count)
        throw std::invalid_argument("arc endpoint out of range");
    const auto id = static_cast<std::int32_t>(arc_head.size());
    arc_head.push_back(to);
    arc_cap.push_back(capacity);
    out_arcs[from].push_back(id);
    arc_head.push_back(from);
    arc_cap.push_back(0);
    out_arcs[to].push_back(id + 1);
    return id;
}

FlowNetwork build_flow_network(const std::vector<std::vector<NodeId>>& adjacency,
                               const std::vector<Role>& roles) {
    if (adjacency.size() != roles.size())
        throw std::invalid_argument("adjacency and roles size mismatch");
    const auto n_nodes = static_cast<NodeId>(roles.size());

    std::vector<std::int32_t> agent_rank(n_nodes, FlowNetwork::kNone);
    std::vector<std::int32_t> anchor_rank(n_nodes, FlowNetwork::kNone);
    std::int32_t n = 0, m = 0;
    for (NodeId v = 0; v < n_nodes; ++v) {
        if (roles[v] == Role::Agent)
            agent_rank[v] = n++;
        else
            anchor_rank[v] = m++;
    }

    FlowNetwork fn(2 * n + m + 1);
    fn.agent_rank = std::move(agent_rank);
    fn.anchor_rank = std::move(anchor_rank);
    fn.agent_count = n;
    fn.anchor_count = m;
    fn.sink_index = 2 * n + m;

    for (NodeId v = 0; v < n_nodes; ++v)
        if (roles[v] == Role::Agent) fn.add_arc(fn.in_vertex(v), fn.out_vertex(v), 1);
    for (NodeId v = 0; v < n_nodes; ++v) {
        if (roles[v] != Role::Agent) continue;
        for (NodeId j : adjacency[v]) {
            if (roles[j] == Role::Anchor)
                fn.add_arc(fn.out_vertex(v), fn.anchor_vertex(j), 1);
            else
                fn.add_arc(fn.out_vertex(v), fn.in_vertex(j), 1);
        }
    }
    for (NodeId v = 0; v < n_nodes; ++v)
        if (roles[v] == Role::Anchor) fn.add_arc(fn.anchor_vertex(v), fn.sink_index, 1);
    return fn;
}

void remove_agent(FlowNetwork& fn, NodeId agent) {
    if (agent >= fn.agent_rank.size())
        throw std::invalid_argument("node id out of range");
    if (!fn.is_agent_node(agent))
        throw std::invalid_argument("node " + std::to_string(agent) +
                                    " is an anchor; anchors are never removed");
    for (std::int32_t v : {fn.in_vertex(agent), fn.out_vertex(agent)}) {
        for (std::int32_t a : fn.out_arcs[v]) {
            fn.arc_cap[a] = 0;
            fn.arc_cap[a ^ 1] = 0;
        }
    }
}

void write_dot(const FlowNetwork& fn, std::ostream& os) {
    const auto n_nodes = static_cast<NodeId>(fn.agent_rank.size());
    std::vector<std::string> names(fn.vertex_count);
    for (NodeId v = 0; v < n_nodes; ++v) {
        if (fn.is_agent_node(v)) {
            names[fn.in_vertex(v)] = "a" + std::to_string(v) + "_in";
            names[fn.out_vertex(v)] = "a" + std::to_string(v) + "_out";
        } else {
            names[fn.anchor_vertex(v)] = "b" + std::to_string(v);
        }
    }
    if (fn.sink_index != FlowNetwork::kNone) names[fn.sink_index] = "omega";
    for (std::int32_t v = 0; v < fn.vertex_count; ++v)
        if (names[v].empty()) names[v] = "v" + std::to_string(v);

    os << "digraph gprime {\n";
    os << "  rankdir=LR;\n";
    for (std::int32_t v = 0; v < fn.vertex_count; ++v) os << "  " << names[v] << ";\n";
    for (std::size_t a = 0; a < fn.arc_head.size(); a += 2) {
        os << "  " << names[fn.arc_tail(static_cast<std::int32_t>(a))] << " -> "
           << names[fn.arc_head[a]];
        if (fn.arc_cap[a] == 0) os << " [style=dashed]";
        os << ";\n";
    }
    os << "}\n";
}

}  // namespace netloc
