#include "netloc/netgen.hpp"

#include <random>
#include <stdexcept>

namespace netloc {

namespace {

// 53-bit uniform double in [0, 1); avoids std::uniform_real_distribution,
// which is not bit-stable across standard libraries.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Fisher-Yates with modulo draws: deterministic for a given engine state.
std::vector<NodeId> shuffled_ids(std::size_t n, std::mt19937_64& rng) {
    std::vector<NodeId> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<NodeId>(i);
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(ids[i - 1], ids[j]);
    }
    return ids;
}

std::vector<NodeId> pick_anchors(std::size_t n, std::size_t m, std::mt19937_64& rng) {
    const auto ids = shuffled_ids(n, rng);
    return {ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(m)};
}

}  // namespace

Network generate_unit_disk(const GeneratorConfig& cfg) {
    if (cfg.anchor_count > cfg.node_count)
        throw std::invalid_argument("anchor_count exceeds node_count");
    if (cfg.dimension < 1) throw std::invalid_argument("dimension must be positive");
    if (cfg.radius < 0 || cfg.side <= 0)
        throw std::invalid_argument("radius must be >= 0 and side > 0");

    std::mt19937_64 rng(cfg.seed);
    const std::size_t n = cfg.node_count;
    const int d = cfg.dimension;

    std::vector<double> coords(n * static_cast<std::size_t>(d));
    for (double& c : coords) c = next_unit(rng) * cfg.side;

    const double r2 = cfg.radius * cfg.radius;
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            double dist2 = 0;
            for (int k = 0; k < d; ++k) {
                const double delta = coords[u * d + k] - coords[v * d + k];
                dist2 += delta * delta;
            }
            if (dist2 <= r2) edges.emplace_back(u, v);
        }
    }

    Network net = build_network(edges, pick_anchors(n, cfg.anchor_count, rng), n);
    net.set_positions(std::move(coords), d);
    return net;
}

Network generate_erdos_renyi(std::size_t node_count, std::size_t anchor_count,
                             double edge_probability, std::uint64_t seed) {
    if (anchor_count > node_count)
        throw std::invalid_argument("anchor_count exceeds node_count");
    if (edge_probability < 0.0 || edge_probability > 1.0)
        throw std::invalid_argument("edge probability must be in [0, 1]");

    std::mt19937_64 rng(seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < node_count; ++u)
        for (NodeId v = u + 1; v < node_count; ++v)
            if (next_unit(rng) < edge_probability) edges.emplace_back(u, v);

    return build_network(edges, pick_anchors(node_count, anchor_count, rng), node_count);
}

}  // namespace netloc
