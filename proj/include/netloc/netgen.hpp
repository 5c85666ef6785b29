#pragma once

#include "netloc/network.hpp"

#include <cstdint>

namespace netloc {

// Reproducible generator configuration: identical config + seed yields a
// byte-identical Network on every platform.
struct GeneratorConfig {
    std::size_t node_count = 0;
    std::size_t anchor_count = 0;
    double side = 1.0;     // cube side length
    double radius = 0.25;  // communication radius
    int dimension = 2;
    std::uint64_t seed = 0;
};

// Unit-disk deployment: node_count points uniform in the dimension-cube of
// the given side, an edge whenever the Euclidean distance is <= radius, the
// first anchor_count nodes of a seeded shuffle as anchors. Positions are
// retained on the Network.
//
// Stream discipline (mt19937_64, one engine): node-major position doubles
// first, then the Fisher-Yates anchor shuffle.
Network generate_unit_disk(const GeneratorConfig& cfg);

// G(n, p): each unordered pair is an edge independently with probability
// edge_probability. Stream discipline: pair draws in lexicographic order,
// then the anchor shuffle.
Network generate_erdos_renyi(std::size_t node_count, std::size_t anchor_count,
                             double edge_probability, std::uint64_t seed);

}  // namespace netloc
