#include "netloc/oracle.hpp"
#include "netloc/netgen.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

using namespace netloc;
using testutil::complete_graph;
using testutil::disjoint_paths_pathset;

TEST_CASE("agent adjacent to three anchors has three single-edge paths") {
    const Network net = build_network({{3, 0}, {3, 1}, {3, 2}}, {0, 1, 2}, 4);
    CHECK(count_disjoint_paths_bruteforce(net.adjacency(), net.roles(), 3, 5) == 3);
}

TEST_CASE("agent-agent-anchor chain carries one path") {
    const Network net = build_network({{0, 1}, {1, 2}}, {2}, 3);
    CHECK(count_disjoint_paths_bruteforce(net.adjacency(), net.roles(), 0, 5) == 1);
}

TEST_CASE("a shared intermediate agent is a size-1 cut") {
    // 0 -> 1 -> {2, 3}: both anchor paths run through agent 1
    const Network net = build_network({{0, 1}, {1, 2}, {1, 3}}, {2, 3}, 4);
    CHECK(count_disjoint_paths_bruteforce(net.adjacency(), net.roles(), 0, 5) == 1);
}

TEST_CASE("upper clamps the reported count") {
    const Network net = build_network({{4, 0}, {4, 1}, {4, 2}, {4, 3}}, {0, 1, 2, 3}, 5);
    CHECK(count_disjoint_paths_bruteforce(net.adjacency(), net.roles(), 4, 2) == 2);
    CHECK(count_disjoint_paths_bruteforce(net.adjacency(), net.roles(), 4, 5) == 4);
    CHECK(count_disjoint_paths_bruteforce(net.adjacency(), net.roles(), 4, 0) == 0);
}

TEST_CASE("cut enumeration equals exhaustive path-set search on tiny graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t n = 4 + seed % 5;  // up to 8 nodes
        const Network net = generate_erdos_renyi(n, 2 + seed % 3, 0.45, seed);
        for (NodeId i : net.agents()) {
            CAPTURE(seed);
            CAPTURE(i);
            const int menger =
                count_disjoint_paths_bruteforce(net.adjacency(), net.roles(), i,
                                                static_cast<int>(n));
            CHECK(menger == disjoint_paths_pathset(net.adjacency(), net.roles(), i));
        }
    }
}

TEST_CASE("alive mask restricts paths and cuts to the induced subgraph") {
    // 0 agent; anchors 2,3 reachable directly and through agent 1
    const Network net = build_network({{0, 2}, {0, 1}, {1, 3}}, {2, 3}, 4);
    CHECK(count_disjoint_paths_bruteforce(net.adjacency(), net.roles(), 0, 5) == 2);
    std::vector<char> alive(4, 1);
    alive[1] = 0;
    CHECK(count_disjoint_paths_bruteforce(net.adjacency(), net.roles(), alive, 0, 5) == 1);
}

TEST_CASE("fixpoint keeps K4 and strips everything with two anchors") {
    const auto all = oracle_fixpoint(complete_graph(4, {0, 1, 2}), {});
    CHECK(all == std::vector<NodeId>{0, 1, 2, 3});

    const auto anchors_only = oracle_fixpoint(complete_graph(6, {0, 1}), {});
    CHECK(anchors_only == std::vector<NodeId>{0, 1});
}

TEST_CASE("fixpoint output is independent of deletion order") {
    std::mt19937_64 rng(123);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Network net = generate_erdos_renyi(9 + seed % 3, 3, 0.4, seed);
        DetectionConfig cfg;
        cfg.mode = DetectionMode::Nll;
        const auto reference = oracle_fixpoint(net, cfg);

        // re-run the pruning by hand in shuffled sweep orders
        for (int variant = 0; variant < 8; ++variant) {
            auto order = net.agents();
            std::shuffle(order.begin(), order.end(), rng);
            std::vector<char> alive(net.node_count(), 1);
            bool changed = true;
            while (changed) {
                changed = false;
                for (NodeId i : order) {
                    if (!alive[i]) continue;
                    if (count_disjoint_paths_bruteforce(net.adjacency(), net.roles(), alive, i,
                                                        3) < 3) {
                        alive[i] = 0;
                        changed = true;
                    }
                }
            }
            std::vector<NodeId> got;
            for (NodeId v = 0; v < net.node_count(); ++v)
                if (net.is_anchor(v) || alive[v]) got.push_back(v);
            CHECK(got == reference);
        }
    }
}

TEST_CASE("oracle refuses instances beyond its node limit") {
    const Network big = generate_erdos_renyi(20, 3, 0.2, 1);
    CHECK_THROWS_AS(count_disjoint_paths_bruteforce(big.adjacency(), big.roles(),
                                                    big.agents().front(), 3),
                    std::runtime_error);
    CHECK_THROWS_AS(oracle_fixpoint(big, {}), std::runtime_error);

    OracleLimits wider;
    wider.max_nodes = 20;
    CHECK_NOTHROW(count_disjoint_paths_bruteforce(big.adjacency(), big.roles(),
                                                  big.agents().front(), 3, wider));
}

TEST_CASE("explicit max_cut_size bounds the enumeration") {
    const Network net = complete_graph(5, {0, 1, 2});
    OracleLimits limits;
    limits.max_cut_size = 2;
    CHECK_NOTHROW(count_disjoint_paths_bruteforce(net.adjacency(), net.roles(), 4, 3, limits));
    CHECK_THROWS_AS(count_disjoint_paths_bruteforce(net.adjacency(), net.roles(), 4, 4, limits),
                    std::invalid_argument);
}
