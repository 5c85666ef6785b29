#include "netloc/baseline_tp.hpp"
#include "netloc/detector.hpp"
#include "netloc/netgen.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <algorithm>

using namespace netloc;
using testutil::complete_graph;

TEST_CASE("K4 with three anchors: the agent finds three localizable neighbors") {
    const auto report = tp_detect(complete_graph(4, {0, 1, 2}));
    CHECK(report.mode == "tp");
    CHECK(report.localizable == std::vector<NodeId>{0, 1, 2, 3});
}

TEST_CASE("anchors without common neighborhood structure localize nothing") {
    // anchors 0,1,2 each adjacent to a distinct agent only
    const Network net = build_network({{0, 3}, {1, 4}, {2, 5}}, {0, 1, 2}, 6);
    const auto report = tp_detect(net);
    CHECK(report.localizable == std::vector<NodeId>{0, 1, 2});
    CHECK(report.removed_order == std::vector<NodeId>{3, 4, 5});
}

TEST_CASE("chained growth: localizable neighbors can be agents") {
    // agent 3 sees anchors 0,1,2; agent 4 sees anchors 1,2 plus agent 3
    const Network net =
        build_network({{3, 0}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}}, {0, 1, 2}, 5);
    const auto report = tp_detect(net);
    CHECK(report.localizable == std::vector<NodeId>{0, 1, 2, 3, 4});
    CHECK(report.passes >= 2);
}

TEST_CASE("dimension generalization raises the neighbor threshold") {
    const Network net = complete_graph(5, {0, 1, 2, 3});
    CHECK(tp_detect(net, 3).localizable == std::vector<NodeId>{0, 1, 2, 3, 4});
    const Network fewer = complete_graph(4, {0, 1, 2});
    CHECK(tp_detect(fewer, 3).localizable == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("TP-localizable is a subset of the NLL flow detector's set") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Network net = seed % 2 == 0
                                ? generate_erdos_renyi(10 + seed % 4, 3, 0.4, seed)
                                : [&] {
                                      GeneratorConfig cfg;
                                      cfg.node_count = 10 + seed % 4;
                                      cfg.anchor_count = 3;
                                      cfg.radius = 0.45;
                                      cfg.seed = seed;
                                      return generate_unit_disk(cfg);
                                  }();
        const auto tp = tp_detect(net).localizable;
        DetectionConfig cfg;
        cfg.mode = DetectionMode::Nll;
        const auto nll = detect(net, cfg).localizable;
        CAPTURE(seed);
        CHECK(std::includes(nll.begin(), nll.end(), tp.begin(), tp.end()));
    }
}

TEST_CASE("two agents bridging three anchors: flow detection strictly beats TP") {
    // anchors 0,1,2; agents 3,4: 3~{0,1,4}, 4~{1,2,3}
    const Network net =
        build_network({{3, 0}, {3, 1}, {3, 4}, {4, 1}, {4, 2}}, {0, 1, 2}, 5);
    const auto tp = tp_detect(net).localizable;
    CHECK(tp == std::vector<NodeId>{0, 1, 2});
    DetectionConfig cfg;
    cfg.mode = DetectionMode::Nll;
    const auto nll = detect(net, cfg).localizable;
    CHECK(nll == std::vector<NodeId>{0, 1, 2, 3, 4});
}
