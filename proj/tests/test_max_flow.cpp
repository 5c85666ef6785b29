#include "netloc/max_flow.hpp"

#include <doctest.h>

#include <stdexcept>

#include <numeric>
#include <random>

using namespace netloc;

namespace {

FlowNetwork random_unit_digraph(std::mt19937_64& rng, std::int32_t max_vertices) {
    const std::int32_t n = 2 + static_cast<std::int32_t>(rng() % (max_vertices - 1));
    FlowNetwork fn(n);
    const double p = 0.05 + 0.30 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    for (std::int32_t u = 0; u < n; ++u)
        for (std::int32_t v = 0; v < n; ++v)
            if (u != v && (static_cast<double>(rng() >> 11) * 0x1.0p-53) < p) fn.add_arc(u, v, 1);
    return fn;
}

// Capacity bounds, conservation at interior vertices, and net source outflow.
void check_flow_assignment(const FlowNetwork& fn, const std::vector<std::int32_t>& flow,
                           std::int32_t s, std::int32_t t, std::int64_t value) {
    std::vector<std::int64_t> net_out(fn.vertex_count, 0);
    for (std::size_t a = 0; a < fn.arc_head.size(); a += 2) {
        CHECK(flow[a] >= 0);
        CHECK(flow[a] <= fn.arc_cap[a]);
        net_out[fn.arc_tail(static_cast<std::int32_t>(a))] += flow[a];
        net_out[fn.arc_head[a]] -= flow[a];
    }
    for (std::int32_t v = 0; v < fn.vertex_count; ++v) {
        if (v == s || v == t) continue;
        CHECK(net_out[v] == 0);
    }
    CHECK(net_out[s] == value);
    CHECK(net_out[t] == -value);
}

}  // namespace

TEST_CASE("single arc, disconnected pair, diamond") {
    FlowNetwork single(2);
    single.add_arc(0, 1, 1);
    CHECK(max_flow_push_relabel(single, 0, 1).value == 1);
    CHECK(max_flow_reference(single, 0, 1).value == 1);

    FlowNetwork disconnected(2);
    CHECK(max_flow_push_relabel(disconnected, 0, 1).value == 0);
    CHECK(max_flow_reference(disconnected, 0, 1).value == 0);

    FlowNetwork diamond(4);
    diamond.add_arc(0, 1, 1);
    diamond.add_arc(0, 2, 1);
    diamond.add_arc(1, 3, 1);
    diamond.add_arc(2, 3, 1);
    CHECK(max_flow_push_relabel(diamond, 0, 3).value == 2);
    CHECK(max_flow_reference(diamond, 0, 3).value == 2);
}

TEST_CASE("bipartite K33 with super source and sink has a perfect matching") {
    FlowNetwork fn(8);  // 0 source, 1..3 left, 4..6 right, 7 sink
    for (std::int32_t l = 1; l <= 3; ++l) fn.add_arc(0, l, 1);
    for (std::int32_t l = 1; l <= 3; ++l)
        for (std::int32_t r = 4; r <= 6; ++r) fn.add_arc(l, r, 1);
    for (std::int32_t r = 4; r <= 6; ++r) fn.add_arc(r, 7, 1);
    CHECK(max_flow_push_relabel(fn, 0, 7).value == 3);
    CHECK(max_flow_reference(fn, 0, 7).value == 3);
}

TEST_CASE("push-relabel equals the reference on random unit digraphs") {
    std::mt19937_64 rng(4242);
    for (int iter = 0; iter < 150; ++iter) {
        FlowNetwork fn = random_unit_digraph(rng, 30);
        const auto s = static_cast<std::int32_t>(rng() % fn.vertex_count);
        auto t = static_cast<std::int32_t>(rng() % fn.vertex_count);
        if (t == s) t = (t + 1) % fn.vertex_count;
        CAPTURE(iter);
        CHECK(max_flow_push_relabel(fn, s, t).value == max_flow_reference(fn, s, t).value);
    }
}

TEST_CASE("flow assignments are integral 0/1 and conserve flow") {
    std::mt19937_64 rng(77);
    MaxFlowOptions opt;
    opt.want_flow = true;
    for (int iter = 0; iter < 40; ++iter) {
        FlowNetwork fn = random_unit_digraph(rng, 20);
        const std::int32_t s = 0, t = fn.vertex_count - 1;
        if (s == t) continue;
        for (auto solve : {max_flow_push_relabel, max_flow_reference}) {
            const FlowResult r = solve(fn, s, t, opt);
            REQUIRE(r.flow.has_value());
            for (std::size_t a = 0; a < fn.arc_head.size(); a += 2)
                CHECK(((*r.flow)[a] == 0 || (*r.flow)[a] == 1));
            check_flow_assignment(fn, *r.flow, s, t, r.value);
        }
    }
}

TEST_CASE("min-cut certificate capacity equals the flow value") {
    std::mt19937_64 rng(900);
    MaxFlowOptions opt;
    opt.want_min_cut = true;
    for (int iter = 0; iter < 40; ++iter) {
        FlowNetwork fn = random_unit_digraph(rng, 24);
        const std::int32_t s = 0, t = fn.vertex_count - 1;
        for (auto solve : {max_flow_push_relabel, max_flow_reference}) {
            const FlowResult r = solve(fn, s, t, opt);
            REQUIRE(r.min_cut_arcs.has_value());
            std::int64_t cap = 0;
            for (std::int32_t a : *r.min_cut_arcs) cap += fn.arc_cap[a];
            CHECK(cap == r.value);
        }
    }
}

TEST_CASE("early exit saturates at the threshold and preserves the predicate") {
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 60; ++iter) {
        FlowNetwork fn = random_unit_digraph(rng, 18);
        const std::int32_t s = 0, t = fn.vertex_count - 1;
        const std::int64_t exact = max_flow_reference(fn, s, t).value;
        for (std::int64_t threshold : {1, 2, 3, 5}) {
            MaxFlowOptions opt;
            opt.early_exit_at = threshold;
            const auto pr = max_flow_push_relabel(fn, s, t, opt).value;
            const auto ek = max_flow_reference(fn, s, t, opt).value;
            CHECK(pr == std::min(exact, threshold));
            CHECK(ek == std::min(exact, threshold));
            CHECK((pr >= threshold) == (exact >= threshold));
        }
    }
}

TEST_CASE("solvers are deterministic across repeated calls") {
    std::mt19937_64 rng(5);
    FlowNetwork fn = random_unit_digraph(rng, 25);
    const std::int32_t s = 0, t = fn.vertex_count - 1;
    const auto first = max_flow_push_relabel(fn, s, t).value;
    for (int i = 0; i < 5; ++i) CHECK(max_flow_push_relabel(fn, s, t).value == first);
}

TEST_CASE("invalid endpoints are rejected") {
    FlowNetwork fn(3);
    fn.add_arc(0, 1, 1);
    CHECK_THROWS_AS(max_flow_push_relabel(fn, 0, 9), std::invalid_argument);
    CHECK_THROWS_AS(max_flow_reference(fn, -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(max_flow_push_relabel(fn, 1, 1), std::invalid_argument);
}
