// netloc: localizability detection for partially anchored networks.
//
// Subcommands: detect, gen, check, export, bench. Exit codes: 0 success,
// 1 check failure, 2 input error, 64 usage error.

#include "netloc/baseline_tp.hpp"
#include "netloc/bitops.hpp"
#include "netloc/detector.hpp"
#include "netloc/flow_network.hpp"
#include "netloc/generated.hpp"
#include "netloc/io.hpp"
#include "netloc/max_flow.hpp"
#include "netloc/netgen.hpp"
#include "netloc/oracle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

namespace {

using namespace netloc;

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

void write_text_to(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << text;
}

// ---------------------------------------------------------------------------
// detect
// ---------------------------------------------------------------------------

struct DetectArgs {
    std::string input;
    std::string mode = "bll";
    int dimension = 2;
    std::string format = "text";
    std::string out_path;
};

int run_detect(const DetectArgs& args) {
    const Network net = parse_network_file(args.input);
    LocalizabilityReport report;
    if (args.mode == "tp") {
        report = tp_detect(net, args.dimension);
    } else {
        DetectionConfig cfg;
        cfg.mode = args.mode == "bll" ? DetectionMode::Bll : DetectionMode::Nll;
        cfg.dimension = args.dimension;
        report = detect(net, cfg);
    }

    const std::size_t agents = net.agents().size();
    const std::size_t loc_agents = report.localizable.size() - net.anchor_count();
    std::printf("mode: %s  dimension: %d\n", report.mode.c_str(), report.dimension);
    std::printf("nodes: %zu (anchors: %zu, agents: %zu)\n", net.node_count(), net.anchor_count(),
                agents);
    std::printf("localizable agents: %zu / %zu (%.1f%%)\n", loc_agents, agents,
                agents == 0 ? 0.0 : 100.0 * static_cast<double>(loc_agents) / agents);
    std::printf("localizable set size: %zu\n", report.localizable.size());
    std::printf("passes: %d\n", report.passes);

    const std::string body =
        args.format == "json" ? report_to_json(report) : report_to_text(report);
    if (!args.out_path.empty()) write_text_to(args.out_path, body);
    return 0;
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

struct GenArgs {
    std::string model = "disk";
    std::size_t nodes = 50;
    std::size_t anchors = 4;
    double side = 1.0;
    double radius = 0.25;
    double prob = 0.2;
    int dimension = 2;
    std::uint64_t seed = 0;
    std::string format;
    std::string out_path;
};

int run_gen(const GenArgs& args) {
    Network net;
    if (args.model == "disk") {
        GeneratorConfig cfg;
        cfg.node_count = args.nodes;
        cfg.anchor_count = args.anchors;
        cfg.side = args.side;
        cfg.radius = args.radius;
        cfg.dimension = args.dimension;
        cfg.seed = args.seed;
        net = generate_unit_disk(cfg);
    } else {
        net = generate_erdos_renyi(args.nodes, args.anchors, args.prob, args.seed);
    }
    std::string format = args.format;
    if (format.empty())
        format = args.out_path.size() >= 5 &&
                         args.out_path.substr(args.out_path.size() - 5) == ".json"
                     ? "json"
                     : "text";
    write_text_to(args.out_path,
                  network_to_string(net, format == "json" ? FileFormat::Json
                                                          : FileFormat::EdgeList));
    std::fprintf(stderr, "generated %s network: n=%zu m=%zu edges=%zu seed=%llu\n",
                 args.model.c_str(), net.node_count(), net.anchor_count(), net.edge_count(),
                 static_cast<unsigned long long>(args.seed));
    return 0;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

struct CheckArgs {
    std::string input;
    int trials = 100;
    std::size_t max_n = 12;
    std::uint64_t seed = 1;
    int jobs = 1;
};

struct CheckFailure {
    int trial;
    std::string message;
};

// Random unit-capacity digraph for the solver cross-check.
FlowNetwork random_digraph(std::mt19937_64& rng, std::int32_t max_vertices) {
    const std::int32_t n = 2 + static_cast<std::int32_t>(rng() % (max_vertices - 1));
    FlowNetwork fn(n);
    const double p = 0.05 + 0.25 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    for (std::int32_t u = 0; u < n; ++u)
        for (std::int32_t v = 0; v < n; ++v)
            if (u != v && (static_cast<double>(rng() >> 11) * 0x1.0p-53) < p) fn.add_arc(u, v, 1);
    return fn;
}

std::string describe_instance(const Network& net, std::uint64_t seed, const std::string& kind) {
    std::ostringstream ss;
    ss << "reproduce with: model=" << kind << " seed=" << seed << "\n";
    ss << network_to_string(net, FileFormat::EdgeList);
    return ss.str();
}

std::optional<std::string> check_structural(const Network& net) {
    const auto ga = generated_graph(net, 2);
    for (NodeId u = 0; u < net.node_count(); ++u) {
        for (NodeId v : ga.neighbors[u]) {
            if (!net.has_edge(u, v)) return "generated graph edge not in source network";
            if (!std::binary_search(ga.neighbors[v].begin(), ga.neighbors[v].end(), u))
                return "generated graph adjacency asymmetric";
        }
    }
    const FlowNetwork fn = build_flow_network(net.adjacency(), net.roles());
    for (std::size_t a = 0; a < fn.arc_head.size(); a += 2)
        if (fn.arc_cap[a] != 1) return "non-unit arc capacity";
    if (!fn.out_arcs[fn.sink_index].empty()) {
        for (std::int32_t a : fn.out_arcs[fn.sink_index])
            if ((a & 1) == 0) return "sink has an outgoing arc";
    }
    return std::nullopt;
}

std::optional<std::string> check_instance(const Network& net, const OracleLimits& limits) {
    // Per-agent flow must equal the disjoint-path count, on the raw
    // and the generated adjacency, with both solvers agreeing.
    const int upper = static_cast<int>(net.anchor_count()) + 1;
    const auto ga = generated_graph(net, 2);
    for (const auto* adjacency : {&net.adjacency(), &ga.neighbors}) {
        const FlowNetwork fn = build_flow_network(*adjacency, net.roles());
        for (NodeId i : net.agents()) {
            const auto pr = max_flow_push_relabel(fn, fn.out_vertex(i), fn.sink_index).value;
            const auto ek = max_flow_reference(fn, fn.out_vertex(i), fn.sink_index).value;
            const int oracle =
                count_disjoint_paths_bruteforce(*adjacency, net.roles(), i, upper, limits);
            if (pr != ek)
                return "solver mismatch at agent " + std::to_string(i) + ": push-relabel " +
                       std::to_string(pr) + " vs reference " + std::to_string(ek);
            if (pr != oracle)
                return "flow/oracle mismatch at agent " + std::to_string(i) + ": flow " +
                       std::to_string(pr) + " vs " + std::to_string(oracle) + " disjoint paths";
        }
    }
    // Detector fixpoint equals the brute-force fixpoint, both modes.
    for (DetectionMode mode : {DetectionMode::Bll, DetectionMode::Nll}) {
        DetectionConfig cfg;
        cfg.mode = mode;
        const auto got = detect(net, cfg).localizable;
        const auto want = oracle_fixpoint(net, cfg, limits);
        if (got != want)
            return std::string("detector/oracle fixpoint mismatch in ") + mode_name(mode) +
                   " mode";
    }
    return std::nullopt;
}

std::optional<std::string> run_check_trial(int trial, const CheckArgs& args) {
    const std::uint64_t seed = args.seed + static_cast<std::uint64_t>(trial);

    {
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
        const FlowNetwork fn = random_digraph(rng, 30);
        const auto s = static_cast<std::int32_t>(rng() % fn.vertex_count);
        auto t = static_cast<std::int32_t>(rng() % fn.vertex_count);
        if (t == s) t = (t + 1) % fn.vertex_count;
        const auto pr = max_flow_push_relabel(fn, s, t).value;
        const auto ek = max_flow_reference(fn, s, t).value;
        if (pr != ek)
            return "solver cross-check mismatch on random digraph (seed " + std::to_string(seed) +
                   "): push-relabel " + std::to_string(pr) + " vs reference " + std::to_string(ek);
    }

    const bool disk = trial % 2 == 0;
    const std::size_t n = 4 + seed % (args.max_n - 3);
    const std::size_t m = std::min<std::size_t>(2 + trial % 3, n);
    Network net;
    if (disk) {
        GeneratorConfig cfg;
        cfg.node_count = n;
        cfg.anchor_count = m;
        cfg.radius = 0.35 + 0.3 * static_cast<double>(trial % 5) / 5.0;
        cfg.seed = seed;
        net = generate_unit_disk(cfg);
    } else {
        net = generate_erdos_renyi(n, m, 0.25 + 0.3 * static_cast<double>(trial % 4) / 4.0, seed);
    }

    OracleLimits limits;
    limits.max_nodes = std::max<std::size_t>(args.max_n, 14);
    if (auto err = check_structural(net))
        return *err + "\n" + describe_instance(net, seed, disk ? "disk" : "gnp");
    if (auto err = check_instance(net, limits))
        return *err + "\n" + describe_instance(net, seed, disk ? "disk" : "gnp");
    return std::nullopt;
}

int run_check(const CheckArgs& args) {
    if (args.max_n < 4 || args.max_n > 14) {
        std::cerr << "check: --max-n must be in [4, 14] (oracle is desk-scale only)\n";
        return 64;
    }

    std::vector<CheckFailure> failures;
    std::mutex mu;
    std::atomic<int> next{0};
    std::atomic<bool> stop{false};

    auto worker = [&] {
        while (!stop.load()) {
            const int t = next.fetch_add(1);
            if (t >= args.trials) break;
            if (auto err = run_check_trial(t, args)) {
                std::lock_guard<std::mutex> lock(mu);
                failures.push_back({t, *err});
                stop.store(true);
            }
        }
    };

    const int jobs = std::max(1, args.jobs);
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    if (!args.input.empty()) {
        const Network net = parse_network_file(args.input);
        if (auto err = check_structural(net)) {
            failures.push_back({-1, *err + "\n(input file " + args.input + ")"});
        } else if (net.node_count() <= 14) {
            OracleLimits limits;
            if (auto err = check_instance(net, limits))
                failures.push_back({-1, *err + "\n(input file " + args.input + ")"});
        } else {
            // Too large for the oracle; cross-check the two solvers per agent.
            const FlowNetwork fn = build_flow_network(net.adjacency(), net.roles());
            for (NodeId i : net.agents()) {
                const auto pr = max_flow_push_relabel(fn, fn.out_vertex(i), fn.sink_index).value;
                const auto ek = max_flow_reference(fn, fn.out_vertex(i), fn.sink_index).value;
                if (pr != ek) {
                    failures.push_back({-1, "solver mismatch at agent " + std::to_string(i) +
                                                " (input file " + args.input + ")"});
                    break;
                }
            }
        }
    }

    if (failures.empty()) {
        std::printf("check: %d trials passed%s\n", args.trials,
                    args.input.empty() ? "" : " (plus input file)");
        return 0;
    }
    std::sort(failures.begin(), failures.end(),
              [](const CheckFailure& a, const CheckFailure& b) { return a.trial < b.trial; });
    std::printf("check: FAILED\n%s\n", failures.front().message.c_str());
    return 1;
}

// ---------------------------------------------------------------------------
// export
// ---------------------------------------------------------------------------

struct ExportArgs {
    std::string input;
    std::string what = "g";
    int dimension = 2;
    std::string out_path;
};

int run_export(const ExportArgs& args) {
    const Network net = parse_network_file(args.input);
    std::ostringstream ss;
    if (args.what == "g") {
        write_dot_graph(ss, net.adjacency(), net.roles(), "g");
    } else if (args.what == "ga") {
        write_dot_graph(ss, generated_graph(net, args.dimension).neighbors, net.roles(), "ga");
    } else {
        write_dot(build_flow_network(net.adjacency(), net.roles()), ss);
    }
    write_text_to(args.out_path, ss.str());
    return 0;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

struct BenchArgs {
    std::vector<std::size_t> nodes = {1000};
    double degree = 10.0;
    std::size_t anchors = 10;
    int trials = 3;
    std::uint64_t seed = 7;
    int jobs = 1;
};

struct BenchRow {
    std::size_t n = 0;
    std::size_t edges = 0;
    int passes_bll = 0;
    int passes_nll = 0;
    double ms_bll = 0;
    double ms_nll = 0;
};

BenchRow bench_one(std::size_t n, const BenchArgs& args, int trial) {
    GeneratorConfig cfg;
    cfg.node_count = n;
    cfg.anchor_count = std::min(args.anchors, n);
    cfg.side = 1.0;
    cfg.radius = std::sqrt(args.degree / (static_cast<double>(n - 1) * 3.14159265358979323846));
    cfg.seed = args.seed + static_cast<std::uint64_t>(trial);
    const Network net = generate_unit_disk(cfg);

    BenchRow row;
    row.n = n;
    row.edges = net.edge_count();

    DetectionConfig dc;
    dc.mode = DetectionMode::Bll;
    auto start = std::chrono::steady_clock::now();
    row.passes_bll = detect(net, dc).passes;
    row.ms_bll = ms_since(start);

    dc.mode = DetectionMode::Nll;
    start = std::chrono::steady_clock::now();
    row.passes_nll = detect(net, dc).passes;
    row.ms_nll = ms_since(start);
    return row;
}

int run_bench(const BenchArgs& args) {
    std::printf("bitops backend: %s\n", bitops::backend_name(bitops::active_backend()));
    std::printf("%8s %8s %10s %7s %7s %12s %12s\n", "n", "anchors", "edges", "p_bll", "p_nll",
                "bll_ms", "nll_ms");
    for (std::size_t n : args.nodes) {
        std::vector<BenchRow> rows(static_cast<std::size_t>(args.trials));
        std::atomic<int> next{0};
        auto worker = [&] {
            while (true) {
                const int t = next.fetch_add(1);
                if (t >= args.trials) break;
                rows[static_cast<std::size_t>(t)] = bench_one(n, args, t);
            }
        };
        std::vector<std::thread> pool;
        for (int j = 1; j < std::max(1, args.jobs); ++j) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();

        BenchRow mean;
        mean.n = n;
        for (const auto& r : rows) {
            mean.edges += r.edges;
            mean.passes_bll += r.passes_bll;
            mean.passes_nll += r.passes_nll;
            mean.ms_bll += r.ms_bll;
            mean.ms_nll += r.ms_nll;
        }
        const auto k = static_cast<double>(rows.size());
        std::printf("%8zu %8zu %10.0f %7.1f %7.1f %12.2f %12.2f\n", n,
                    std::min(args.anchors, n), mean.edges / k, mean.passes_bll / k,
                    mean.passes_nll / k, mean.ms_bll / k, mean.ms_nll / k);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"localizability detection for anchored networks via iterative max-flow"};
    app.require_subcommand(1);

    DetectArgs detect_args;
    auto* det = app.add_subcommand("detect", "detect localizable nodes of a network file");
    det->add_option("input", detect_args.input, "network file (edge list or JSON)")->required();
    det->add_option("--mode", detect_args.mode, "detection mode")
        ->check(CLI::IsMember({"bll", "nll", "tp"}));
    det->add_option("--dimension", detect_args.dimension, "space dimension (threshold d+1)")
        ->check(CLI::Range(2, 16));
    det->add_option("--format", detect_args.format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    det->add_option("--out", detect_args.out_path, "write the report to a file");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a random network file");
    gen->add_option("--model", gen_args.model, "generator model")
        ->check(CLI::IsMember({"disk", "gnp"}));
    gen->add_option("-n,--nodes", gen_args.nodes, "node count");
    gen->add_option("-m,--anchors", gen_args.anchors, "anchor count");
    gen->add_option("--side", gen_args.side, "deployment cube side (disk)");
    gen->add_option("--radius", gen_args.radius, "communication radius (disk)");
    gen->add_option("-p,--prob", gen_args.prob, "edge probability (gnp)");
    gen->add_option("-d,--dimension", gen_args.dimension, "space dimension (disk)");
    gen->add_option("--seed", gen_args.seed, "rng seed");
    gen->add_option("--format", gen_args.format, "output format (text|json)")
        ->check(CLI::IsMember({"text", "json"}));
    gen->add_option("--out", gen_args.out_path, "output file (default stdout)");

    CheckArgs check_args;
    auto* chk = app.add_subcommand("check", "cross-validate solvers, detector and oracle");
    chk->add_option("input", check_args.input, "also check this network file");
    chk->add_option("--trials", check_args.trials, "number of random trials")
        ->check(CLI::PositiveNumber);
    chk->add_option("--max-n", check_args.max_n, "largest random instance");
    chk->add_option("--seed", check_args.seed, "base seed");
    chk->add_option("--jobs", check_args.jobs, "parallel workers")->check(CLI::PositiveNumber);

    ExportArgs export_args;
    auto* exp = app.add_subcommand("export", "export DOT views of a network");
    exp->add_option("input", export_args.input, "network file")->required();
    exp->add_option("--what", export_args.what, "which view: raw graph, generated graph, or flow network")
        ->check(CLI::IsMember({"g", "ga", "gprime"}));
    exp->add_option("--dimension", export_args.dimension, "dimension for the generated graph")
        ->check(CLI::Range(2, 16));
    exp->add_option("--out", export_args.out_path, "output file (default stdout)");

    BenchArgs bench_args;
    auto* ben = app.add_subcommand("bench", "timing table for detection");
    ben->add_option("--n", bench_args.nodes, "node counts (repeatable)");
    ben->add_option("--degree", bench_args.degree, "target average degree");
    ben->add_option("-m,--anchors", bench_args.anchors, "anchor count");
    ben->add_option("--trials", bench_args.trials, "trials per size")->check(CLI::PositiveNumber);
    ben->add_option("--seed", bench_args.seed, "base seed");
    ben->add_option("--jobs", bench_args.jobs, "parallel workers")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (app.got_subcommand(det)) return run_detect(detect_args);
        if (app.got_subcommand(gen)) return run_gen(gen_args);
        if (app.got_subcommand(chk)) return run_check(check_args);
        if (app.got_subcommand(exp)) return run_export(export_args);
        if (app.got_subcommand(ben)) return run_bench(bench_args);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 64;
}
