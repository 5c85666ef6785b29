#include "netloc/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace netloc {

namespace {

void check_endpoints(const FlowNetwork& fn, std::int32_t source, std::int32_t sink) {
    if (source < 0 || source >= fn.vertex_count || sink < 0 || sink >= fn.vertex_count)
        throw std::invalid_argument("max flow: vertex index out of range");
    if (source == sink) throw std::invalid_argument("max flow: source equals sink");
}

// Residual BFS from the source; returns the reachable set.
std::vector<char> residual_reachable(const FlowNetwork& fn, const std::vector<std::int32_t>& res,
                                     std::int32_t source) {
    std::vector<char> seen(fn.vertex_count, 0);
    std::queue<std::int32_t> q;
    seen[source] = 1;
    q.push(source);
    while (!q.empty()) {
        const std::int32_t u = q.front();
        q.pop();
        for (std::int32_t a : fn.out_arcs[u]) {
            const std::int32_t v = fn.arc_head[a];
            if (res[a] > 0 && !seen[v]) {
                seen[v] = 1;
                q.push(v);
            }
        }
    }
    return seen;
}

void fill_certificates(const FlowNetwork& fn, const std::vector<std::int32_t>& res,
                       std::int32_t source, const MaxFlowOptions& opt, FlowResult& out) {
    if (opt.want_flow) {
        std::vector<std::int32_t> flow(fn.arc_head.size(), 0);
        for (std::size_t a = 0; a < fn.arc_head.size(); a += 2)
            flow[a] = fn.arc_cap[a] - res[a];
        out.flow = std::move(flow);
    }
    if (opt.want_min_cut) {
        const auto seen = residual_reachable(fn, res, source);
        std::vector<std::int32_t> cut;
        for (std::size_t a = 0; a < fn.arc_head.size(); a += 2) {
            const auto id = static_cast<std::int32_t>(a);
            if (fn.arc_cap[a] > 0 && seen[fn.arc_tail(id)] && !seen[fn.arc_head[a]])
                cut.push_back(id);
        }
        out.min_cut_arcs = std::move(cut);
    }
}

class PushRelabel {
public:
    PushRelabel(const FlowNetwork& fn, std::int32_t source, std::int32_t sink)
        : fn_(fn),
          res_(fn.arc_cap),
          n_(fn.vertex_count),
          source_(source),
          sink_(sink),
          height_(n_, 0),
          excess_(n_, 0),
          cur_(n_, 0),
          height_count_(2 * n_ + 1, 0),
          in_queue_(n_, 0) {}

    std::int64_t run() {
        global_relabel();
        height_[source_] = n_;
        for (std::int32_t a : fn_.out_arcs[source_]) {
            if (res_[a] > 0) {
                const std::int32_t delta = res_[a];
                res_[a] -= delta;
                res_[a ^ 1] += delta;
                excess_[fn_.arc_head[a]] += delta;
                excess_[source_] -= delta;
                enqueue(fn_.arc_head[a]);
            }
        }
        rebuild_height_counts();

        std::int64_t discharges = 0;
        while (!active_.empty()) {
            const std::int32_t u = active_.front();
            active_.pop();
            in_queue_[u] = 0;
            if (excess_[u] <= 0 || u == source_ || u == sink_) continue;
            discharge(u);
            if (++discharges % n_ == 0 && !active_.empty()) {
                global_relabel();
                rebuild_height_counts();
                requeue_active();
            }
        }
        return excess_[sink_];
    }

    const std::vector<std::int32_t>& residual() const { return res_; }

private:
    void enqueue(std::int32_t v) {
        if (v != source_ && v != sink_ && !in_queue_[v] && excess_[v] > 0) {
            in_queue_[v] = 1;
            active_.push(v);
        }
    }

    void requeue_active() {
        std::queue<std::int32_t> empty;
        std::swap(active_, empty);
        std::fill(in_queue_.begin(), in_queue_.end(), 0);
        for (std::int32_t v = 0; v < n_; ++v) enqueue(v);
    }

    void discharge(std::int32_t u) {
        while (excess_[u] > 0) {
            if (cur_[u] == fn_.out_arcs[u].size()) {
                relabel(u);
                cur_[u] = 0;
                if (height_[u] >= 2 * n_) return;  // nothing left to route
                continue;
            }
            const std::int32_t a = fn_.out_arcs[u][cur_[u]];
            const std::int32_t v = fn_.arc_head[a];
            if (res_[a] > 0 && height_[u] == height_[v] + 1) {
                const std::int32_t delta =
                    static_cast<std::int32_t>(std::min<std::int64_t>(excess_[u], res_[a]));
                res_[a] -= delta;
                res_[a ^ 1] += delta;
                excess_[u] -= delta;
                excess_[v] += delta;
                enqueue(v);
            } else {
                ++cur_[u];
            }
        }
    }

    void relabel(std::int32_t u) {
        const std::int32_t old = height_[u];
        std::int32_t best = 2 * n_;
        for (std::int32_t a : fn_.out_arcs[u])
            if (res_[a] > 0) best = std::min(best, height_[fn_.arc_head[a]] + 1);
        --height_count_[old];
        // Gap heuristic: once a level below n empties, everything stranded
        // above it (and below n) can only ever push back to the source side.
        if (height_count_[old] == 0 && old < n_) {
            for (std::int32_t v = 0; v < n_; ++v) {
                if (v == source_) continue;
                if (height_[v] > old && height_[v] < n_) {
                    --height_count_[height_[v]];
                    height_[v] = n_ + 1;
                    ++height_count_[height_[v]];
                    cur_[v] = 0;
                }
            }
        }
        height_[u] = best;
        ++height_count_[height_[u]];
    }

    // Exact distance labels: BFS from the sink over reverse residual arcs;
    // vertices that cannot reach the sink get n + (distance to source).
    void global_relabel() {
        constexpr std::int32_t kUnset = std::numeric_limits<std::int32_t>::max();
        std::vector<std::int32_t> dist(n_, kUnset);
        std::queue<std::int32_t> q;
        dist[sink_] = 0;
        q.push(sink_);
        while (!q.empty()) {
            const std::int32_t u = q.front();
            q.pop();
            for (std::int32_t a : fn_.out_arcs[u]) {
                // arc a: u -> v; residual arc v -> u exists when res[a^1] > 0
                const std::int32_t v = fn_.arc_head[a];
                if (res_[a ^ 1] > 0 && dist[v] == kUnset && v != source_) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
            }
        }
        std::vector<std::int32_t> dist_s(n_, kUnset);
        dist_s[source_] = 0;
        q.push(source_);
        while (!q.empty()) {
            const std::int32_t u = q.front();
            q.pop();
            for (std::int32_t a : fn_.out_arcs[u]) {
                const std::int32_t v = fn_.arc_head[a];
                if (res_[a ^ 1] > 0 && dist_s[v] == kUnset) {
                    dist_s[v] = dist_s[u] + 1;
                    q.push(v);
                }
            }
        }
        for (std::int32_t v = 0; v < n_; ++v) {
            if (v == source_) {
                height_[v] = n_;
            } else if (dist[v] != kUnset) {
                height_[v] = dist[v];
            } else if (dist_s[v] != kUnset) {
                height_[v] = n_ + dist_s[v];
            } else {
                height_[v] = 2 * n_;
            }
            cur_[v] = 0;
        }
    }

    void rebuild_height_counts() {
        std::fill(height_count_.begin(), height_count_.end(), 0);
        for (std::int32_t v = 0; v < n_; ++v)
            ++height_count_[std::min(height_[v], 2 * n_)];
    }

    const FlowNetwork& fn_;
    std::vector<std::int32_t> res_;
    std::int32_t n_;
    std::int32_t source_;
    std::int32_t sink_;
    std::vector<std::int32_t> height_;
    std::vector<std::int64_t> excess_;
    std::vector<std::size_t> cur_;
    std::vector<std::int32_t> height_count_;
    std::vector<char> in_queue_;
    std::queue<std::int32_t> active_;
};

}  // namespace

FlowResult max_flow_push_relabel(const FlowNetwork& fn, std::int32_t source, std::int32_t sink,
                                 const MaxFlowOptions& opt) {
    check_endpoints(fn, source, sink);
    PushRelabel solver(fn, source, sink);
    FlowResult out;
    out.value = solver.run();
    fill_certificates(fn, solver.residual(), source, opt, out);
    if (opt.early_exit_at) out.value = std::min(out.value, *opt.early_exit_at);
    return out;
}

FlowResult max_flow_reference(const FlowNetwork& fn, std::int32_t source, std::int32_t sink,
                              const MaxFlowOptions& opt) {
    check_endpoints(fn, source, sink);
    std::vector<std::int32_t> res = fn.arc_cap;
    std::vector<std::int32_t> parent_arc(fn.vertex_count);
    std::int64_t value = 0;
    bool exhausted = false;

    while (!opt.early_exit_at || value < *opt.early_exit_at) {
        std::fill(parent_arc.begin(), parent_arc.end(), -1);
        parent_arc[source] = -2;
        std::queue<std::int32_t> q;
        q.push(source);
        bool found = false;
        while (!q.empty() && !found) {
            const std::int32_t u = q.front();
            q.pop();
            for (std::int32_t a : fn.out_arcs[u]) {
                const std::int32_t v = fn.arc_head[a];
                if (res[a] > 0 && parent_arc[v] == -1) {
                    parent_arc[v] = a;
                    if (v == sink) {
                        found = true;
                        break;
                    }
                    q.push(v);
                }
            }
        }
        if (!found) {
            exhausted = true;
            break;
        }
        std::int32_t bottleneck = std::numeric_limits<std::int32_t>::max();
        for (std::int32_t v = sink; v != source;) {
            const std::int32_t a = parent_arc[v];
            bottleneck = std::min(bottleneck, res[a]);
            v = fn.arc_tail(a);
        }
        if (opt.early_exit_at)
            bottleneck = static_cast<std::int32_t>(
                std::min<std::int64_t>(bottleneck, *opt.early_exit_at - value));
        for (std::int32_t v = sink; v != source;) {
            const std::int32_t a = parent_arc[v];
            res[a] -= bottleneck;
            res[a ^ 1] += bottleneck;
            v = fn.arc_tail(a);
        }
        value += bottleneck;
    }

    FlowResult out;
    out.value = value;
    // Certificates are only meaningful for a completed solve.
    if (exhausted) fill_certificates(fn, res, source, opt, out);
    return out;
}

}  // namespace netloc
