#include "netloc/generated.hpp"

#include "netloc/bitmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace netloc {

namespace {

// Beyond this the bit matrix would cross ~32 MB; fall back to sorted lists.
constexpr std::size_t kDenseNodeLimit = 16384;

void check_dimension(int dimension) {
    if (dimension < 2) throw std::invalid_argument("dimension must be >= 2");
}

std::vector<NodeId> sorted_intersection(const std::vector<NodeId>& a,
                                        const std::vector<NodeId>& b) {
    std::vector<NodeId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Does `candidates` (sorted) contain a k-clique? Ascending choice of the
// lowest member keeps the search duplicate-free.
bool has_clique_sparse(const Network& net, const std::vector<NodeId>& candidates, int k) {
    if (k <= 0) return true;
    if (candidates.size() < static_cast<std::size_t>(k)) return false;
    if (k == 1) return true;
    for (std::size_t idx = 0; idx + static_cast<std::size_t>(k) <= candidates.size(); ++idx) {
        const NodeId u = candidates[idx];
        std::vector<NodeId> next;
        for (std::size_t j = idx + 1; j < candidates.size(); ++j)
            if (net.has_edge(u, candidates[j])) next.push_back(candidates[j]);
        if (has_clique_sparse(net, next, k - 1)) return true;
    }
    return false;
}

struct DenseCliqueSearch {
    const BitMatrix& m;
    const bitops::Kernels& k;
    std::vector<std::vector<std::uint64_t>> scratch;  // one buffer per recursion level

    DenseCliqueSearch(const BitMatrix& matrix, const bitops::Kernels& kern, int depth)
        : m(matrix), k(kern), scratch(depth + 1, std::vector<std::uint64_t>(matrix.words_per_row())) {}

    bool has_clique(const std::uint64_t* candidates, int need, int level) {
        if (need <= 0) return true;
        const std::size_t nw = m.words_per_row();
        if (k.and_popcount(candidates, candidates, nw) < static_cast<std::uint64_t>(need))
            return false;
        if (need == 1) return true;
        bool found = false;
        BitMatrix::for_each_bit(candidates, nw, [&](std::size_t u) {
            if (found) return;
            auto& buf = scratch[level];
            k.and_into(candidates, m.row(u), buf.data(), nw);
            BitMatrix::clear_bits_through(buf.data(), u);
            if (has_clique(buf.data(), need - 1, level + 1)) found = true;
        });
        return found;
    }
};

GeneratedGraph finish(std::vector<std::vector<NodeId>> neighbors, std::size_t edge_count) {
    GeneratedGraph g;
    g.neighbors = std::move(neighbors);
    g.edge_count = edge_count;
    return g;
}

}  // namespace

std::vector<std::pair<NodeId, NodeId>> GeneratedGraph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count);
    for (NodeId u = 0; u < neighbors.size(); ++u)
        for (NodeId v : neighbors[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<NodeId> barycentric_neighbors(const Network& net, NodeId i, int dimension) {
    check_dimension(dimension);
    if (i >= net.node_count()) throw std::invalid_argument("node id out of range");
    std::vector<NodeId> out;
    for (NodeId j : net.neighbors(i)) {
        const auto common = sorted_intersection(net.neighbors(i), net.neighbors(j));
        if (has_clique_sparse(net, common, dimension)) out.push_back(j);
    }
    return out;
}

namespace detail {

GeneratedGraph generated_graph_dense(const Network& net, int dimension,
                                     const bitops::Kernels& kernels) {
    check_dimension(dimension);
    const std::size_t n = net.node_count();
    BitMatrix m(n);
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v : net.neighbors(u)) m.set(u, v);

    DenseCliqueSearch search(m, kernels, dimension);
    std::vector<std::uint64_t> common(m.words_per_row());
    std::vector<std::vector<NodeId>> neighbors(n);
    std::size_t edges = 0;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v : net.neighbors(u)) {
            if (v <= u) continue;
            kernels.and_into(m.row(u), m.row(v), common.data(), m.words_per_row());
            if (search.has_clique(common.data(), dimension, 1)) {
                neighbors[u].push_back(v);
                neighbors[v].push_back(u);
                ++edges;
            }
        }
    }
    return finish(std::move(neighbors), edges);
}

GeneratedGraph generated_graph_sparse(const Network& net, int dimension) {
    check_dimension(dimension);
    const std::size_t n = net.node_count();
    std::vector<std::vector<NodeId>> neighbors(n);
    std::size_t edges = 0;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v : net.neighbors(u)) {
            if (v <= u) continue;
            const auto common = sorted_intersection(net.neighbors(u), net.neighbors(v));
            if (has_clique_sparse(net, common, dimension)) {
                neighbors[u].push_back(v);
                neighbors[v].push_back(u);
                ++edges;
            }
        }
    }
    return finish(std::move(neighbors), edges);
}

}  // namespace detail

GeneratedGraph generated_graph(const Network& net, int dimension) {
    if (net.node_count() <= kDenseNodeLimit)
        return detail::generated_graph_dense(net, dimension, bitops::kernels());
    return detail::generated_graph_sparse(net, dimension);
}

}  // namespace netloc
