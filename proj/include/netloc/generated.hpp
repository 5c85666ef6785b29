#pragma once

#include "netloc/bitops.hpp"
#include "netloc/network.hpp"

namespace netloc {

// Adjacency of the triangle-generated subgraph: edge (i, j) is kept when j
// together with d further neighbors of i forms a (d+1)-clique. Always a
// subgraph of the source network, symmetric.
struct GeneratedGraph {
    std::vector<std::vector<NodeId>> neighbors;  // sorted, symmetric
    std::size_t edge_count = 0;

    std::vector<std::pair<NodeId, NodeId>> edges() const;
};

// N*_i for one node: the neighbors j of i for which the common neighborhood
// N(i) ∩ N(j) contains a d-clique. d = 2 is the plain triangle rule (j in a
// triangle with two other neighbors of i).
std::vector<NodeId> barycentric_neighbors(const Network& net, NodeId i, int dimension = 2);

GeneratedGraph generated_graph(const Network& net, int dimension = 2);

namespace detail {

// Packed-row route: adjacency as a BitMatrix, common neighborhoods and clique
// probes through the bitops kernels. Used for node counts that fit a dense
// bit matrix.
GeneratedGraph generated_graph_dense(const Network& net, int dimension,
                                     const bitops::Kernels& kernels);

// Sorted-list route: merge intersections plus hashed edge membership. The
// scalar fallback for large graphs and the equivalence partner in tests.
GeneratedGraph generated_graph_sparse(const Network& net, int dimension);

}  // namespace detail

}  // namespace netloc
