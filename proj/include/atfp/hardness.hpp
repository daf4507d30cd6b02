#pragma once

#include <map>

#include "atfp/graph.hpp"

namespace atfp {

/// Cobipartite host G' and pattern H built from a Clique instance (g, k).
/// G' ids: U = 0..n-1 (copy of V_g), then one W vertex per edge of g in
/// g.edges() order. H ids: x_0..x_{k-1}, then y_ij for i < j in
/// lexicographic order.
struct ReductionOutput {
    Graph g_prime;
    Graph h;
    VertexSet u_clique;
    VertexSet w_clique;
    std::map<Edge, Vertex> edge_vertex;
};

/// Requires k >= 5 and minimum degree >= 4; throws
/// PreconditionError(PreconditionViolated) otherwise.
ReductionOutput reduce_clique_to_itm(const Graph& g, int k);

/// g has a k-clique iff out.h is an induced subgraph of out.g_prime, both by
/// exact search. Throws PreconditionError(TooLarge) when G' has more than
/// max_n vertices.
bool verify_reduction_small(const Graph& g, int k, const ReductionOutput& out, int max_n = 24);

/// g plus a clique of `extra` new vertices adjacent to everything. This
/// changes the Clique instance; a k-clique may appear that g lacks.
Graph pad_with_dominating_clique(const Graph& g, int extra);

}  // namespace atfp
