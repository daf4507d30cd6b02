#include "atfp/hardness.hpp"

#include <algorithm>
#include <string>

#include "atfp/errors.hpp"
#include "atfp/oracles.hpp"

namespace atfp {

ReductionOutput reduce_clique_to_itm(const Graph& g, int k) {
    if (k < 5) throw PreconditionError(PreconditionKind::PreconditionViolated, "reduction needs k >= 5, got " + std::to_string(k));
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) < 4)
            throw PreconditionError(PreconditionKind::PreconditionViolated,
                                    "reduction needs minimum degree 4; vertex " + std::to_string(v) + " has degree " +
                                        std::to_string(g.degree(v)));
    const auto edges = g.edges();
    const int n = g.n();
    const int m = static_cast<int>(edges.size());

    ReductionOutput out;
    out.g_prime = Graph(n + m);
    for (Vertex a = 0; a < n; ++a) {
        out.u_clique.push_back(a);
        for (Vertex b = a + 1; b < n; ++b) out.g_prime.add_edge(a, b);
    }
    for (int e = 0; e < m; ++e) {
        const Vertex w = n + e;
        out.w_clique.push_back(w);
        out.edge_vertex.emplace(edges[e], w);
        out.g_prime.add_edge(w, edges[e].first);
        out.g_prime.add_edge(w, edges[e].second);
        for (int f = e + 1; f < m; ++f) out.g_prime.add_edge(w, n + f);
    }

    const int ys = k * (k - 1) / 2;
    out.h = Graph(k + ys);
    for (Vertex i = 0; i < k; ++i)
        for (Vertex j = i + 1; j < k; ++j) out.h.add_edge(i, j);
    for (Vertex a = k; a < k + ys; ++a)
        for (Vertex b = a + 1; b < k + ys; ++b) out.h.add_edge(a, b);
    Vertex y = k;
    for (Vertex i = 0; i < k; ++i)
        for (Vertex j = i + 1; j < k; ++j, ++y) {
            out.h.add_edge(y, i);
            out.h.add_edge(y, j);
        }
    return out;
}

bool verify_reduction_small(const Graph& g, int k, const ReductionOutput& out, int max_n) {
    if (out.g_prime.n() > max_n)
        throw PreconditionError(PreconditionKind::TooLarge, "G' has " + std::to_string(out.g_prime.n()) +
                                                                " vertices; exact check limited to " + std::to_string(max_n));
    return oracle::clique(g, k) == oracle::induced_subgraph_of(out.g_prime, out.h);
}

Graph pad_with_dominating_clique(const Graph& g, int extra) {
    Graph out(g.n() + extra);
    for (const auto& [a, b] : g.edges()) out.add_edge(a, b);
    for (Vertex c = g.n(); c < g.n() + extra; ++c)
        for (Vertex v = 0; v < c; ++v) out.add_edge(c, v);
    return out;
}

}  // namespace atfp
