#pragma once

#include <random>
#include <vector>

#include "atfp/graph.hpp"
#include "atfp/preprocess.hpp"

namespace fx {

using atfp::Edge;
using atfp::Graph;
using atfp::Instance;
using atfp::Vertex;

inline Graph graph(int n, std::vector<Edge> edges) { return Graph(n, edges); }

inline Graph path(int n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(0, n - 1);
    return g;
}

inline Graph complete(int n) {
    Graph g(n);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) g.add_edge(a, b);
    return g;
}

/// K1,3 with centre 0 and leaves 1, 2, 3.
inline Graph claw() { return graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

/// Centre 0; legs 0-1-2, 0-3-4, 0-5-6.
inline Graph spider() { return graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}); }

/// s1=0, a=1, t1=2, s2=3, b=4, t2=5; the only candidate paths have adjacent
/// inner vertices a and b.
inline Instance caterpillar_tree(bool with_ab = true) {
    Graph g = graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    if (with_ab) g.add_edge(1, 4);
    return Instance{g, {{0, 2}, {3, 5}}};
}

inline Instance c5_two_pairs() { return Instance{cycle(5), {{0, 2}, {2, 4}}}; }

inline Instance p4_single() { return Instance{path(4), {{0, 3}}}; }

inline Graph gnp(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (coin(rng)) g.add_edge(a, b);
    return g;
}

/// Two or three induced paths ("lanes") whose interiors are joined by random
/// cross edges, plus up to two extra vertices that may also touch lane ends. With `chained`, the second lane
/// starts where the first ends. Terminal pairs are the lane ends. Not
/// necessarily AT-free; callers filter.
inline Instance planted_lanes(std::mt19937_64& rng, int lanes, bool chained, int cross_percent) {
    std::vector<std::vector<Vertex>> paths;
    int n = 0;
    for (int l = 0; l < lanes; ++l) {
        const int len = 3 + static_cast<int>(rng() % 2);
        std::vector<Vertex> p;
        for (int i = 0; i < len; ++i) p.push_back(i == 0 && l == 1 && chained ? paths[0].back() : n++);
        paths.push_back(std::move(p));
    }
    const int total = n + static_cast<int>(rng() % 3);
    Graph g(total);
    std::vector<int> lane(static_cast<std::size_t>(total), -1);
    std::vector<Vertex> inner;
    for (int l = 0; l < lanes; ++l) {
        const auto& p = paths[static_cast<std::size_t>(l)];
        for (std::size_t i = 0; i + 1 < p.size(); ++i) g.add_edge(p[i], p[i + 1]);
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            inner.push_back(p[i]);
            lane[static_cast<std::size_t>(p[i])] = l;
        }
    }
    for (Vertex e = n; e < total; ++e) inner.push_back(e);
    for (std::size_t i = 0; i < inner.size(); ++i)
        for (std::size_t j = i + 1; j < inner.size(); ++j) {
            const Vertex a = inner[i], b = inner[j];
            if (lane[a] >= 0 && lane[a] == lane[b]) continue;
            if (static_cast<int>(rng() % 100) < cross_percent) g.add_edge(a, b);
        }
    // Extra vertices may also touch lane ends, opening detours.
    for (Vertex e = n; e < total; ++e)
        for (const auto& p : paths)
            for (Vertex end : {p.front(), p.back()})
                if (!g.adjacent(e, end) && static_cast<int>(rng() % 100) < 50) g.add_edge(e, end);
    Instance inst{g, {}};
    for (const auto& p : paths) inst.pairs.push_back({p.front(), p.back()});
    return inst;
}

inline std::vector<Edge> as_edges(const Instance& inst) {
    std::vector<Edge> out;
    for (const auto& p : inst.pairs) out.emplace_back(p.s, p.t);
    return out;
}

}  // namespace fx
