#include "atfp/atfree.hpp"

#include <algorithm>

#include "atfp/errors.hpp"

namespace atfp {

std::vector<std::vector<int>> avoidance_labels(const Graph& g) {
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(g.n()));
    for (Vertex w = 0; w < g.n(); ++w) {
        std::vector<char> allowed(static_cast<std::size_t>(g.n()), 1);
        allowed[w] = 0;
        for (Vertex x : g.neighbors(w)) allowed[x] = 0;
        rows.push_back(component_labels(g, allowed));
    }
    return rows;
}

namespace {

bool same_side(const std::vector<int>& row, Vertex x, Vertex y) { return row[x] != -1 && row[x] == row[y]; }

bool triple_from_labels(const Graph& g, const std::vector<std::vector<int>>& rows, Vertex a, Vertex b, Vertex c) {
    if (g.adjacent(a, b) || g.adjacent(a, c) || g.adjacent(b, c)) return false;
    return same_side(rows[c], a, b) && same_side(rows[b], a, c) && same_side(rows[a], b, c);
}

void require_connected(const Graph& g, const char* who) {
    if (!is_connected(g)) throw PreconditionError(PreconditionKind::Disconnected, std::string(who) + ": graph is disconnected");
}

}  // namespace

bool is_asteroidal_triple(const Graph& g, Vertex a, Vertex b, Vertex c) {
    if (a == b || a == c || b == c) return false;
    if (g.adjacent(a, b) || g.adjacent(a, c) || g.adjacent(b, c)) return false;
    auto avoid = [&](Vertex w) {
        std::vector<char> allowed(static_cast<std::size_t>(g.n()), 1);
        allowed[w] = 0;
        for (Vertex x : g.neighbors(w)) allowed[x] = 0;
        return component_labels(g, allowed);
    };
    return same_side(avoid(c), a, b) && same_side(avoid(b), a, c) && same_side(avoid(a), b, c);
}

std::optional<AsteroidalTriple> find_asteroidal_triple(const Graph& g) {
    if (g.n() < 3) return std::nullopt;
    const auto rows = avoidance_labels(g);
    for (Vertex a = 0; a < g.n(); ++a)
        for (Vertex b = a + 1; b < g.n(); ++b) {
            if (g.adjacent(a, b)) continue;
            for (Vertex c = b + 1; c < g.n(); ++c)
                if (triple_from_labels(g, rows, a, b, c)) return AsteroidalTriple{a, b, c};
        }
    return std::nullopt;
}

bool is_dominating_pair(const Graph& g, Vertex x, Vertex y) {
    require_connected(g, "is_dominating_pair");
    for (Vertex v = 0; v < g.n(); ++v) {
        if (v == x || v == y || g.adjacent(v, x) || g.adjacent(v, y)) continue;
        std::vector<char> allowed(static_cast<std::size_t>(g.n()), 1);
        allowed[v] = 0;
        for (Vertex w : g.neighbors(v)) allowed[w] = 0;
        if (same_side(component_labels(g, allowed), x, y)) return false;
    }
    return true;
}

std::optional<std::pair<Vertex, Vertex>> find_dominating_pair(const Graph& g, const std::optional<VertexSet>& restrict) {
    require_connected(g, "find_dominating_pair");
    VertexSet candidates;
    if (restrict) {
        candidates = *restrict;
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    } else {
        for (Vertex v = 0; v < g.n(); ++v) candidates.push_back(v);
    }
    const auto rows = avoidance_labels(g);
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            const Vertex x = candidates[i];
            const Vertex y = candidates[j];
            bool ok = true;
            for (Vertex v = 0; v < g.n() && ok; ++v) {
                if (v == x || v == y || g.adjacent(v, x) || g.adjacent(v, y)) continue;
                ok = !same_side(rows[v], x, y);
            }
            if (ok) return std::make_pair(x, y);
        }
    return std::nullopt;
}

VertexSeq dominating_path(const Graph& h, Vertex x, Vertex y, const VertexSet& path_vertices) {
    auto path = bfs_shortest_path(h, x, y, path_vertices);
    if (!path || !dominates(h, *path))
        throw PreconditionError(PreconditionKind::PreconditionViolated,
                                "dominating_path: (" + std::to_string(x) + "," + std::to_string(y) + ") is not a dominating pair");
    return *path;
}

bool is_caterpillar(const Graph& g) {
    if (g.n() == 0 || g.m() + 1 != static_cast<std::size_t>(g.n()) || !is_connected(g))
        throw PreconditionError(PreconditionKind::NotATree, "is_caterpillar: graph is not a tree");
    VertexSet spine;
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) >= 2) spine.push_back(v);
    const auto core = induced_subgraph(g, spine);
    for (Vertex v = 0; v < core.graph.n(); ++v)
        if (core.graph.degree(v) > 2) return false;
    return true;
}

bool cycle_chord_property(const Graph& g, const VertexSeq& cycle) {
    const int t = static_cast<int>(cycle.size());
    bool valid = t >= 3;
    for (int i = 0; i < t && valid; ++i) {
        valid = g.contains(cycle[i]) && g.contains(cycle[(i + 1) % t]) && g.adjacent(cycle[i], cycle[(i + 1) % t]);
        for (int j = i + 1; j < t && valid; ++j) valid = cycle[i] != cycle[j];
    }
    if (!valid) throw PreconditionError(PreconditionKind::NotACycle, "cycle_chord_property: input is not a cycle");
    for (int i = 1; i < t; ++i)
        for (int j = 2; j <= 4 && i + j <= t; ++j)
            if (g.adjacent(cycle[i - 1], cycle[i + j - 1])) return true;
    return false;
}

}  // namespace atfp
