#pragma once

#include <array>
#include <optional>
#include <utility>

#include "atfp/graph.hpp"

namespace atfp {

struct AsteroidalTriple {
    Vertex a, b, c;
    friend bool operator==(const AsteroidalTriple&, const AsteroidalTriple&) = default;
};

/// Component labels of g - N[w], one row per w. Row w has -1 on N[w].
std::vector<std::vector<int>> avoidance_labels(const Graph& g);

bool is_asteroidal_triple(const Graph& g, Vertex a, Vertex b, Vertex c);

/// Lexicographically smallest asteroidal triple (a < b < c), if any.
std::optional<AsteroidalTriple> find_asteroidal_triple(const Graph& g);

inline bool is_at_free(const Graph& g) { return !find_asteroidal_triple(g).has_value(); }

/// Every x-y path dominates g. Throws PreconditionError on a disconnected g.
bool is_dominating_pair(const Graph& g, Vertex x, Vertex y);

/// Smallest dominating pair (x < y), both taken from `restrict` when given.
/// Throws PreconditionError on a disconnected g.
std::optional<std::pair<Vertex, Vertex>> find_dominating_pair(const Graph& g,
                                                              const std::optional<VertexSet>& restrict = std::nullopt);

/// BFS shortest x-y path preferring `path_vertices`, checked to dominate h.
VertexSeq dominating_path(const Graph& h, Vertex x, Vertex y, const VertexSet& path_vertices);

/// Tree whose non-leaves form a path. Throws PreconditionError if g is not a tree.
bool is_caterpillar(const Graph& g);

/// Some cycle[i], cycle[i+j] adjacent with 1 <= i < t, 2 <= j <= 4, i+j <= t
/// (1-based, no wraparound). Throws PreconditionError if `cycle` is not a cycle.
bool cycle_chord_property(const Graph& g, const VertexSeq& cycle);

}  // namespace atfp
