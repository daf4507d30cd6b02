#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "atfp/graph.hpp"
#include "atfp/idp_dp.hpp"

namespace atfp {

struct PathAnswer {
    bool yes = false;
    std::optional<VertexSeq> path;
};

struct TreeAnswer {
    bool yes = false;
    /// Vertex set of an induced caterpillar containing every terminal.
    std::optional<VertexSet> vertices;
};

struct CycleAnswer {
    bool yes = false;
    /// Starts at the smallest vertex and continues to its smaller neighbour.
    std::optional<VertexSeq> cycle;
};

struct CoincidingAnswer {
    bool yes = false;
    /// k induced s-t paths, pairwise mutually induced, each oriented s to t.
    std::optional<Solution> solution;
};

/// Pattern graph h with a prescribed image for each of its vertices.
struct AnchoredPattern {
    Graph h;
    /// (g-vertex, h-vertex); covers every vertex of h exactly once.
    std::vector<std::pair<Vertex, Vertex>> anchors;
};

/// Terminals in the component containing last(R) of the graph obtained from g
/// by deleting N[V_R \ {last(R)}] and putting last(R) back. An empty R gives
/// the empty set.
VertexSet ahead_set(const Graph& g, const VertexSeq& r, const VertexSet& terminals);

/// Induced path through all terminals. Throws PreconditionError(NotATFree).
PathAnswer k_in_a_path(const Graph& g, const VertexSet& terminals);

/// Induced tree through all terminals, found as a caterpillar whose central
/// path runs between two terminals. Throws PreconditionError(NotATFree).
TreeAnswer k_in_a_tree(const Graph& g, const VertexSet& terminals);

/// Induced cycle through all terminals; only cycles of length <= 5 exist in
/// an AT-free graph. Throws PreconditionError(NotATFree).
CycleAnswer k_in_a_cycle(const Graph& g, const VertexSet& terminals);

/// k mutually induced s-t paths. Throws PreconditionError(NotATFree) and
/// PreconditionError(PreconditionViolated) for s == t, k < 1 or bad ids.
CoincidingAnswer coinciding_pairs(const Graph& g, Vertex s, Vertex t, int k);

/// Some induced subgraph of g is a subdivision of h with h-vertex v drawn at
/// its anchor. Throws PreconditionError(NotATFree) and
/// PreconditionError(PreconditionViolated) for a malformed anchor list.
bool anchored_itm(const Graph& g, const AnchoredPattern& pattern);

/// Unanchored version; tries every anchor tuple. Throws
/// PreconditionError(BudgetExceeded) when h has more than `budget` vertices.
bool itm(const Graph& g, const Graph& h, int budget = 4);

/// Maximum independent set by branching; exact.
VertexSet maximum_independent_set(const Graph& g, const VertexSet& within);

}  // namespace atfp
