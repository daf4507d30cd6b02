#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace atfp {

using Vertex = int;
/// Ordered vertex list; a path or a walk depending on context.
using VertexSeq = std::vector<Vertex>;
/// Sorted list of distinct vertex ids.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists and
/// an adjacency matrix for constant-time edge queries.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    int n() const noexcept { return n_; }
    std::size_t m() const noexcept { return m_; }

    /// Adds the edge uv; a no-op if it is already present. Throws on self-loops
    /// and out-of-range ids.
    void add_edge(Vertex u, Vertex v);

    bool adjacent(Vertex u, Vertex v) const noexcept {
        return matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] != 0;
    }
    const VertexSet& neighbors(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::uint8_t> matrix_;
};

/// Open neighbourhood N(v). Throws std::out_of_range for a bad id.
const VertexSet& neighbors(const Graph& g, Vertex v);

/// Distinct vertices, consecutive ones adjacent, no chords.
bool is_induced_path(const Graph& g, std::span<const Vertex> seq);

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Component label per vertex restricted to `allowed` (label -1 outside it).
/// Labels are assigned in order of the smallest vertex of each component.
std::vector<int> component_labels(const Graph& g, const std::vector<char>& allowed);

struct Subgraph {
    Graph graph;
    /// new id -> old id, ascending.
    std::vector<Vertex> to_parent;
};

/// G[keep], relabelled 0..|keep|-1 in ascending order of the old ids.
Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Shortest src-dst path by BFS. When a vertex is dequeued its undiscovered
/// neighbours in `priority` are enqueued first, then the rest, each group in
/// ascending id order.
std::optional<VertexSeq> bfs_shortest_path(const Graph& g, Vertex src, Vertex dst, const VertexSet& priority = {});

/// Plain BFS distances from src (-1 when unreachable).
std::vector<int> bfs_distances(const Graph& g, Vertex src);

/// N[S] as a sorted set.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

/// Membership mask of size n for the given set.
std::vector<char> to_mask(int n, const VertexSet& s);
VertexSet from_mask(const std::vector<char>& mask);

/// True iff `vertices` dominates g (every vertex is in N[vertices]).
bool dominates(const Graph& g, std::span<const Vertex> vertices);

bool is_connected(const Graph& g);

}  // namespace atfp
