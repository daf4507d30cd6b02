#pragma once

#include <vector>

#include "atfp/graph.hpp"
#include "atfp/preprocess.hpp"

namespace atfp {

enum class HKind { Terminal, PathVertex };

struct HComponent {
    /// h ids, ascending.
    VertexSet h_vertices;
    /// pair indices, ascending.
    std::vector<int> pairs;
    /// G ids, ascending.
    VertexSet terminals;
};

/// G[T] plus one degree-2 path-vertex per pair. Terminals take h ids
/// 0..|T|-1 in ascending G order; path-vertices follow in pair order.
struct AuxiliaryH {
    Graph h;
    std::vector<HKind> kind;
    /// h vertex -> pair index, -1 for terminals.
    std::vector<int> pair_of;
    /// h vertex -> G vertex, -1 for path-vertices.
    std::vector<Vertex> to_g;
    /// G vertex -> h vertex, -1 for non-terminals.
    std::vector<Vertex> h_of_g;
    std::vector<Vertex> path_vertex_of_pair;
    std::vector<HComponent> components;
    std::vector<int> component_of_pair;
};

AuxiliaryH build_H(const Instance& inst);

/// No iff H has an asteroidal triple.
StepVerdict step5(const AuxiliaryH& auxh);

/// Per-pair masks of V(G_i), cached for repeated queries.
std::vector<std::vector<char>> all_gi_masks(const Instance& inst);

/// Pairs from different H-components admit private induced paths that are
/// not mutually induced. Throws PreconditionError(SameComponent) otherwise.
bool pairs_interfere(const Instance& inst, const AuxiliaryH& auxh, int i, int j);

struct InterferenceGraph {
    int r = 0;
    /// (a, b) with a < b, ascending.
    std::vector<std::pair<int, int>> edges;
};

/// Throws InvariantViolation (NotUnionOfPaths) if I has a vertex of degree
/// above 2 or a cycle.
InterferenceGraph build_interference_graph(const Instance& inst, const AuxiliaryH& auxh);

/// New position -> old component index. Each path of I becomes a run of
/// consecutive positions starting at its smaller endpoint; runs are ordered by
/// their smallest member.
std::vector<int> component_order(const InterferenceGraph& igraph);

/// Components renumbered by component_order.
AuxiliaryH order_components(const InterferenceGraph& igraph, const AuxiliaryH& auxh);

/// Same interference graph expressed in the numbering of component_order.
InterferenceGraph reorder_interference(const InterferenceGraph& igraph, const std::vector<int>& order);

struct SubInstance {
    Instance instance;
    /// component indices of the auxiliary graph covered by this subinstance.
    std::vector<int> components;
    /// subinstance pair -> pair index in the parent instance.
    std::vector<int> pair_origin;
    /// subinstance vertex -> parent vertex.
    std::vector<Vertex> vertex_map;
};

/// One subinstance per connected component of I: its pairs, on G minus the
/// closed neighbourhoods of every other terminal.
std::vector<SubInstance> decompose_step6(const Instance& inst, const AuxiliaryH& auxh, const InterferenceGraph& igraph);

/// Vertices u in N(s_p) (or N(t_p)) of G_p through which an induced
/// s_p-t_p path exists.
VertexSet through_vertices(const Instance& inst, const std::vector<char>& gp, int p);

/// Conflict vertices on the side of component i against component i+1.
/// Empty for the last component.
VertexSet compute_Wi(const Instance& inst, const AuxiliaryH& auxh, int i);

/// Smallest, then lexicographically first, Z of at most two terminals of
/// component i with W ⊆ N(Z). Throws InvariantViolation (NoCover).
VertexSet compute_Zi(const Instance& inst, const AuxiliaryH& auxh, int i);
VertexSet cover_terminals(const Graph& g, const VertexSet& w, const VertexSet& candidates);

}  // namespace atfp
