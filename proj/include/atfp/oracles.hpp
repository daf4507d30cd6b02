#pragma once

#include <optional>
#include <vector>

#include "atfp/graph.hpp"

namespace atfp::oracle {

// Exhaustive reference solvers. They depend on the graph core only.

struct IdpAnswer {
    bool yes = false;
    /// One path per pair when yes.
    std::vector<VertexSeq> paths;
};

/// Paths are pairwise mutually induced and each is an induced s-t path.
bool check_paths(const Graph& g, const std::vector<Edge>& pairs, const std::vector<VertexSeq>& paths);

/// Backtracking over induced paths per pair. Throws PreconditionError
/// (TooLarge) when g has more than max_n vertices.
IdpAnswer idp(const Graph& g, const std::vector<Edge>& pairs, int max_n = 12);

bool k_in_a_path(const Graph& g, const VertexSet& terminals, int max_n = 12);
bool k_in_a_tree(const Graph& g, const VertexSet& terminals, int max_n = 12);
bool k_in_a_cycle(const Graph& g, const VertexSet& terminals, int max_n = 12);

bool clique(const Graph& g, int k);
int mis(const Graph& g);

/// Some induced subgraph of g is a subdivision of h. When `anchors` is given,
/// anchors[v] is the required image of pattern vertex v.
bool induced_subdivision(const Graph& g, const Graph& h, const std::optional<std::vector<Vertex>>& anchors = std::nullopt,
                         int max_n = 12);

/// Is h an induced subgraph of g (exact backtracking)?
bool induced_subgraph_of(const Graph& g, const Graph& h);

}  // namespace atfp::oracle
