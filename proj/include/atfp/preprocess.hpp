#pragma once

#include <vector>

#include "atfp/graph.hpp"

namespace atfp {

struct TerminalPair {
    Vertex s = 0;
    Vertex t = 0;
    friend bool operator==(const TerminalPair&, const TerminalPair&) = default;
};

struct Instance {
    Graph g;
    std::vector<TerminalPair> pairs;
};

/// Sorted set of all terminal vertices.
VertexSet terminal_set(const Instance& inst);

/// Throws InvalidInstance on out-of-range terminals, s == t, or a repeated
/// unordered pair.
void validate_instance(const Instance& inst);

/// Result of a vertex- or pair-removing reduction.
struct Reduction {
    Instance instance;
    /// reduced vertex -> input vertex.
    std::vector<Vertex> vertex_map;
    /// reduced pair -> input pair index.
    std::vector<int> kept_pairs;
    /// input pair indices that were dropped.
    std::vector<int> removed_pairs;
};

/// Deletes non-terminal common neighbours of adjacent terminals.
Reduction step1(const Instance& inst);
/// Repeatedly deletes terminals all of whose partners are neighbours, with
/// their non-terminal neighbours and pairs.
Reduction step2(const Instance& inst);
/// Drops pairs whose terminals are adjacent.
Reduction step3(const Instance& inst);

/// Mask of V(G_i): vertices outside N[T \ {s_i, t_i}], plus s_i and t_i.
std::vector<char> gi_mask(const Instance& inst, int i);
Subgraph build_Gi(const Instance& inst, int i);

enum class StepVerdict { Ok, No };

/// No iff some pair is disconnected inside its own G_i.
StepVerdict step4(const Instance& inst);

enum class Verdict { Reduced, No };

struct PreprocessResult {
    Instance instance;
    /// Input pair indices dropped by Steps 2 and 3, ascending. Each is realised
    /// by the edge s t.
    std::vector<int> removed_pairs;
    /// reduced pair -> input pair index.
    std::vector<int> pair_origin;
    /// reduced vertex -> input vertex.
    std::vector<Vertex> vertex_map;
    Verdict verdict = Verdict::Reduced;
};

PreprocessResult preprocess(const Instance& inst);

/// G[keep] with the pairs whose terminals both survive; the rest are listed
/// in removed_pairs.
Reduction restrict_instance(const Instance& inst, const VertexSet& keep);

}  // namespace atfp
