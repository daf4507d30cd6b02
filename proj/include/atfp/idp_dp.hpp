#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atfp/graph.hpp"
#include "atfp/preprocess.hpp"
#include "atfp/structure.hpp"

namespace atfp {

/// One vertex sequence per pair, in pair order, each running from s_i to t_i.
struct Solution {
    std::vector<VertexSeq> paths;
    friend bool operator==(const Solution&, const Solution&) = default;
};

/// First violated condition, or nullopt when `sol` is a valid solution.
std::optional<std::string> solution_defect(const Instance& inst, const Solution& sol);
bool verify_solution(const Instance& inst, const Solution& sol);

/// Terminals on a dominating path D (h ids) of one component and the sets
/// derived from them. Vertex ids are G ids.
struct TerminalLayout {
    /// u_1..u_p in path order.
    VertexSeq u;
    /// D positions of u_1..u_p.
    std::vector<int> u_position;
    /// U_j: u_j plus its terminal neighbours that are not on D.
    std::vector<VertexSet> U;
    /// Pairs whose path-vertex lies on D, ascending.
    std::vector<int> O;
    /// Per D position: the pair whose path-vertex is at or right after it, or -1.
    std::vector<int> term;
};

TerminalLayout terminal_layout(const Instance& inst, const AuxiliaryH& auxh, int i, const VertexSeq& d);

struct ComponentStats {
    long long entries = 0;
    /// Largest |N'| of any constructed entry, kept or not.
    int max_nprime = 0;
    /// Entries discarded for |N'| > 47.
    long long dropped = 0;
};

struct ComponentResult {
    bool yes = false;
    /// pair index -> path from s to t, G ids.
    std::map<int, VertexSeq> paths;
    /// The traced subdivision of D.
    VertexSeq d_prime;
    ComponentStats stats;
};

/// The table-filling subroutine for one component of an ordered auxiliary
/// graph. Construction computes D, its layout, F and Z once; run() answers
/// one (X, Y) query.
class ComponentSolver {
public:
    static constexpr int kMaxNPrime = 47;

    ComponentSolver(const Instance& inst, const AuxiliaryH& auxh, int i);

    ComponentResult run(const VertexSet& x, const VertexSet& y) const;

    /// h ids.
    const VertexSeq& d() const { return d_; }
    const TerminalLayout& layout() const { return layout_; }
    const VertexSet& z_set() const { return z_; }
    /// Non-terminal vertices of N(Z) that some path of this component may use;
    /// the candidate pool for Y.
    const VertexSet& y_candidates() const { return y_candidates_; }

private:
    struct Candidate {
        int pair;
        VertexSeq inner;
    };

    const Instance& inst_;
    const AuxiliaryH& auxh_;
    int index_;
    VertexSeq d_;
    TerminalLayout layout_;
    VertexSet z_;
    VertexSet y_candidates_;
    std::vector<char> f_;
    std::vector<char> terminal_;
    std::vector<char> in_nz_;
    /// D position -> terminal G id, or -1 at path-vertices.
    std::vector<Vertex> d_vertex_;
    /// G vertex -> D position for terminals on D, else -1.
    std::vector<int> d_position_;
    /// D position -> off-D pairs touched by its U set.
    std::vector<std::vector<int>> touched_;
    /// pair -> G_pair mask (only pairs of this component are filled).
    std::vector<std::vector<char>> gmask_;
    /// pair -> candidate inner vertex sequences of length-2 and length-3 paths.
    std::map<int, std::vector<VertexSeq>> candidates_;

    friend class ComponentRun;
};

/// Convenience wrapper: ComponentSolver(inst, auxh, i).run(x, y).
ComponentResult component(const Instance& inst, const AuxiliaryH& auxh, int i, const VertexSet& x, const VertexSet& y);

struct SolveStats {
    int n = 0;
    std::size_t m = 0;
    int k = 0;
    int components = 0;
    int interference_edges = 0;
    long long table_entries = 0;
    int max_nprime = 0;
    long long component_calls = 0;
};

struct IdpResult {
    bool yes = false;
    std::optional<Solution> solution;
    SolveStats stats;
};

/// Sol(i, Y) on an ordered auxiliary graph whose interference graph is a
/// single path.
bool sol(const Instance& inst, const AuxiliaryH& auxh, int i, const VertexSet& y);

/// Decides and, on yes, solves an instance on an AT-free graph. The returned
/// solution is checked against the input. Throws PreconditionError(NotATFree),
/// InvalidInstance, or InvariantViolation.
IdpResult solve_idp(const Instance& inst);

}  // namespace atfp
