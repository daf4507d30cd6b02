#include <algorithm>
#include <map>
#include <memory>

#include "atfp/atfree.hpp"
#include "atfp/errors.hpp"
#include "atfp/idp_dp.hpp"

namespace atfp {

namespace {

constexpr std::size_t kMaxBoundarySet = 10;

/// Calls f on every subset of `pool` with at most kMaxBoundarySet elements, by
/// size and then lexicographically, until f returns true.
template <class F>
bool any_subset(const VertexSet& pool, F&& f) {
    const std::size_t limit = std::min(pool.size(), kMaxBoundarySet);
    for (std::size_t size = 0; size <= limit; ++size) {
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            VertexSet subset;
            for (std::size_t i : idx) subset.push_back(pool[i]);
            if (f(subset)) return true;
            std::size_t pos = size;
            while (pos > 0 && idx[pos - 1] == pool.size() - size + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return false;
}

class SolTable {
public:
    SolTable(const Instance& inst, const AuxiliaryH& auxh) : inst_(inst), auxh_(auxh), solvers_(auxh.components.size()) {}

    bool sol(int i, const VertexSet& y) {
        const auto key = std::make_pair(i, y);
        if (const auto it = memo_.find(key); it != memo_.end()) return it->second.yes;
        Entry e;
        const ComponentSolver& cs = solver(i);
        if (i == 0) {
            e.comp = run(cs, {}, y);
            e.yes = e.comp.yes;
        } else {
            any_subset(solver(i - 1).y_candidates(), [&](const VertexSet& x) {
                if (!sol(i - 1, x)) return false;
                auto res = run(cs, x, y);
                if (!res.yes) return false;
                e = Entry{true, x, std::move(res)};
                return true;
            });
        }
        const bool yes = e.yes;
        memo_.emplace(key, std::move(e));
        return yes;
    }

    /// pair -> path for every pair of the components 0..i, following the
    /// choices made by sol(i, y) = true.
    std::map<int, VertexSeq> paths(int i, VertexSet y) const {
        std::map<int, VertexSeq> out;
        for (; i >= 0; --i) {
            const auto& e = memo_.at({i, y});
            out.insert(e.comp.paths.begin(), e.comp.paths.end());
            y = e.x;
        }
        return out;
    }

    const SolveStats& stats() const { return stats_; }

private:
    struct Entry {
        bool yes = false;
        VertexSet x;
        ComponentResult comp;
    };

    const Instance& inst_;
    const AuxiliaryH& auxh_;
    std::vector<std::unique_ptr<ComponentSolver>> solvers_;
    std::map<std::pair<int, VertexSet>, Entry> memo_;
    SolveStats stats_;

    const ComponentSolver& solver(int i) {
        if (!solvers_[i]) solvers_[i] = std::make_unique<ComponentSolver>(inst_, auxh_, i);
        return *solvers_[i];
    }

    ComponentResult run(const ComponentSolver& cs, const VertexSet& x, const VertexSet& y) {
        auto res = cs.run(x, y);
        ++stats_.component_calls;
        stats_.table_entries += res.stats.entries;
        stats_.max_nprime = std::max(stats_.max_nprime, res.stats.max_nprime);
        return res;
    }
};

void check_terminal_bounds(const Instance& inst) {
    const VertexSet terms = terminal_set(inst);
    for (std::size_t a = 0; a < terms.size(); ++a)
        for (std::size_t b = a + 1; b < terms.size(); ++b) {
            if (!inst.g.adjacent(terms[a], terms[b])) continue;
            for (std::size_t c = b + 1; c < terms.size(); ++c)
                if (inst.g.adjacent(terms[a], terms[c]) && inst.g.adjacent(terms[b], terms[c]))
                    throw InvariantViolation("terminal triangle survives the AT-free check of H");
        }
    std::map<Vertex, int> load;
    for (const auto& [s, t] : inst.pairs) {
        ++load[s];
        ++load[t];
    }
    for (const auto& [v, count] : load)
        if (count > 5) throw InvariantViolation("terminal vertex " + std::to_string(v) + " lies in more than five pairs");
}

void absorb(SolveStats& into, const SolveStats& from) {
    into.table_entries += from.table_entries;
    into.component_calls += from.component_calls;
    into.max_nprime = std::max(into.max_nprime, from.max_nprime);
}

/// Paths for a preprocessed instance, indexed like its pairs.
std::optional<std::vector<VertexSeq>> solve_reduced(const Instance& inst, SolveStats& stats, bool top) {
    if (inst.pairs.empty()) return std::vector<VertexSeq>{};
    const AuxiliaryH auxh = build_H(inst);
    if (step5(auxh) == StepVerdict::No) return std::nullopt;
    check_terminal_bounds(inst);
    const InterferenceGraph ig = build_interference_graph(inst, auxh);
    if (top) {
        stats.components = ig.r;
        stats.interference_edges = static_cast<int>(ig.edges.size());
    }
    auto subs = decompose_step6(inst, auxh, ig);
    std::vector<VertexSeq> out(inst.pairs.size());
    if (subs.size() > 1) {
        for (const auto& sub : subs) {
            auto part = solve_reduced(sub.instance, stats, false);
            if (!part) return std::nullopt;
            for (std::size_t j = 0; j < part->size(); ++j) {
                VertexSeq mapped;
                for (Vertex v : (*part)[j]) mapped.push_back(sub.vertex_map[v]);
                out[sub.pair_origin[j]] = std::move(mapped);
            }
        }
        return out;
    }
    const AuxiliaryH ordered = order_components(ig, auxh);
    SolTable table(inst, ordered);
    const int last = static_cast<int>(ordered.components.size()) - 1;
    const bool yes = table.sol(last, {});
    absorb(stats, table.stats());
    if (!yes) return std::nullopt;
    for (auto& [p, path] : table.paths(last, {})) out[p] = std::move(path);
    return out;
}

}  // namespace

bool sol(const Instance& inst, const AuxiliaryH& auxh, int i, const VertexSet& y) { return SolTable(inst, auxh).sol(i, y); }

IdpResult solve_idp(const Instance& inst) {
    validate_instance(inst);
    if (const auto at = find_asteroidal_triple(inst.g))
        throw PreconditionError(PreconditionKind::NotATFree, "graph has asteroidal triple (" + std::to_string(at->a) + "," +
                                                                  std::to_string(at->b) + "," + std::to_string(at->c) + ")");
    IdpResult res;
    res.stats.n = inst.g.n();
    res.stats.m = inst.g.m();
    res.stats.k = static_cast<int>(inst.pairs.size());
    const PreprocessResult pre = preprocess(inst);
    if (pre.verdict == Verdict::No) return res;
    auto reduced = solve_reduced(pre.instance, res.stats, true);
    if (!reduced) return res;
    Solution solution;
    solution.paths.resize(inst.pairs.size());
    for (std::size_t j = 0; j < reduced->size(); ++j) {
        VertexSeq mapped;
        for (Vertex v : (*reduced)[j]) mapped.push_back(pre.vertex_map[v]);
        solution.paths[pre.pair_origin[j]] = std::move(mapped);
    }
    for (int p : pre.removed_pairs) solution.paths[p] = {inst.pairs[p].s, inst.pairs[p].t};
    for (std::size_t p = 0; p < inst.pairs.size(); ++p) {
        auto& path = solution.paths[p];
        if (!path.empty() && path.front() != inst.pairs[p].s) std::reverse(path.begin(), path.end());
    }
    if (const auto defect = solution_defect(inst, solution))
        throw InvariantViolation("assembled solution fails verification: " + *defect);
    res.yes = true;
    res.solution = std::move(solution);
    return res;
}

}  // namespace atfp
