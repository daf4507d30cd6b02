#include "atfp/idp_dp.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <unordered_map>

#include "atfp/atfree.hpp"
#include "atfp/errors.hpp"

namespace atfp {

std::optional<std::string> solution_defect(const Instance& inst, const Solution& sol) {
    const Graph& g = inst.g;
    if (sol.paths.size() != inst.pairs.size())
        return "expected " + std::to_string(inst.pairs.size()) + " paths, got " + std::to_string(sol.paths.size());
    for (std::size_t i = 0; i < sol.paths.size(); ++i) {
        const auto& p = sol.paths[i];
        const auto [s, t] = inst.pairs[i];
        const std::string who = "path " + std::to_string(i);
        if (p.size() < 2) return who + ": fewer than two vertices";
        const bool forward = p.front() == s && p.back() == t;
        const bool backward = p.front() == t && p.back() == s;
        if (!forward && !backward) return who + ": end-vertices differ from its terminal pair";
        if (!is_induced_path(g, p)) return who + ": not an induced path";
    }
    for (std::size_t i = 0; i < sol.paths.size(); ++i)
        for (std::size_t j = i + 1; j < sol.paths.size(); ++j) {
            const auto& a = sol.paths[i];
            const auto& b = sol.paths[j];
            auto end_of = [](const VertexSeq& p, Vertex v) { return v == p.front() || v == p.back(); };
            const std::string who = "paths " + std::to_string(i) + " and " + std::to_string(j);
            for (std::size_t x = 0; x < a.size(); ++x)
                for (std::size_t y = 0; y < b.size(); ++y) {
                    const Vertex v = a[x];
                    const Vertex w = b[y];
                    const bool v_inner = x != 0 && x + 1 != a.size();
                    const bool w_inner = y != 0 && y + 1 != b.size();
                    if (v == w) {
                        if (v_inner || w_inner) return who + ": share vertex " + std::to_string(v) + " that is not an end of both";
                    } else if (g.adjacent(v, w)) {
                        if (v_inner && !(end_of(a, w) && end_of(b, w)))
                            return who + ": inner vertex " + std::to_string(v) + " is adjacent to " + std::to_string(w);
                        if (w_inner && !(end_of(a, v) && end_of(b, v)))
                            return who + ": inner vertex " + std::to_string(w) + " is adjacent to " + std::to_string(v);
                    }
                }
        }
    return std::nullopt;
}

bool verify_solution(const Instance& inst, const Solution& sol) { return !solution_defect(inst, sol).has_value(); }

TerminalLayout terminal_layout(const Instance& inst, const AuxiliaryH& auxh, int i, const VertexSeq& d) {
    const auto& comp = auxh.components.at(static_cast<std::size_t>(i));
    TerminalLayout lay;
    std::vector<char> on_d(static_cast<std::size_t>(inst.g.n()), 0);
    for (std::size_t q = 0; q < d.size(); ++q) {
        if (auxh.kind[d[q]] == HKind::Terminal) {
            lay.u.push_back(auxh.to_g[d[q]]);
            lay.u_position.push_back(static_cast<int>(q));
            on_d[auxh.to_g[d[q]]] = 1;
        } else {
            lay.O.push_back(auxh.pair_of[d[q]]);
        }
    }
    std::sort(lay.O.begin(), lay.O.end());
    for (Vertex uj : lay.u) {
        VertexSet uset{uj};
        for (Vertex w : comp.terminals)
            if (!on_d[w] && inst.g.adjacent(uj, w)) uset.push_back(w);
        std::sort(uset.begin(), uset.end());
        lay.U.push_back(std::move(uset));
    }
    lay.term.assign(d.size(), -1);
    for (std::size_t q = 0; q < d.size(); ++q) {
        if (auxh.kind[d[q]] == HKind::PathVertex)
            lay.term[q] = auxh.pair_of[d[q]];
        else if (q + 1 < d.size() && auxh.kind[d[q + 1]] == HKind::PathVertex)
            lay.term[q] = auxh.pair_of[d[q + 1]];
    }
    return lay;
}

namespace {

void check_dominating_path_shape(const AuxiliaryH& auxh, const Instance& inst, int i, const VertexSeq& d) {
    const auto& comp = auxh.components[i];
    std::vector<char> on_d(static_cast<std::size_t>(auxh.h.n()), 0);
    for (Vertex v : d) on_d[v] = 1;
    for (int p : comp.pairs) {
        const Vertex hs = auxh.h_of_g[inst.pairs[p].s];
        const Vertex ht = auxh.h_of_g[inst.pairs[p].t];
        if (!on_d[hs] && !on_d[ht])
            throw InvariantViolation("dominating path misses both terminals of pair " + std::to_string(p));
    }
    for (Vertex v : d) {
        int off_path_vertices = 0, off_terminals = 0;
        for (Vertex w : auxh.h.neighbors(v)) {
            if (on_d[w]) continue;
            (auxh.kind[w] == HKind::PathVertex ? off_path_vertices : off_terminals)++;
        }
        if (off_path_vertices > 5 || off_terminals > 2)
            throw InvariantViolation("dominating path vertex has " + std::to_string(off_path_vertices) +
                                     " off-path path-vertices and " + std::to_string(off_terminals) + " off-path terminals");
    }
}

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = v.size();
        for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace

ComponentSolver::ComponentSolver(const Instance& inst, const AuxiliaryH& auxh, int i) : inst_(inst), auxh_(auxh), index_(i) {
    const auto& comp = auxh.components.at(static_cast<std::size_t>(i));
    const int n = inst.g.n();
    const auto hc = induced_subgraph(auxh.h, comp.h_vertices);
    VertexSet restrict, priority;
    for (std::size_t v = 0; v < hc.to_parent.size(); ++v)
        (auxh.kind[hc.to_parent[v]] == HKind::Terminal ? restrict : priority).push_back(static_cast<Vertex>(v));
    const auto dp = find_dominating_pair(hc.graph, restrict);
    if (!dp) throw InvariantViolation("component " + std::to_string(i) + " has no dominating pair of terminals");
    for (Vertex v : dominating_path(hc.graph, dp->first, dp->second, priority)) d_.push_back(hc.to_parent[v]);
    check_dominating_path_shape(auxh, inst, i, d_);
    layout_ = terminal_layout(inst, auxh, i, d_);
    z_ = compute_Zi(inst, auxh, i);

    terminal_ = to_mask(n, terminal_set(inst));
    f_.assign(static_cast<std::size_t>(n), 1);
    for (std::size_t j = 0; j < auxh.components.size(); ++j) {
        if (static_cast<int>(j) == i) continue;
        for (Vertex u : auxh.components[j].terminals) {
            f_[u] = 0;
            for (Vertex w : inst.g.neighbors(u)) f_[w] = 0;
        }
    }
    for (Vertex t : comp.terminals)
        if (!f_[t]) throw InvariantViolation("terminal " + std::to_string(t) + " lies next to another component");
    in_nz_.assign(static_cast<std::size_t>(n), 0);
    for (Vertex zv : z_)
        for (Vertex w : inst.g.neighbors(zv)) in_nz_[w] = 1;

    gmask_.assign(inst.pairs.size(), {});
    for (int p : comp.pairs) gmask_[p] = gi_mask(inst, p);
    for (Vertex v = 0; v < n; ++v) {
        if (!in_nz_[v] || terminal_[v] || !f_[v]) continue;
        if (std::any_of(comp.pairs.begin(), comp.pairs.end(), [&](int p) { return gmask_[p][v] != 0; }))
            y_candidates_.push_back(v);
    }

    d_vertex_.assign(d_.size(), -1);
    d_position_.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t q = 0; q < d_.size(); ++q)
        if (auxh.kind[d_[q]] == HKind::Terminal) {
            d_vertex_[q] = auxh.to_g[d_[q]];
            d_position_[d_vertex_[q]] = static_cast<int>(q);
        }
    std::vector<int> off;
    for (int p : comp.pairs)
        if (!std::binary_search(layout_.O.begin(), layout_.O.end(), p)) off.push_back(p);
    touched_.assign(d_.size(), {});
    for (std::size_t j = 0; j < layout_.u.size(); ++j) {
        const auto& uset = layout_.U[j];
        for (int p : off)
            if (std::binary_search(uset.begin(), uset.end(), inst.pairs[p].s) ||
                std::binary_search(uset.begin(), uset.end(), inst.pairs[p].t))
                touched_[layout_.u_position[j]].push_back(p);
    }
    for (int p : off) {
        const auto [s, t] = inst.pairs[p];
        const auto& gm = gmask_[p];
        auto& list = candidates_[p];
        for (Vertex w : inst.g.neighbors(s))
            if (gm[w] && w != t && inst.g.adjacent(w, t)) list.push_back({w});
        for (Vertex a : inst.g.neighbors(s)) {
            if (!gm[a] || a == t || inst.g.adjacent(a, t)) continue;
            for (Vertex b : inst.g.neighbors(a))
                if (gm[b] && b != s && b != t && inst.g.adjacent(b, t) && !inst.g.adjacent(b, s)) list.push_back({a, b});
        }
    }
}

/// One table construction for fixed (X, Y).
class ComponentRun {
public:
    ComponentRun(const ComponentSolver& s, const VertexSet& x, const VertexSet& y) : s_(s), g_(s.inst_.g) {
        const int n = g_.n();
        std::vector<char> near_x(static_cast<std::size_t>(n), 0), in_y = to_mask(n, y);
        for (Vertex v : x) {
            near_x[v] = 1;
            for (Vertex w : g_.neighbors(v)) near_x[w] = 1;
        }
        usable_.assign(static_cast<std::size_t>(n), 0);
        for (Vertex v = 0; v < n; ++v)
            usable_[v] = s.f_[v] && !s.terminal_[v] && !near_x[v] && (!s.in_nz_[v] || in_y[v]);
        for (const auto& [p, list] : s.candidates_) {
            auto& ok = usable_candidates_[p];
            for (std::size_t c = 0; c < list.size(); ++c)
                if (std::all_of(list[c].begin(), list[c].end(), [&](Vertex v) { return usable_[v] != 0; }))
                    ok.push_back(static_cast<int>(c));
        }
    }

    ComponentResult run() {
        const Vertex x0 = s_.d_vertex_.front();
        State init;
        init.r[0] = x0;
        init.rlen = 1;
        init.z = 0;
        const auto fresh = touched(init);
        for (auto& combo : combinations(fresh, forbidden_for(init, init, {})))
            emit(init, std::move(combo), -1, -1, 0);
        std::size_t begin = 0;
        const int last = static_cast<int>(s_.d_.size()) - 1;
        while (begin < nodes_.size()) {
            const std::size_t end = nodes_.size();
            for (std::size_t id = begin; id < end; ++id) {
                if (nodes_[id].st.z == last) return finish(static_cast<int>(id));
                expand(static_cast<int>(id));
            }
            begin = end;
        }
        ComponentResult out;
        out.stats = stats_;
        return out;
    }

private:
    using Assignment = std::vector<std::pair<int, int>>;

    struct State {
        std::array<Vertex, 5> r{};
        int rlen = 0;
        int z = 0;
        /// (pair, candidate index), sorted by pair.
        Assignment np;
    };

    struct Node {
        State st;
        int parent = -1;
        Vertex u = -1;
        int ell = 0;
        Assignment added;
    };

    const ComponentSolver& s_;
    const Graph& g_;
    std::vector<char> usable_;
    std::map<int, std::vector<int>> usable_candidates_;
    std::vector<Node> nodes_;
    std::unordered_map<std::vector<int>, int, VecHash> seen_;
    ComponentStats stats_;

    const VertexSeq& inner(int pair, int cand) const { return s_.candidates_.at(pair)[cand]; }

    std::vector<int> touched(const State& st) const {
        std::vector<int> out;
        for (int k = 0; k < st.rlen; ++k) {
            const int q = s_.d_position_[st.r[k]];
            if (q >= 0 && s_.terminal_[st.r[k]]) out.insert(out.end(), s_.touched_[q].begin(), s_.touched_[q].end());
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    VertexSet nprime_vertices(const Assignment& np) const {
        VertexSet out;
        for (auto [p, c] : np) out.insert(out.end(), inner(p, c).begin(), inner(p, c).end());
        return out;
    }

    /// Non-terminal window vertices of both windows plus the stored path vertices.
    VertexSet forbidden_for(const State& a, const State& b, const Assignment& np) const {
        VertexSet out = nprime_vertices(np);
        for (const State* st : {&a, &b})
            for (int k = 0; k < st->rlen; ++k)
                if (!s_.terminal_[st->r[k]]) out.push_back(st->r[k]);
        return out;
    }

    bool clashes(const VertexSeq& vs, const VertexSet& against) const {
        for (Vertex v : vs)
            for (Vertex w : against)
                if (v == w || g_.adjacent(v, w)) return true;
        return false;
    }

    /// Every choice of one candidate per pair in `pairs`, pairwise clash-free
    /// and clear of `forbidden`.
    std::vector<Assignment> combinations(const std::vector<int>& pairs, const VertexSet& forbidden) const {
        std::vector<Assignment> out;
        Assignment cur;
        VertexSet used = forbidden;
        std::function<void(std::size_t)> rec = [&](std::size_t idx) {
            if (idx == pairs.size()) {
                out.push_back(cur);
                return;
            }
            const int p = pairs[idx];
            const auto it = usable_candidates_.find(p);
            if (it == usable_candidates_.end()) return;
            for (int c : it->second) {
                const auto& vs = inner(p, c);
                if (clashes(vs, used)) continue;
                cur.emplace_back(p, c);
                used.insert(used.end(), vs.begin(), vs.end());
                rec(idx + 1);
                used.resize(used.size() - vs.size());
                cur.pop_back();
            }
        };
        rec(0);
        return out;
    }

    static std::vector<int> key_of(const State& st) {
        std::vector<int> key{st.z, st.rlen};
        key.insert(key.end(), st.r.begin(), st.r.begin() + st.rlen);
        for (auto [p, c] : st.np) {
            key.push_back(p);
            key.push_back(c);
        }
        return key;
    }

    void emit(const State& base, Assignment added, int parent, Vertex u, int ell) {
        State st = base;
        st.np.insert(st.np.end(), added.begin(), added.end());
        std::sort(st.np.begin(), st.np.end());
        const int size = static_cast<int>(nprime_vertices(st.np).size());
        stats_.max_nprime = std::max(stats_.max_nprime, size);
        if (size > ComponentSolver::kMaxNPrime) {
            ++stats_.dropped;
            return;
        }
        auto key = key_of(st);
        if (seen_.count(key)) return;
        seen_.emplace(std::move(key), static_cast<int>(nodes_.size()));
        nodes_.push_back(Node{std::move(st), parent, u, ell, std::move(added)});
        ++stats_.entries;
    }

    /// Window after appending u, and whether a terminal dropped off the front.
    static std::pair<State, bool> slide(const State& st, Vertex u, const std::vector<char>& terminal) {
        State out = st;
        bool terminal_left = false;
        if (out.rlen == 5) {
            terminal_left = terminal[out.r[0]] != 0;
            std::rotate(out.r.begin(), out.r.begin() + 1, out.r.end());
            out.r[4] = u;
        } else {
            out.r[out.rlen++] = u;
        }
        return {out, terminal_left};
    }

    void prune(State& st) const {
        const auto keep = touched(st);
        std::erase_if(st.np, [&](const std::pair<int, int>& e) { return !std::binary_search(keep.begin(), keep.end(), e.first); });
    }

    void expand(int id) {
        const State st = nodes_[id].st;
        const int ell = nodes_[id].ell + 1;
        const Vertex last = st.r[st.rlen - 1];
        const int zpos = st.z;
        const bool z_is_path = s_.d_vertex_[zpos] == -1;
        const VertexSet np_vertices = nprime_vertices(st.np);
        for (Vertex u : g_.neighbors(last)) {
            if (!s_.f_[u]) continue;
            bool bad = false;
            for (int k = 0; k + 1 < st.rlen && !bad; ++k) bad = st.r[k] == u || g_.adjacent(st.r[k], u);
            if (bad) continue;
            if (!s_.terminal_[u]) {
                // Non-terminal u subdivides the path-vertex at or after z.
                const int pair = s_.layout_.term[zpos];
                if (pair < 0 || !usable_[u] || !s_.gmask_[pair][u]) continue;
                if (clashes({u}, np_vertices)) continue;
                auto [next, terminal_left] = slide(st, u, s_.terminal_);
                next.z = z_is_path ? zpos : zpos + 1;
                if (terminal_left) prune(next);
                emit(next, {}, id, u, ell);
            } else {
                // Terminal u must be the next vertex of D.
                if (zpos + 1 >= static_cast<int>(s_.d_.size()) || s_.d_vertex_[zpos + 1] != u) continue;
                auto [next, terminal_left] = slide(st, u, s_.terminal_);
                next.z = zpos + 1;
                if (terminal_left) prune(next);
                const auto before = touched(st);
                std::vector<int> fresh;
                for (int p : touched(next))
                    if (!std::binary_search(before.begin(), before.end(), p)) fresh.push_back(p);
                VertexSet forbidden = forbidden_for(st, next, st.np);
                for (auto& combo : combinations(fresh, forbidden)) emit(next, std::move(combo), id, u, ell);
            }
        }
    }

    ComponentResult finish(int accept) {
        ComponentResult out;
        out.yes = true;
        out.stats = stats_;
        std::vector<int> chain;
        for (int id = accept; id != -1; id = nodes_[id].parent) chain.push_back(id);
        std::reverse(chain.begin(), chain.end());
        out.d_prime.push_back(nodes_[chain.front()].st.r[0]);
        const auto& inst = s_.inst_;
        for (int id : chain) {
            if (nodes_[id].u != -1) out.d_prime.push_back(nodes_[id].u);
            for (auto [p, c] : nodes_[id].added) {
                VertexSeq path{inst.pairs[p].s};
                const auto& vs = inner(p, c);
                path.insert(path.end(), vs.begin(), vs.end());
                path.push_back(inst.pairs[p].t);
                out.paths[p] = std::move(path);
            }
        }
        for (std::size_t q = 0; q < s_.d_.size(); ++q) {
            if (s_.d_vertex_[q] != -1) continue;
            const int p = s_.auxh_.pair_of[s_.d_[q]];
            const Vertex left = s_.d_vertex_[q - 1];
            const Vertex right = s_.d_vertex_[q + 1];
            const auto a = std::find(out.d_prime.begin(), out.d_prime.end(), left);
            const auto b = std::find(out.d_prime.begin(), out.d_prime.end(), right);
            VertexSeq seg(a, b + 1);
            if (left != inst.pairs[p].s) std::reverse(seg.begin(), seg.end());
            out.paths[p] = std::move(seg);
        }
        check_subdivision_shape(out);
        return out;
    }

    /// Off-D paths have length at most 3; D' misses at most two vertices of
    /// the embedded subgraph.
    void check_subdivision_shape(const ComponentResult& res) const {
        const auto& comp = s_.auxh_.components[s_.index_];
        std::vector<char> on_d = to_mask(g_.n(), {});
        for (Vertex v : res.d_prime) on_d[v] = 1;
        VertexSet hprime = comp.terminals;
        for (const auto& [p, path] : res.paths) {
            if (!std::binary_search(s_.layout_.O.begin(), s_.layout_.O.end(), p) && path.size() > 4)
                throw InvariantViolation("off-path pair " + std::to_string(p) + " got a path longer than 3");
            hprime.insert(hprime.end(), path.begin(), path.end());
        }
        std::sort(hprime.begin(), hprime.end());
        hprime.erase(std::unique(hprime.begin(), hprime.end()), hprime.end());
        int missed = 0;
        for (Vertex v : hprime) {
            if (on_d[v]) continue;
            const auto& nb = g_.neighbors(v);
            if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return on_d[w] != 0; })) ++missed;
        }
        if (missed > 2) throw InvariantViolation("traced path misses " + std::to_string(missed) + " vertices of the embedding");
    }
};

ComponentResult ComponentSolver::run(const VertexSet& x, const VertexSet& y) const { return ComponentRun(*this, x, y).run(); }

ComponentResult component(const Instance& inst, const AuxiliaryH& auxh, int i, const VertexSet& x, const VertexSet& y) {
    return ComponentSolver(inst, auxh, i).run(x, y);
}

}  // namespace atfp
