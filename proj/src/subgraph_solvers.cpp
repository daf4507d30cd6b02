#include "atfp/subgraph_solvers.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "atfp/atfree.hpp"
#include "atfp/errors.hpp"

namespace atfp {

namespace {

void require_at_free(const Graph& g) {
    if (auto at = find_asteroidal_triple(g))
        throw PreconditionError(PreconditionKind::NotATFree, "graph has an asteroidal triple (" + std::to_string(at->a) +
                                                                 ", " + std::to_string(at->b) + ", " +
                                                                 std::to_string(at->c) + ")");
}

VertexSet normalized(const Graph& g, VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (Vertex v : s)
        if (!g.contains(v)) throw PreconditionError(PreconditionKind::PreconditionViolated, "terminal out of range");
    return s;
}

bool induces_tree(const Graph& g, const VertexSet& vs) {
    if (vs.empty()) return true;
    const auto sub = induced_subgraph(g, vs);
    return sub.graph.m() + 1 == static_cast<std::size_t>(sub.graph.n()) && is_connected(sub.graph);
}

enum class Shape { Path, Tree };

struct DpState {
    int r;
    VertexSeq window;
    int parent;
};

// Both DPs trace a central path from a starting terminal. A state is (r, R):
// r counts terminals already settled and R is the last <= 5 path vertices.
// Transitions look at nothing else, so a state is expanded once.
std::optional<VertexSeq> trace_central_path(const Graph& g, const VertexSet& s, Shape shape) {
    const int k = static_cast<int>(s.size());
    const auto is_term = to_mask(g.n(), s);
    std::vector<DpState> states;
    std::map<std::pair<int, VertexSeq>, int> seen;
    std::deque<int> queue;

    auto unfold = [&](int id) {
        VertexSeq path;
        for (int at = id; at != -1; at = states[at].parent) path.push_back(states[at].window.back());
        std::reverse(path.begin(), path.end());
        return path;
    };

    for (Vertex x : s) {
        states.push_back({1, {x}, -1});
        seen.emplace(std::make_pair(1, VertexSeq{x}), static_cast<int>(states.size()) - 1);
        if (k == 1) return unfold(static_cast<int>(states.size()) - 1);
        queue.push_back(static_cast<int>(states.size()) - 1);
    }

    while (!queue.empty()) {
        const int id = queue.front();
        queue.pop_front();
        const VertexSeq win = states[id].window;
        const int r = states[id].r;
        const Vertex w = win.back();

        VertexSet a = ahead_set(g, win, s);
        a.erase(std::remove(a.begin(), a.end(), w), a.end());
        const auto in_a = to_mask(g.n(), a);

        // Terminals hanging off the window away from its head.
        std::vector<char> settled(static_cast<std::size_t>(g.n()), 0);
        for (std::size_t q = 0; q + 1 < win.size(); ++q) {
            if (is_term[win[q]]) settled[win[q]] = 1;
            for (Vertex y : g.neighbors(win[q]))
                if (is_term[y]) settled[y] = 1;
        }

        for (Vertex v : g.neighbors(w)) {
            if (std::find(win.begin(), win.end(), v) != win.end()) continue;
            bool ok = true;
            for (std::size_t q = 0; q + 1 < win.size() && ok; ++q) ok = !g.adjacent(v, win[q]);
            if (!ok) continue;

            VertexSet leaves;
            if (shape == Shape::Tree) {
                for (Vertex y : g.neighbors(v))
                    if (settled[y] && y != w) ok = false;
                if (!ok) continue;
                for (Vertex u : g.neighbors(w))
                    if (in_a[u] && u != v) leaves.push_back(u);
                for (std::size_t i = 0; i < leaves.size() && ok; ++i) {
                    const Vertex u = leaves[i];
                    if (g.adjacent(u, v)) ok = false;
                    for (std::size_t q = 0; q + 1 < win.size() && ok; ++q) ok = !g.adjacent(u, win[q]);
                    for (Vertex y : g.neighbors(u))
                        if (settled[y] && y != w) ok = false;
                    for (std::size_t j = i + 1; j < leaves.size() && ok; ++j) ok = !g.adjacent(u, leaves[j]);
                }
                if (!ok) continue;
            }

            VertexSet a_next;
            for (Vertex y : a)
                if (y != v && !std::binary_search(leaves.begin(), leaves.end(), y)) a_next.push_back(y);
            VertexSeq grown = win;
            grown.push_back(v);
            VertexSet expect = ahead_set(g, grown, s);
            expect.erase(std::remove(expect.begin(), expect.end(), v), expect.end());
            if (expect != a_next) continue;

            const int r_next = r + static_cast<int>(a.size() - a_next.size());
            if (grown.size() > 5) grown.erase(grown.begin());
            auto [it, fresh] = seen.emplace(std::make_pair(r_next, grown), static_cast<int>(states.size()));
            if (!fresh) continue;
            states.push_back({r_next, grown, id});
            if (r_next == k) return unfold(it->second);
            queue.push_back(it->second);
        }
    }
    return std::nullopt;
}

void collect_independent(const Graph& g, std::vector<char>& alive, VertexSet& chosen, VertexSet& best) {
    // Some vertex of N[v] lies in every maximal independent set; branch on it
    // for the live vertex v of least live degree.
    Vertex pick = -1;
    int pick_deg = 0;
    int live = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (!alive[v]) continue;
        ++live;
        int d = 0;
        for (Vertex w : g.neighbors(v)) d += alive[w];
        if (pick == -1 || d < pick_deg) {
            pick = v;
            pick_deg = d;
        }
    }
    if (chosen.size() + static_cast<std::size_t>(live) <= best.size()) return;
    if (pick == -1) {
        best = chosen;
        return;
    }
    VertexSet branch{pick};
    for (Vertex w : g.neighbors(pick))
        if (alive[w]) branch.push_back(w);
    if (pick_deg == 0) branch.resize(1);
    for (Vertex b : branch) {
        std::vector<Vertex> killed;
        if (alive[b]) {
            killed.push_back(b);
            alive[b] = 0;
        }
        for (Vertex w : g.neighbors(b))
            if (alive[w]) {
                killed.push_back(w);
                alive[w] = 0;
            }
        chosen.push_back(b);
        collect_independent(g, alive, chosen, best);
        chosen.pop_back();
        for (Vertex w : killed) alive[w] = 1;
    }
}

// Induced s-t paths with two or three inner vertices.
std::vector<VertexSeq> long_paths(const Graph& g, Vertex s, Vertex t) {
    std::vector<VertexSeq> out;
    VertexSeq cur{s};
    auto dfs = [&](auto&& self) -> void {
        const Vertex last = cur.back();
        if (cur.size() >= 3 && g.adjacent(last, t)) {
            cur.push_back(t);
            if (is_induced_path(g, cur)) out.push_back(cur);
            cur.pop_back();
        }
        if (cur.size() == 4) return;
        for (Vertex w : g.neighbors(last)) {
            if (w == t || std::find(cur.begin(), cur.end(), w) != cur.end()) continue;
            cur.push_back(w);
            self(self);
            cur.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

}  // namespace

VertexSet ahead_set(const Graph& g, const VertexSeq& r, const VertexSet& terminals) {
    if (r.empty()) return {};
    std::vector<char> allowed(static_cast<std::size_t>(g.n()), 1);
    for (std::size_t q = 0; q + 1 < r.size(); ++q) {
        allowed[r[q]] = 0;
        for (Vertex w : g.neighbors(r[q])) allowed[w] = 0;
    }
    allowed[r.back()] = 1;
    const auto label = component_labels(g, allowed);
    VertexSet out;
    for (Vertex t : terminals)
        if (label[t] != -1 && label[t] == label[r.back()]) out.push_back(t);
    std::sort(out.begin(), out.end());
    return out;
}

PathAnswer k_in_a_path(const Graph& g, const VertexSet& terminals) {
    require_at_free(g);
    const auto s = normalized(g, terminals);
    if (s.empty()) return {true, VertexSeq{}};
    auto path = trace_central_path(g, s, Shape::Path);
    if (!path) return {};
    const auto on = to_mask(g.n(), *path);
    const bool covers = std::all_of(s.begin(), s.end(), [&](Vertex v) { return on[v] != 0; });
    if (!is_induced_path(g, *path) || !covers)
        throw InvariantViolation("k_in_a_path: traced sequence is not an induced path through every terminal");
    return {true, std::move(path)};
}

TreeAnswer k_in_a_tree(const Graph& g, const VertexSet& terminals) {
    require_at_free(g);
    const auto s = normalized(g, terminals);
    if (s.empty()) return {true, VertexSet{}};
    auto path = trace_central_path(g, s, Shape::Tree);
    if (!path) return {};
    VertexSet vs = *path;
    vs.insert(vs.end(), s.begin(), s.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (!induces_tree(g, vs) || !is_caterpillar(induced_subgraph(g, vs).graph))
        throw InvariantViolation("k_in_a_tree: traced caterpillar does not induce a tree");
    return {true, std::move(vs)};
}

CycleAnswer k_in_a_cycle(const Graph& g, const VertexSet& terminals) {
    require_at_free(g);
    const auto s = normalized(g, terminals);
    if (s.size() > 5) return {};
    const auto is_term = to_mask(g.n(), s);
    VertexSeq others;
    for (Vertex v = 0; v < g.n(); ++v)
        if (!is_term[v]) others.push_back(v);

    auto as_cycle = [&](const VertexSet& vs) -> std::optional<VertexSeq> {
        const auto on = to_mask(g.n(), vs);
        for (Vertex v : vs) {
            int d = 0;
            for (Vertex w : g.neighbors(v)) d += on[w];
            if (d != 2) return std::nullopt;
        }
        VertexSeq cyc{vs.front()};
        Vertex prev = -1;
        while (true) {
            Vertex next = -1;
            for (Vertex w : g.neighbors(cyc.back()))
                if (on[w] && w != prev) {
                    next = w;
                    break;
                }
            if (next == vs.front()) break;
            prev = cyc.back();
            cyc.push_back(next);
        }
        if (cyc.size() != vs.size()) return std::nullopt;
        return cyc;
    };

    for (std::size_t size = std::max<std::size_t>(3, s.size()); size <= 5; ++size) {
        const std::size_t extra = size - s.size();
        if (extra > others.size()) break;
        std::vector<char> take(others.size(), 0);
        std::fill(take.begin(), take.begin() + static_cast<std::ptrdiff_t>(extra), 1);
        // prev_permutation over a 1..10..0 mask walks the combinations in lexicographic order.
        do {
            VertexSet vs = s;
            for (std::size_t i = 0; i < others.size(); ++i)
                if (take[i]) vs.push_back(others[i]);
            std::sort(vs.begin(), vs.end());
            if (auto cyc = as_cycle(vs)) return {true, std::move(cyc)};
        } while (std::prev_permutation(take.begin(), take.end()));
    }
    return {};
}

VertexSet maximum_independent_set(const Graph& g, const VertexSet& within) {
    std::vector<char> alive = to_mask(g.n(), within);
    VertexSet chosen, best;
    collect_independent(g, alive, chosen, best);
    std::sort(best.begin(), best.end());
    return best;
}

CoincidingAnswer coinciding_pairs(const Graph& g, Vertex s, Vertex t, int k) {
    if (!g.contains(s) || !g.contains(t) || s == t || k < 1)
        throw PreconditionError(PreconditionKind::PreconditionViolated, "coinciding_pairs needs distinct in-range s, t and k >= 1");
    require_at_free(g);
    Instance inst{g, std::vector<TerminalPair>(static_cast<std::size_t>(k), TerminalPair{s, t})};
    auto certified = [&](Solution sol) {
        if (auto defect = solution_defect(inst, sol)) throw InvariantViolation("coinciding_pairs: " + *defect);
        return CoincidingAnswer{true, std::move(sol)};
    };

    if (k == 1) {
        auto p = bfs_shortest_path(g, s, t);
        if (!p) return {};
        return certified(Solution{{*p}});
    }
    // An edge st is a chord of every longer s-t path.
    if (g.adjacent(s, t)) return {};

    const auto longs = long_paths(g, s, t);
    auto try_with = [&](const std::vector<VertexSeq>& fixed) -> std::optional<Solution> {
        const int need = k - static_cast<int>(fixed.size());
        if (need < 0) return std::nullopt;
        std::vector<char> gone(static_cast<std::size_t>(g.n()), 0);
        for (const auto& p : fixed)
            for (std::size_t q = 1; q + 1 < p.size(); ++q) {
                gone[p[q]] = 1;
                for (Vertex w : g.neighbors(p[q])) gone[w] = 1;
            }
        gone[s] = gone[t] = 0;
        VertexSet common;
        for (Vertex a : g.neighbors(s))
            if (!gone[a] && g.adjacent(a, t)) common.push_back(a);
        const auto mis = maximum_independent_set(g, common);
        if (static_cast<int>(mis.size()) < need) return std::nullopt;
        Solution sol{fixed};
        for (int i = 0; i < need; ++i) sol.paths.push_back({s, mis[static_cast<std::size_t>(i)], t});
        return sol;
    };

    if (auto sol = try_with({})) return certified(std::move(*sol));
    for (std::size_t i = 0; i < longs.size(); ++i)
        if (auto sol = try_with({longs[i]})) return certified(std::move(*sol));
    Instance two{g, {TerminalPair{s, t}, TerminalPair{s, t}}};
    for (std::size_t i = 0; i < longs.size(); ++i)
        for (std::size_t j = i + 1; j < longs.size(); ++j) {
            if (!verify_solution(two, Solution{{longs[i], longs[j]}})) continue;
            if (auto sol = try_with({longs[i], longs[j]})) return certified(std::move(*sol));
        }
    return {};
}

namespace {

bool anchored_unchecked(const Graph& g, const AnchoredPattern& pattern) {
    const Graph& h = pattern.h;
    std::vector<Vertex> image(static_cast<std::size_t>(h.n()), -1);
    for (const auto& [gv, hv] : pattern.anchors) image[hv] = gv;

    // Two branch vertices joined in g but not in h would leave a chord.
    for (Vertex a = 0; a < h.n(); ++a)
        for (Vertex b = a + 1; b < h.n(); ++b)
            if (!h.adjacent(a, b) && g.adjacent(image[a], image[b])) return false;

    std::vector<char> keep(static_cast<std::size_t>(g.n()), 1);
    for (Vertex v = 0; v < h.n(); ++v) {
        if (h.degree(v) != 0) continue;
        keep[image[v]] = 0;
        for (Vertex w : g.neighbors(image[v])) keep[w] = 0;
    }
    if (h.m() == 0) return true;
    const auto sub = induced_subgraph(g, from_mask(keep));
    std::vector<int> to_child(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i) to_child[sub.to_parent[i]] = static_cast<int>(i);
    Instance inst{sub.graph, {}};
    for (const auto& [a, b] : h.edges()) inst.pairs.push_back({to_child[image[a]], to_child[image[b]]});
    return solve_idp(inst).yes;
}

void check_pattern(const Graph& g, const AnchoredPattern& pattern) {
    const int k = pattern.h.n();
    std::vector<char> hit_h(static_cast<std::size_t>(k), 0), hit_g(static_cast<std::size_t>(g.n()), 0);
    if (pattern.anchors.size() != static_cast<std::size_t>(k))
        throw PreconditionError(PreconditionKind::PreconditionViolated, "anchor list must cover every pattern vertex once");
    for (const auto& [gv, hv] : pattern.anchors) {
        if (!g.contains(gv) || !pattern.h.contains(hv) || hit_g[gv] || hit_h[hv])
            throw PreconditionError(PreconditionKind::PreconditionViolated, "anchors must be distinct and in range");
        hit_g[gv] = hit_h[hv] = 1;
    }
}

}  // namespace

bool anchored_itm(const Graph& g, const AnchoredPattern& pattern) {
    check_pattern(g, pattern);
    require_at_free(g);
    return anchored_unchecked(g, pattern);
}

bool itm(const Graph& g, const Graph& h, int budget) {
    if (h.n() > budget)
        throw PreconditionError(PreconditionKind::BudgetExceeded, "pattern has " + std::to_string(h.n()) +
                                                                      " vertices; anchor budget is " + std::to_string(budget));
    require_at_free(g);
    VertexSeq isolated, rest;
    for (Vertex v = 0; v < h.n(); ++v) (h.degree(v) == 0 ? isolated : rest).push_back(v);
    const auto core = induced_subgraph(h, rest).graph;

    // Images of the isolated pattern vertices: an independent set, removed with
    // its neighbourhood before the remaining pattern is searched.
    VertexSeq chosen;
    auto place_isolated = [&](auto&& self, Vertex from) -> bool {
        if (chosen.size() == isolated.size()) {
            std::vector<char> keep(static_cast<std::size_t>(g.n()), 1);
            for (Vertex c : chosen) {
                keep[c] = 0;
                for (Vertex w : g.neighbors(c)) keep[w] = 0;
            }
            const auto sub = induced_subgraph(g, from_mask(keep));
            const Graph& gp = sub.graph;
            if (core.n() == 0) return true;
            if (gp.n() < core.n()) return false;
            AnchoredPattern pat{core, {}};
            std::vector<char> used(static_cast<std::size_t>(gp.n()), 0);
            auto place = [&](auto&& again, Vertex hv) -> bool {
                if (hv == core.n()) return anchored_unchecked(gp, pat);
                for (Vertex gv = 0; gv < gp.n(); ++gv) {
                    if (used[gv] || gp.degree(gv) < core.degree(hv)) continue;
                    bool ok = true;
                    for (const auto& [gw, hw] : pat.anchors)
                        if (!core.adjacent(hv, hw) && gp.adjacent(gv, gw)) ok = false;
                    if (!ok) continue;
                    used[gv] = 1;
                    pat.anchors.emplace_back(gv, hv);
                    const bool found = again(again, hv + 1);
                    pat.anchors.pop_back();
                    used[gv] = 0;
                    if (found) return true;
                }
                return false;
            };
            return place(place, 0);
        }
        for (Vertex v = from; v < g.n(); ++v) {
            if (std::any_of(chosen.begin(), chosen.end(), [&](Vertex c) { return g.adjacent(c, v); })) continue;
            chosen.push_back(v);
            const bool found = self(self, v + 1);
            chosen.pop_back();
            if (found) return true;
        }
        return false;
    };
    return place_isolated(place_isolated, 0);
}

}  // namespace atfp
