#include "atfp/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "atfp/errors.hpp"

namespace atfp::oracle {

namespace {

void size_guard(const Graph& g, int max_n, const char* who) {
    if (g.n() > max_n)
        throw PreconditionError(PreconditionKind::TooLarge,
                                std::string(who) + ": " + std::to_string(g.n()) + " vertices exceeds limit " + std::to_string(max_n));
}

bool is_end(const VertexSeq& p, Vertex v) { return p.front() == v || p.back() == v; }

/// Two paths may touch only at vertices that end both of them.
bool mutually_induced(const Graph& g, const VertexSeq& a, const VertexSeq& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        const bool a_inner = i > 0 && i + 1 < a.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
            const bool b_inner = j > 0 && j + 1 < b.size();
            if (a[i] == b[j]) {
                if (a_inner || b_inner) return false;
                continue;
            }
            if (!g.adjacent(a[i], b[j])) continue;
            if (a_inner && !(is_end(a, b[j]) && is_end(b, b[j]))) return false;
            if (b_inner && !(is_end(a, a[i]) && is_end(b, a[i]))) return false;
        }
    }
    return true;
}

bool induced_path_seq(const Graph& g, const VertexSeq& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] == p[j] || g.adjacent(p[i], p[j]) != (j == i + 1)) return false;
    return true;
}

using Mask = std::uint32_t;

/// Edge count, connectivity and degree profile of g[S].
struct Shape {
    int size = 0;
    int edges = 0;
    int max_degree = 0;
    int min_degree = 0;
    bool connected = false;
};

Shape shape_of(const Graph& g, Mask s) {
    Shape sh;
    sh.size = std::popcount(s);
    sh.min_degree = g.n();
    for (Vertex v = 0; v < g.n(); ++v) {
        if (!(s >> v & 1U)) continue;
        int d = 0;
        for (Vertex w : g.neighbors(v))
            if (s >> w & 1U) ++d;
        sh.edges += d;
        sh.max_degree = std::max(sh.max_degree, d);
        sh.min_degree = std::min(sh.min_degree, d);
    }
    sh.edges /= 2;
    if (sh.size == 0) return sh;
    Mask seen = s & (~s + 1U), frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (Vertex v = 0; v < g.n(); ++v) {
            if (!(frontier >> v & 1U)) continue;
            for (Vertex w : g.neighbors(v))
                if ((s >> w & 1U) && !(seen >> w & 1U)) next |= Mask{1} << w;
        }
        seen |= next;
        frontier = next;
    }
    sh.connected = seen == s;
    return sh;
}

bool any_superset(const Graph& g, const VertexSet& terminals, int max_n, const char* who,
                  const std::function<bool(const Shape&)>& accept) {
    size_guard(g, max_n, who);
    Mask required = 0;
    for (Vertex t : terminals) required |= Mask{1} << t;
    if (terminals.empty()) return true;
    const Mask full = g.n() == 32 ? ~Mask{0} : (Mask{1} << g.n()) - 1U;
    const Mask free = full & ~required;
    // Walk all submasks of `free`.
    Mask sub = free;
    while (true) {
        if (accept(shape_of(g, sub | required))) return true;
        if (sub == 0) break;
        sub = (sub - 1U) & free;
    }
    return false;
}

}  // namespace

bool check_paths(const Graph& g, const std::vector<Edge>& pairs, const std::vector<VertexSeq>& paths) {
    if (paths.size() != pairs.size()) return false;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const auto& p = paths[i];
        if (p.size() < 2) return false;
        for (Vertex v : p)
            if (!g.contains(v)) return false;
        const auto [s, t] = pairs[i];
        if (!((p.front() == s && p.back() == t) || (p.front() == t && p.back() == s))) return false;
        if (!induced_path_seq(g, p)) return false;
    }
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j)
            if (!mutually_induced(g, paths[i], paths[j])) return false;
    return true;
}

IdpAnswer idp(const Graph& g, const std::vector<Edge>& pairs, int max_n) {
    size_guard(g, max_n, "oracle idp");
    IdpAnswer ans;
    std::vector<VertexSeq> chosen;
    std::vector<char> on_path(static_cast<std::size_t>(g.n()), 0);

    // A vertex about to become inner to the current path must avoid every
    // chosen path except where it touches a shared end of both.
    auto inner_ok = [&](Vertex v, Vertex s, Vertex t) {
        for (const auto& p : chosen)
            for (Vertex w : p) {
                if (w == v) return false;
                if (g.adjacent(v, w) && !((w == s || w == t) && is_end(p, w))) return false;
            }
        return true;
    };

    std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
        if (i == pairs.size()) return true;
        const auto [s, t] = pairs[i];
        VertexSeq cur{s};
        on_path.assign(on_path.size(), 0);
        on_path[s] = 1;
        std::function<bool()> extend = [&]() -> bool {
            const Vertex last = cur.back();
            for (Vertex w : g.neighbors(last)) {
                if (on_path[w]) continue;
                bool chord = false;
                for (std::size_t j = 0; j + 1 < cur.size() && !chord; ++j) chord = g.adjacent(cur[j], w);
                if (chord) continue;
                if (w == t) {
                    cur.push_back(t);
                    bool fits = true;
                    for (const auto& p : chosen) fits = fits && mutually_induced(g, cur, p);
                    if (fits) {
                        chosen.push_back(cur);
                        const auto saved = on_path;
                        if (place(i + 1)) return true;
                        on_path = saved;
                        chosen.pop_back();
                    }
                    cur.pop_back();
                    continue;
                }
                if (!inner_ok(w, s, t)) continue;
                cur.push_back(w);
                on_path[w] = 1;
                if (extend()) return true;
                on_path[w] = 0;
                cur.pop_back();
            }
            return false;
        };
        return extend();
    };
    if (place(0)) {
        ans.yes = true;
        ans.paths = chosen;
    }
    return ans;
}

bool k_in_a_path(const Graph& g, const VertexSet& terminals, int max_n) {
    return any_superset(g, terminals, max_n, "oracle k_in_a_path",
                        [](const Shape& s) { return s.connected && s.edges == s.size - 1 && s.max_degree <= 2; });
}

bool k_in_a_tree(const Graph& g, const VertexSet& terminals, int max_n) {
    return any_superset(g, terminals, max_n, "oracle k_in_a_tree", [](const Shape& s) { return s.connected && s.edges == s.size - 1; });
}

bool k_in_a_cycle(const Graph& g, const VertexSet& terminals, int max_n) {
    size_guard(g, max_n, "oracle k_in_a_cycle");
    // An empty terminal set still needs some cycle to exist.
    if (terminals.empty()) {
        for (Vertex v = 0; v < g.n(); ++v)
            if (k_in_a_cycle(g, {v}, max_n)) return true;
        return false;
    }
    return any_superset(g, terminals, max_n, "oracle k_in_a_cycle", [](const Shape& s) {
        return s.size >= 3 && s.connected && s.max_degree == 2 && s.min_degree == 2;
    });
}

bool clique(const Graph& g, int k) {
    if (g.n() > 64) throw PreconditionError(PreconditionKind::TooLarge, "oracle clique: graph too large");
    if (k <= 0) return true;
    VertexSet cur;
    std::function<bool(Vertex)> grow = [&](Vertex from) -> bool {
        if (static_cast<int>(cur.size()) == k) return true;
        for (Vertex v = from; v < g.n(); ++v) {
            if (g.n() - v < k - static_cast<int>(cur.size())) return false;
            if (!std::all_of(cur.begin(), cur.end(), [&](Vertex c) { return g.adjacent(c, v); })) continue;
            cur.push_back(v);
            if (grow(v + 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    return grow(0);
}

int mis(const Graph& g) {
    if (g.n() > 64) throw PreconditionError(PreconditionKind::TooLarge, "oracle mis: graph too large");
    int best = 0;
    std::vector<char> blocked(static_cast<std::size_t>(g.n()), 0);
    std::function<void(Vertex, int)> go = [&](Vertex v, int size) {
        best = std::max(best, size);
        if (v == g.n() || size + (g.n() - v) <= best) return;
        if (!blocked[v]) {
            std::vector<Vertex> newly;
            for (Vertex w : g.neighbors(v))
                if (!blocked[w]) {
                    blocked[w] = 1;
                    newly.push_back(w);
                }
            go(v + 1, size + 1);
            for (Vertex w : newly) blocked[w] = 0;
        }
        go(v + 1, size);
    };
    go(0, 0);
    return best;
}

namespace {

/// g[S] with branch vertices image[0..h.n()) is a subdivision of h with that
/// exact correspondence.
bool subdivides(const Graph& g, const Graph& h, Mask s, const std::vector<Vertex>& image) {
    std::vector<int> pattern_of(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t v = 0; v < image.size(); ++v) pattern_of[image[v]] = static_cast<int>(v);
    auto inside = [&](Vertex v) { return (s >> v & 1U) != 0; };
    for (Vertex v = 0; v < g.n(); ++v) {
        if (!inside(v) || pattern_of[v] != -1) continue;
        int d = 0;
        for (Vertex w : g.neighbors(v)) d += inside(w) ? 1 : 0;
        if (d != 2) return false;
    }
    std::vector<std::vector<int>> threads(static_cast<std::size_t>(h.n()), std::vector<int>(static_cast<std::size_t>(h.n()), 0));
    Mask walked = 0;
    for (std::size_t b = 0; b < image.size(); ++b) {
        for (Vertex w : g.neighbors(image[b])) {
            if (!inside(w)) continue;
            Vertex prev = image[b], cur = w;
            while (pattern_of[cur] == -1) {
                walked |= Mask{1} << cur;
                Vertex next = -1;
                for (Vertex x : g.neighbors(cur))
                    if (inside(x) && x != prev) next = x;
                prev = cur;
                cur = next;
            }
            if (pattern_of[cur] == static_cast<int>(b)) return false;
            ++threads[b][pattern_of[cur]];
        }
    }
    for (Vertex v = 0; v < g.n(); ++v)
        if (inside(v) && pattern_of[v] == -1 && !(walked >> v & 1U)) return false;
    for (Vertex a = 0; a < h.n(); ++a)
        for (Vertex b = 0; b < h.n(); ++b)
            if (a != b && threads[a][b] != (h.adjacent(a, b) ? 1 : 0)) return false;
    return true;
}

}  // namespace

bool induced_subdivision(const Graph& g, const Graph& h, const std::optional<std::vector<Vertex>>& anchors, int max_n) {
    size_guard(g, max_n, "oracle induced_subdivision");
    if (h.n() > g.n()) return false;
    std::vector<Vertex> image;
    std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
    auto try_image = [&]() {
        Mask branch = 0;
        for (Vertex v : image) branch |= Mask{1} << v;
        const Mask full = (Mask{1} << g.n()) - 1U;
        const Mask free = full & ~branch;
        Mask sub = free;
        while (true) {
            if (subdivides(g, h, sub | branch, image)) return true;
            if (sub == 0) break;
            sub = (sub - 1U) & free;
        }
        return false;
    };
    if (anchors) {
        if (static_cast<int>(anchors->size()) != h.n()) return false;
        image = *anchors;
        for (Vertex v : image) {
            if (!g.contains(v) || used[v]) return false;
            used[v] = 1;
        }
        return try_image();
    }
    std::function<bool()> assign = [&]() -> bool {
        if (static_cast<int>(image.size()) == h.n()) return try_image();
        for (Vertex v = 0; v < g.n(); ++v) {
            if (used[v]) continue;
            used[v] = 1;
            image.push_back(v);
            if (assign()) return true;
            image.pop_back();
            used[v] = 0;
        }
        return false;
    };
    return assign();
}

namespace {

// Colour refinement run on a and b together so colours are comparable.
std::pair<std::vector<int>, std::vector<int>> refine(const Graph& a, const Graph& b) {
    std::vector<int> ca(static_cast<std::size_t>(a.n())), cb(static_cast<std::size_t>(b.n()));
    for (Vertex v = 0; v < a.n(); ++v) ca[v] = a.degree(v);
    for (Vertex v = 0; v < b.n(); ++v) cb[v] = b.degree(v);
    std::size_t classes = 0;
    while (true) {
        std::map<std::vector<int>, int> ids;
        auto signature = [](const Graph& g, const std::vector<int>& c, Vertex v) {
            std::vector<int> sig{c[v]};
            for (Vertex w : g.neighbors(v)) sig.push_back(c[w]);
            std::sort(sig.begin() + 1, sig.end());
            return sig;
        };
        std::vector<std::vector<int>> sa, sb;
        for (Vertex v = 0; v < a.n(); ++v) sa.push_back(signature(a, ca, v));
        for (Vertex v = 0; v < b.n(); ++v) sb.push_back(signature(b, cb, v));
        for (const auto& x : sa) ids.emplace(x, 0);
        for (const auto& x : sb) ids.emplace(x, 0);
        int next = 0;
        for (auto& [sig, id] : ids) id = next++;
        for (Vertex v = 0; v < a.n(); ++v) ca[v] = ids[sa[v]];
        for (Vertex v = 0; v < b.n(); ++v) cb[v] = ids[sb[v]];
        if (ids.size() == classes) break;
        classes = ids.size();
    }
    return {ca, cb};
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    const auto [ca, cb] = refine(a, b);
    auto hist = [](std::vector<int> c) {
        std::sort(c.begin(), c.end());
        return c;
    };
    if (hist(ca) != hist(cb)) return false;
    // Map b into a, b's vertices in an order where each new one tends to have
    // an already mapped neighbour.
    std::vector<Vertex> order;
    std::vector<char> placed(static_cast<std::size_t>(b.n()), 0);
    while (static_cast<int>(order.size()) < b.n()) {
        Vertex best = -1;
        int best_links = -1;
        for (Vertex v = 0; v < b.n(); ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (Vertex w : b.neighbors(v)) links += placed[w];
            if (links > best_links) {
                best = v;
                best_links = links;
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }
    std::vector<Vertex> image(static_cast<std::size_t>(b.n()), -1);
    std::vector<char> used(static_cast<std::size_t>(a.n()), 0);
    std::function<bool(std::size_t)> go = [&](std::size_t idx) -> bool {
        if (idx == order.size()) return true;
        const Vertex bv = order[idx];
        for (Vertex av = 0; av < a.n(); ++av) {
            if (used[av] || ca[av] != cb[bv]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < idx && ok; ++j) ok = b.adjacent(bv, order[j]) == a.adjacent(av, image[order[j]]);
            if (!ok) continue;
            used[av] = 1;
            image[bv] = av;
            if (go(idx + 1)) return true;
            used[av] = 0;
        }
        return false;
    };
    return go(0);
}

}  // namespace

bool induced_subgraph_of(const Graph& g, const Graph& h) {
    if (h.n() > g.n()) return false;
    if (h.n() == 0) return true;
    // Every |V_h|-subset of g, filtered by edge count and degree sequence
    // before the isomorphism test. Subsets avoid the pattern's symmetries,
    // which make vertex-by-vertex mapping slow to refute.
    std::vector<int> want;
    for (Vertex v = 0; v < h.n(); ++v) want.push_back(h.degree(v));
    std::sort(want.begin(), want.end());
    const std::size_t want_m = h.m();
    const int k = h.n();
    VertexSet pick;
    std::function<bool(Vertex, std::size_t)> go = [&](Vertex from, std::size_t edges) -> bool {
        if (edges > want_m) return false;
        if (static_cast<int>(pick.size()) == k) {
            if (edges != want_m) return false;
            std::vector<int> deg;
            for (Vertex v : pick) {
                int d = 0;
                for (Vertex w : pick) d += g.adjacent(v, w);
                deg.push_back(d);
            }
            std::sort(deg.begin(), deg.end());
            return deg == want && isomorphic(induced_subgraph(g, pick).graph, h);
        }
        for (Vertex v = from; v + (k - static_cast<int>(pick.size())) <= g.n(); ++v) {
            std::size_t extra = 0;
            for (Vertex u : pick) extra += g.adjacent(u, v);
            pick.push_back(v);
            const bool found = go(v + 1, edges + extra);
            pick.pop_back();
            if (found) return true;
        }
        return false;
    };
    return go(0, 0);
}

}  // namespace atfp::oracle
