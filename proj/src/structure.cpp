#include "atfp/structure.hpp"

#include <algorithm>
#include <string>

#include "atfp/atfree.hpp"
#include "atfp/errors.hpp"

namespace atfp {

AuxiliaryH build_H(const Instance& inst) {
    AuxiliaryH a;
    const VertexSet terms = terminal_set(inst);
    const int nt = static_cast<int>(terms.size());
    const int k = static_cast<int>(inst.pairs.size());
    a.h = Graph(nt + k);
    a.kind.assign(static_cast<std::size_t>(nt + k), HKind::Terminal);
    a.pair_of.assign(static_cast<std::size_t>(nt + k), -1);
    a.to_g.assign(static_cast<std::size_t>(nt + k), -1);
    a.h_of_g.assign(static_cast<std::size_t>(inst.g.n()), -1);
    for (int i = 0; i < nt; ++i) {
        a.to_g[i] = terms[i];
        a.h_of_g[terms[i]] = i;
    }
    for (int i = 0; i < nt; ++i)
        for (int j = i + 1; j < nt; ++j)
            if (inst.g.adjacent(terms[i], terms[j])) a.h.add_edge(i, j);
    for (int p = 0; p < k; ++p) {
        const Vertex pv = nt + p;
        a.kind[pv] = HKind::PathVertex;
        a.pair_of[pv] = p;
        a.path_vertex_of_pair.push_back(pv);
        a.h.add_edge(pv, a.h_of_g[inst.pairs[p].s]);
        a.h.add_edge(pv, a.h_of_g[inst.pairs[p].t]);
    }
    a.component_of_pair.assign(static_cast<std::size_t>(k), -1);
    for (const auto& comp : connected_components(a.h)) {
        HComponent c;
        c.h_vertices = comp;
        for (Vertex v : comp) {
            if (a.kind[v] == HKind::PathVertex) {
                c.pairs.push_back(a.pair_of[v]);
                a.component_of_pair[a.pair_of[v]] = static_cast<int>(a.components.size());
            } else {
                c.terminals.push_back(a.to_g[v]);
            }
        }
        std::sort(c.pairs.begin(), c.pairs.end());
        a.components.push_back(std::move(c));
    }
    return a;
}

StepVerdict step5(const AuxiliaryH& auxh) { return is_at_free(auxh.h) ? StepVerdict::Ok : StepVerdict::No; }

std::vector<std::vector<char>> all_gi_masks(const Instance& inst) {
    std::vector<std::vector<char>> masks;
    for (std::size_t i = 0; i < inst.pairs.size(); ++i) masks.push_back(gi_mask(inst, static_cast<int>(i)));
    return masks;
}

namespace {

/// Vertices of N(s) ∪ N(t) inside G_p - {s, t} whose component there meets
/// both N(s) and N(t).
std::vector<char> good_vertices(const Instance& inst, const std::vector<char>& gp, int p) {
    const auto [s, t] = inst.pairs[p];
    std::vector<char> allowed = gp;
    allowed[s] = 0;
    allowed[t] = 0;
    const auto label = component_labels(inst.g, allowed);
    std::vector<char> meets_s(static_cast<std::size_t>(inst.g.n()), 0), meets_t(meets_s);
    for (Vertex u : inst.g.neighbors(s))
        if (label[u] != -1) meets_s[label[u]] = 1;
    for (Vertex u : inst.g.neighbors(t))
        if (label[u] != -1) meets_t[label[u]] = 1;
    std::vector<char> good(static_cast<std::size_t>(inst.g.n()), 0);
    for (Vertex u = 0; u < inst.g.n(); ++u) {
        if (label[u] == -1 || !(inst.g.adjacent(u, s) || inst.g.adjacent(u, t))) continue;
        good[u] = meets_s[label[u]] && meets_t[label[u]];
    }
    return good;
}

bool interfere_with_masks(const Instance& inst, const std::vector<char>& gi, const std::vector<char>& gj, int i, int j) {
    const auto good_i = good_vertices(inst, gi, i);
    const auto good_j = good_vertices(inst, gj, j);
    for (Vertex u = 0; u < inst.g.n(); ++u) {
        if (!good_i[u]) continue;
        for (Vertex v : inst.g.neighbors(u))
            if (good_j[v]) return true;
    }
    return false;
}

}  // namespace

bool pairs_interfere(const Instance& inst, const AuxiliaryH& auxh, int i, int j) {
    if (auxh.component_of_pair.at(i) == auxh.component_of_pair.at(j))
        throw PreconditionError(PreconditionKind::SameComponent, "pairs_interfere: pairs lie in the same component of H");
    return interfere_with_masks(inst, gi_mask(inst, i), gi_mask(inst, j), i, j);
}

InterferenceGraph build_interference_graph(const Instance& inst, const AuxiliaryH& auxh) {
    InterferenceGraph ig;
    ig.r = static_cast<int>(auxh.components.size());
    const auto masks = all_gi_masks(inst);
    for (int a = 0; a < ig.r; ++a)
        for (int b = a + 1; b < ig.r; ++b) {
            bool hit = false;
            for (int p : auxh.components[a].pairs) {
                for (int q : auxh.components[b].pairs)
                    if ((hit = interfere_with_masks(inst, masks[p], masks[q], p, q))) break;
                if (hit) break;
            }
            if (hit) ig.edges.emplace_back(a, b);
        }
    Graph shape(ig.r, ig.edges);
    for (const auto& comp : connected_components(shape)) {
        std::size_t edges_in = 0;
        for (Vertex v : comp) {
            if (shape.degree(v) > 2)
                throw InvariantViolation("NotUnionOfPaths: component " + std::to_string(v) + " interferes with " +
                                         std::to_string(shape.degree(v)) + " others");
            edges_in += static_cast<std::size_t>(shape.degree(v));
        }
        if (edges_in / 2 != comp.size() - 1) throw InvariantViolation("NotUnionOfPaths: interference graph has a cycle");
    }
    return ig;
}

std::vector<int> component_order(const InterferenceGraph& igraph) {
    Graph shape(igraph.r, igraph.edges);
    std::vector<int> order;
    for (const auto& comp : connected_components(shape)) {
        Vertex start = comp.front();
        for (Vertex v : comp)
            if (shape.degree(v) <= 1) {
                start = v;
                break;
            }
        Vertex prev = -1, cur = start;
        while (cur != -1) {
            order.push_back(cur);
            Vertex next = -1;
            for (Vertex w : shape.neighbors(cur))
                if (w != prev) next = w;
            prev = cur;
            cur = next;
        }
    }
    return order;
}

AuxiliaryH order_components(const InterferenceGraph& igraph, const AuxiliaryH& auxh) {
    const auto order = component_order(igraph);
    AuxiliaryH out = auxh;
    out.components.clear();
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        out.components.push_back(auxh.components[order[pos]]);
        for (int p : out.components.back().pairs) out.component_of_pair[p] = static_cast<int>(pos);
    }
    return out;
}

InterferenceGraph reorder_interference(const InterferenceGraph& igraph, const std::vector<int>& order) {
    std::vector<int> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    InterferenceGraph out;
    out.r = igraph.r;
    for (auto [a, b] : igraph.edges) out.edges.emplace_back(std::min(pos[a], pos[b]), std::max(pos[a], pos[b]));
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

std::vector<SubInstance> decompose_step6(const Instance& inst, const AuxiliaryH& auxh, const InterferenceGraph& igraph) {
    Graph shape(igraph.r, igraph.edges);
    std::vector<SubInstance> out;
    for (const auto& comp : connected_components(shape)) {
        std::vector<char> inside(static_cast<std::size_t>(inst.g.n()), 0);
        std::vector<int> pairs;
        for (int c : comp) {
            for (Vertex t : auxh.components[c].terminals) inside[t] = 1;
            pairs.insert(pairs.end(), auxh.components[c].pairs.begin(), auxh.components[c].pairs.end());
        }
        std::sort(pairs.begin(), pairs.end());
        std::vector<char> keep(static_cast<std::size_t>(inst.g.n()), 1);
        for (Vertex t : terminal_set(inst)) {
            if (inside[t]) continue;
            keep[t] = 0;
            for (Vertex w : inst.g.neighbors(t)) keep[w] = 0;
        }
        auto sub = induced_subgraph(inst.g, from_mask(keep));
        std::vector<int> new_id(static_cast<std::size_t>(inst.g.n()), -1);
        for (std::size_t v = 0; v < sub.to_parent.size(); ++v) new_id[sub.to_parent[v]] = static_cast<int>(v);
        SubInstance si;
        si.instance.g = std::move(sub.graph);
        si.vertex_map = std::move(sub.to_parent);
        for (int p : pairs) {
            const auto [s, t] = inst.pairs[p];
            if (new_id[s] == -1 || new_id[t] == -1) throw InvariantViolation("decompose_step6: a kept terminal was deleted");
            si.instance.pairs.push_back({new_id[s], new_id[t]});
            si.pair_origin.push_back(p);
        }
        si.components = comp;
        out.push_back(std::move(si));
    }
    return out;
}

VertexSet through_vertices(const Instance& inst, const std::vector<char>& gp, int p) {
    const auto [s, t] = inst.pairs[p];
    std::vector<char> through(static_cast<std::size_t>(inst.g.n()), 0);
    for (int side = 0; side < 2; ++side) {
        const Vertex a = side == 0 ? s : t;
        const Vertex b = side == 0 ? t : s;
        // G_p minus N[a]; each candidate u is added back individually.
        std::vector<char> base = gp;
        base[a] = 0;
        for (Vertex w : inst.g.neighbors(a)) base[w] = 0;
        base[b] = 1;
        for (Vertex u : inst.g.neighbors(a)) {
            if (!gp[u] || u == b) continue;
            std::vector<char> allowed = base;
            allowed[u] = 1;
            const auto label = component_labels(inst.g, allowed);
            if (label[u] == label[b]) through[u] = 1;
        }
    }
    return from_mask(through);
}

VertexSet compute_Wi(const Instance& inst, const AuxiliaryH& auxh, int i) {
    if (i + 1 >= static_cast<int>(auxh.components.size())) return {};
    const auto masks = all_gi_masks(inst);
    std::vector<char> left(static_cast<std::size_t>(inst.g.n()), 0), right(left);
    for (int p : auxh.components[i].pairs)
        for (Vertex u : through_vertices(inst, masks[p], p)) left[u] = 1;
    for (int q : auxh.components[i + 1].pairs)
        for (Vertex v : through_vertices(inst, masks[q], q)) right[v] = 1;
    VertexSet w;
    for (Vertex u = 0; u < inst.g.n(); ++u) {
        if (!left[u]) continue;
        for (Vertex v : inst.g.neighbors(u))
            if (right[v]) {
                w.push_back(u);
                break;
            }
    }
    return w;
}

VertexSet cover_terminals(const Graph& g, const VertexSet& w, const VertexSet& candidates) {
    if (w.empty()) return {};
    auto covers = [&](const VertexSet& z) {
        return std::all_of(w.begin(), w.end(), [&](Vertex u) {
            return std::any_of(z.begin(), z.end(), [&](Vertex c) { return g.adjacent(u, c); });
        });
    };
    for (Vertex a : candidates)
        if (covers({a})) return {a};
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (covers({candidates[i], candidates[j]})) return {candidates[i], candidates[j]};
    throw InvariantViolation("NoCover: no set of at most two terminals covers W");
}

VertexSet compute_Zi(const Instance& inst, const AuxiliaryH& auxh, int i) {
    return cover_terminals(inst.g, compute_Wi(inst, auxh, i), auxh.components.at(static_cast<std::size_t>(i)).terminals);
}

}  // namespace atfp
