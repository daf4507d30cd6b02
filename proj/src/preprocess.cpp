#include "atfp/preprocess.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "atfp/errors.hpp"

namespace atfp {

VertexSet terminal_set(const Instance& inst) {
    VertexSet t;
    for (const auto& p : inst.pairs) {
        t.push_back(p.s);
        t.push_back(p.t);
    }
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return t;
}

void validate_instance(const Instance& inst) {
    std::set<std::pair<Vertex, Vertex>> seen;
    for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
        const auto [s, t] = inst.pairs[i];
        const std::string where = "pair " + std::to_string(i) + " (" + std::to_string(s) + "," + std::to_string(t) + ")";
        if (!inst.g.contains(s) || !inst.g.contains(t))
            throw InvalidInstance(InstanceErrorKind::OutOfRange, where + ": terminal out of range");
        if (s == t) throw InvalidInstance(InstanceErrorKind::DegeneratePair, where + ": s equals t");
        if (!seen.emplace(std::min(s, t), std::max(s, t)).second)
            throw InvalidInstance(InstanceErrorKind::DuplicatePair, where + ": repeated pair");
    }
}

Reduction restrict_instance(const Instance& inst, const VertexSet& keep) {
    Reduction out;
    auto sub = induced_subgraph(inst.g, keep);
    std::vector<int> new_id(static_cast<std::size_t>(inst.g.n()), -1);
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i) new_id[sub.to_parent[i]] = static_cast<int>(i);
    out.instance.g = std::move(sub.graph);
    out.vertex_map = std::move(sub.to_parent);
    for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
        const auto [s, t] = inst.pairs[i];
        if (new_id[s] == -1 || new_id[t] == -1) {
            out.removed_pairs.push_back(static_cast<int>(i));
            continue;
        }
        out.instance.pairs.push_back({new_id[s], new_id[t]});
        out.kept_pairs.push_back(static_cast<int>(i));
    }
    return out;
}

namespace {

VertexSet all_vertices(int n) {
    VertexSet v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

Reduction identity(const Instance& inst) { return restrict_instance(inst, all_vertices(inst.g.n())); }

/// Composes a second reduction onto a first.
Reduction compose(const Reduction& first, const Reduction& second) {
    Reduction out;
    out.instance = second.instance;
    for (Vertex v : second.vertex_map) out.vertex_map.push_back(first.vertex_map[v]);
    for (int p : second.kept_pairs) out.kept_pairs.push_back(first.kept_pairs[p]);
    out.removed_pairs = first.removed_pairs;
    for (int p : second.removed_pairs) out.removed_pairs.push_back(first.kept_pairs[p]);
    std::sort(out.removed_pairs.begin(), out.removed_pairs.end());
    return out;
}

}  // namespace

Reduction step1(const Instance& inst) {
    const auto term = to_mask(inst.g.n(), terminal_set(inst));
    std::vector<char> drop(static_cast<std::size_t>(inst.g.n()), 0);
    for (const auto& [u, v] : inst.g.edges()) {
        if (!term[u] || !term[v]) continue;
        for (Vertex w : inst.g.neighbors(u))
            if (!term[w] && inst.g.adjacent(w, v)) drop[w] = 1;
    }
    VertexSet keep;
    for (Vertex v = 0; v < inst.g.n(); ++v)
        if (!drop[v]) keep.push_back(v);
    return restrict_instance(inst, keep);
}

Reduction step2(const Instance& inst) {
    Reduction acc = identity(inst);
    while (true) {
        const Instance& cur = acc.instance;
        const int n = cur.g.n();
        std::vector<char> all_adjacent(static_cast<std::size_t>(n), 0);
        const auto term = to_mask(n, terminal_set(cur));
        for (Vertex v = 0; v < n; ++v) all_adjacent[v] = term[v];
        for (const auto& [s, t] : cur.pairs) {
            if (!cur.g.adjacent(s, t)) {
                all_adjacent[s] = 0;
                all_adjacent[t] = 0;
            }
        }
        if (std::none_of(all_adjacent.begin(), all_adjacent.end(), [](char c) { return c != 0; })) break;
        std::vector<char> drop = all_adjacent;
        for (Vertex u = 0; u < n; ++u) {
            if (!all_adjacent[u]) continue;
            for (Vertex w : cur.g.neighbors(u))
                if (!term[w]) drop[w] = 1;
        }
        VertexSet keep;
        for (Vertex v = 0; v < n; ++v)
            if (!drop[v]) keep.push_back(v);
        acc = compose(acc, restrict_instance(cur, keep));
    }
    return acc;
}

Reduction step3(const Instance& inst) {
    Reduction out = identity(inst);
    out.instance.pairs.clear();
    out.kept_pairs.clear();
    for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
        const auto [s, t] = inst.pairs[i];
        if (inst.g.adjacent(s, t)) {
            out.removed_pairs.push_back(static_cast<int>(i));
        } else {
            out.instance.pairs.push_back({s, t});
            out.kept_pairs.push_back(static_cast<int>(i));
        }
    }
    return out;
}

std::vector<char> gi_mask(const Instance& inst, int i) {
    const auto [si, ti] = inst.pairs.at(static_cast<std::size_t>(i));
    std::vector<char> mask(static_cast<std::size_t>(inst.g.n()), 1);
    for (Vertex u : terminal_set(inst)) {
        if (u == si || u == ti) continue;
        mask[u] = 0;
        for (Vertex w : inst.g.neighbors(u)) mask[w] = 0;
    }
    mask[si] = 1;
    mask[ti] = 1;
    return mask;
}

Subgraph build_Gi(const Instance& inst, int i) { return induced_subgraph(inst.g, from_mask(gi_mask(inst, i))); }

StepVerdict step4(const Instance& inst) {
    for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
        const auto label = component_labels(inst.g, gi_mask(inst, static_cast<int>(i)));
        if (label[inst.pairs[i].s] != label[inst.pairs[i].t]) return StepVerdict::No;
    }
    return StepVerdict::Ok;
}

PreprocessResult preprocess(const Instance& inst) {
    validate_instance(inst);
    Reduction r = identity(inst);
    r = compose(r, step1(r.instance));
    r = compose(r, step2(r.instance));
    r = compose(r, step3(r.instance));
    PreprocessResult out;
    out.instance = std::move(r.instance);
    out.removed_pairs = std::move(r.removed_pairs);
    out.pair_origin = std::move(r.kept_pairs);
    out.vertex_map = std::move(r.vertex_map);
    out.verdict = step4(out.instance) == StepVerdict::No ? Verdict::No : Verdict::Reduced;
    return out;
}

}  // namespace atfp
