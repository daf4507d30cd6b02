#include "atfp/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace atfp {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)), matrix_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (!contains(u) || !contains(v))
        throw std::out_of_range("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) return;
    matrix_[static_cast<std::size_t>(u) * n_ + v] = 1;
    matrix_[static_cast<std::size_t>(v) * n_ + u] = 1;
    auto& au = adj_[u];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++m_;
}

const VertexSet& Graph::neighbors(Vertex v) const {
    if (!contains(v)) throw std::out_of_range("vertex out of range: " + std::to_string(v));
    return adj_[v];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

const VertexSet& neighbors(const Graph& g, Vertex v) { return g.neighbors(v); }

bool is_induced_path(const Graph& g, std::span<const Vertex> seq) {
    for (Vertex v : seq)
        if (!g.contains(v)) return false;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
            if (seq[i] == seq[j]) return false;
            const bool adj = g.adjacent(seq[i], seq[j]);
            if ((j == i + 1) != adj) return false;
        }
    }
    return true;
}

std::vector<int> component_labels(const Graph& g, const std::vector<char>& allowed) {
    std::vector<int> label(static_cast<std::size_t>(g.n()), -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (!allowed[s] || label[s] != -1) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u)) {
                if (allowed[w] && label[w] == -1) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    const auto label = component_labels(g, std::vector<char>(static_cast<std::size_t>(g.n()), 1));
    int count = 0;
    for (int l : label) count = std::max(count, l + 1);
    std::vector<VertexSet> out(static_cast<std::size_t>(count));
    for (Vertex v = 0; v < g.n(); ++v) out[label[v]].push_back(v);
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    Subgraph out;
    out.to_parent = keep;
    std::sort(out.to_parent.begin(), out.to_parent.end());
    out.to_parent.erase(std::unique(out.to_parent.begin(), out.to_parent.end()), out.to_parent.end());
    std::vector<int> to_child(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
        if (!g.contains(out.to_parent[i])) throw std::out_of_range("induced_subgraph: vertex out of range");
        to_child[out.to_parent[i]] = static_cast<int>(i);
    }
    out.graph = Graph(static_cast<int>(out.to_parent.size()));
    for (std::size_t i = 0; i < out.to_parent.size(); ++i)
        for (Vertex w : g.neighbors(out.to_parent[i]))
            if (to_child[w] > static_cast<int>(i)) out.graph.add_edge(static_cast<Vertex>(i), to_child[w]);
    return out;
}

std::optional<VertexSeq> bfs_shortest_path(const Graph& g, Vertex src, Vertex dst, const VertexSet& priority) {
    if (!g.contains(src) || !g.contains(dst)) throw std::out_of_range("bfs_shortest_path: vertex out of range");
    const auto prio = to_mask(g.n(), priority);
    std::vector<int> parent(static_cast<std::size_t>(g.n()), -1);
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::deque<Vertex> queue{src};
    seen[src] = 1;
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        if (u == dst) break;
        for (int pass = 0; pass < 2; ++pass) {
            for (Vertex w : g.neighbors(u)) {
                if (seen[w] || (prio[w] != 0) != (pass == 0)) continue;
                seen[w] = 1;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    if (!seen[dst]) return std::nullopt;
    VertexSeq path;
    for (Vertex v = dst; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<int> bfs_distances(const Graph& g, Vertex src) {
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    std::deque<Vertex> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<char> to_mask(int n, const VertexSet& s) {
    std::vector<char> mask(static_cast<std::size_t>(n), 0);
    for (Vertex v : s) mask[v] = 1;
    return mask;
}

VertexSet from_mask(const std::vector<char>& mask) {
    VertexSet out;
    for (std::size_t v = 0; v < mask.size(); ++v)
        if (mask[v]) out.push_back(static_cast<Vertex>(v));
    return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    std::vector<char> mask(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : s) {
        mask[v] = 1;
        for (Vertex w : g.neighbors(v)) mask[w] = 1;
    }
    return from_mask(mask);
}

bool dominates(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<char> covered(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : vertices) {
        covered[v] = 1;
        for (Vertex w : g.neighbors(v)) covered[w] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

}  // namespace atfp
