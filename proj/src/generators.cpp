#include "atfp/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "atfp/atfree.hpp"
#include "atfp/errors.hpp"

namespace atfp {

std::optional<GraphModel> parse_model(const std::string& name) {
    if (name == "interval") return GraphModel::Interval;
    if (name == "permutation") return GraphModel::Permutation;
    if (name == "cobipartite") return GraphModel::Cobipartite;
    if (name == "rejection") return GraphModel::Rejection;
    return std::nullopt;
}

std::string model_name(GraphModel m) {
    switch (m) {
        case GraphModel::Interval: return "interval";
        case GraphModel::Permutation: return "permutation";
        case GraphModel::Cobipartite: return "cobipartite";
        case GraphModel::Rejection: return "rejection";
    }
    return "?";
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("ATFP_SEED")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return v;
    }
    return 1;
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Graph interval_graph(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> iv;
    const int span = std::max(2, 2 * n);
    for (int v = 0; v < n; ++v) {
        const int l = uniform(rng, 0, span);
        iv.emplace_back(l, l + uniform(rng, 0, std::max(1, n / 2)));
    }
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (iv[a].first <= iv[b].second && iv[b].first <= iv[a].second) g.add_edge(a, b);
    return g;
}

Graph permutation_graph(int n, std::mt19937_64& rng) {
    std::vector<int> pi(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 0);
    std::shuffle(pi.begin(), pi.end(), rng);
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (pi[a] > pi[b]) g.add_edge(a, b);
    return g;
}

Graph cobipartite_graph(int n, std::mt19937_64& rng) {
    Graph g(n);
    std::vector<int> side(static_cast<std::size_t>(n));
    for (auto& s : side) s = uniform(rng, 0, 1);
    std::bernoulli_distribution cross(0.3);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (side[a] == side[b] || cross(rng)) g.add_edge(a, b);
    return g;
}

}  // namespace

Graph random_atfree_graph(GraphModel model, int n, std::mt19937_64& rng) {
    switch (model) {
        case GraphModel::Interval: return interval_graph(n, rng);
        case GraphModel::Permutation: return permutation_graph(n, rng);
        case GraphModel::Cobipartite: return cobipartite_graph(n, rng);
        case GraphModel::Rejection: {
            const double p = std::uniform_real_distribution<double>(0.25, 0.6)(rng);
            std::bernoulli_distribution coin(p);
            for (int attempt = 0; attempt < 10000; ++attempt) {
                Graph g(n);
                for (int a = 0; a < n; ++a)
                    for (int b = a + 1; b < n; ++b)
                        if (coin(rng)) g.add_edge(a, b);
                if (is_at_free(g)) return g;
            }
            return interval_graph(n, rng);
        }
    }
    return Graph(n);
}

std::vector<TerminalPair> random_pairs(int n, int k, std::mt19937_64& rng) {
    if (static_cast<long long>(n) * (n - 1) / 2 < k)
        throw PreconditionError(PreconditionKind::GenerationFailed, "not enough distinct pairs on " + std::to_string(n) + " vertices");
    std::set<std::pair<int, int>> seen;
    std::vector<TerminalPair> pairs;
    while (static_cast<int>(pairs.size()) < k) {
        const int s = uniform(rng, 0, n - 1);
        const int t = uniform(rng, 0, n - 1);
        if (s == t || !seen.emplace(std::min(s, t), std::max(s, t)).second) continue;
        pairs.push_back({s, t});
    }
    return pairs;
}

Instance gen_random(GraphModel model, int n, int k, std::uint64_t seed) {
    if (n < 2 * k || k < 0)
        throw PreconditionError(PreconditionKind::PreconditionViolated, "gen_random needs n >= 2k and k >= 0");
    std::mt19937_64 rng(seed);
    Instance inst;
    inst.g = random_atfree_graph(model, n, rng);
    inst.pairs = random_pairs(n, k, rng);
    return inst;
}

Graph banded_interval_graph(int n, int overlap) {
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b <= std::min(n - 1, a + overlap); ++b) g.add_edge(a, b);
    return g;
}

VertexSet random_subset(int n, int k, std::mt19937_64& rng) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(std::min(n, k)));
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace atfp
