#include <doctest.h>

#include <random>

#include "atfp/atfree.hpp"
#include "atfp/errors.hpp"
#include "atfp/generators.hpp"
#include "atfp/structure.hpp"
#include "fixtures.hpp"

using namespace atfp;

TEST_CASE("is_asteroidal_triple") {
    CHECK(is_asteroidal_triple(fx::cycle(6), 0, 2, 4));
    const Graph p4 = fx::path(4);
    for (Vertex a = 0; a < 4; ++a)
        for (Vertex b = a + 1; b < 4; ++b)
            for (Vertex c = b + 1; c < 4; ++c) CHECK_FALSE(is_asteroidal_triple(p4, a, b, c));
    CHECK(is_asteroidal_triple(fx::spider(), 2, 4, 6));
    CHECK_FALSE(is_asteroidal_triple(fx::spider(), 1, 3, 5));
}

TEST_CASE("find_asteroidal_triple returns the smallest triple") {
    CHECK(find_asteroidal_triple(fx::cycle(6)) == AsteroidalTriple{0, 2, 4});
    CHECK_FALSE(find_asteroidal_triple(fx::claw()).has_value());
    CHECK(find_asteroidal_triple(fx::spider()) == AsteroidalTriple{2, 4, 6});
    CHECK_FALSE(find_asteroidal_triple(Graph(2)).has_value());
    CHECK(is_at_free(fx::cycle(5)));
    CHECK_FALSE(is_at_free(fx::cycle(7)));
}

TEST_CASE("find_asteroidal_triple agrees with exhaustive triple checks") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 10);
        const Graph g = fx::gnp(n, 0.2 + 0.05 * static_cast<double>(rng() % 6), rng);
        bool any = false;
        for (Vertex a = 0; a < n && !any; ++a)
            for (Vertex b = a + 1; b < n && !any; ++b)
                for (Vertex c = b + 1; c < n && !any; ++c) any = is_asteroidal_triple(g, a, b, c);
        const auto found = find_asteroidal_triple(g);
        CHECK(found.has_value() == any);
        if (found) CHECK(is_asteroidal_triple(g, found->a, found->b, found->c));
    }
}

TEST_CASE("is_dominating_pair") {
    CHECK(is_dominating_pair(fx::path(4), 0, 3));
    CHECK_FALSE(is_dominating_pair(fx::spider(), 2, 4));
    CHECK(is_dominating_pair(fx::cycle(5), 0, 2));
    CHECK_THROWS_AS(is_dominating_pair(Graph(2), 0, 1), PreconditionError);
}

TEST_CASE("find_dominating_pair") {
    // 0-1-2 already dominates 3.
    CHECK(find_dominating_pair(fx::path(4)) == std::pair<Vertex, Vertex>{0, 2});
    CHECK(find_dominating_pair(fx::path(4), VertexSet{0, 3}) == std::pair<Vertex, Vertex>{0, 3});
    CHECK(find_dominating_pair(fx::cycle(5), VertexSet{1, 3}) == std::pair<Vertex, Vertex>{1, 3});
    CHECK_FALSE(find_dominating_pair(fx::spider()).has_value());
    CHECK_THROWS_AS(find_dominating_pair(Graph(3)), PreconditionError);
}

TEST_CASE("every connected AT-free graph has a dominating pair") {
    std::mt19937_64 rng(4);
    int checked = 0;
    for (int trial = 0; checked < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 13);
        const Graph g = random_atfree_graph(GraphModel::Rejection, n, rng);
        if (!is_connected(g)) continue;
        ++checked;
        const auto pair = find_dominating_pair(g);
        REQUIRE(pair.has_value());
        CHECK(is_dominating_pair(g, pair->first, pair->second));
        const auto d = dominating_path(g, pair->first, pair->second, {});
        CHECK(dominates(g, d));
    }
}

TEST_CASE("dominating_path") {
    // H of the two-pair C5 instance: terminals 0,2,4 are h 0,1,2; the
    // path-vertices of (0,2) and (2,4) are h 3 and 4.
    const auto auxh = build_H(fx::c5_two_pairs());
    CHECK(auxh.h.n() == 5);
    const VertexSet pv{3, 4};
    CHECK(dominating_path(auxh.h, 0, 1, pv) == VertexSeq{0, 3, 1});
    // To the second path-vertex the route through G4 is shorter than the one
    // through both path-vertices.
    CHECK(dominating_path(auxh.h, 0, 4, pv) == VertexSeq{0, 2, 4});
    // H is a 5-cycle; G vertices 0 and 4 are adjacent there and miss h 1.
    CHECK_THROWS_AS(dominating_path(auxh.h, 0, 2, pv), PreconditionError);
    CHECK(dominating_path(fx::claw(), 1, 2, {}) == VertexSeq{1, 0, 2});
    CHECK(dominating_path(fx::path(2), 0, 1, {}) == VertexSeq{0, 1});
    CHECK_THROWS_AS(dominating_path(fx::spider(), 2, 4, {}), PreconditionError);
}

TEST_CASE("is_caterpillar") {
    CHECK(is_caterpillar(fx::claw()));
    CHECK_FALSE(is_caterpillar(fx::spider()));
    CHECK(is_caterpillar(fx::path(5)));
    CHECK(is_caterpillar(Graph(1)));
    CHECK_THROWS_AS(is_caterpillar(fx::cycle(4)), PreconditionError);
}

TEST_CASE("cycle_chord_property") {
    CHECK(cycle_chord_property(fx::cycle(5), {0, 1, 2, 3, 4}));
    CHECK(cycle_chord_property(fx::cycle(4), {0, 1, 2, 3}));
    CHECK_FALSE(cycle_chord_property(fx::cycle(6), {0, 1, 2, 3, 4, 5}));
    CHECK_THROWS_AS(cycle_chord_property(fx::path(4), {0, 1, 2, 3}), PreconditionError);
}

namespace {

void sample_cycles(const Graph& g, std::mt19937_64& rng, int tries, int& violations, int& seen) {
    for (int t = 0; t < tries; ++t) {
        VertexSeq walk{static_cast<Vertex>(rng() % g.n())};
        std::vector<char> on(static_cast<std::size_t>(g.n()), 0);
        on[walk[0]] = 1;
        for (int step = 0; step < g.n(); ++step) {
            const auto& nb = g.neighbors(walk.back());
            if (nb.empty()) break;
            const Vertex w = nb[rng() % nb.size()];
            if (w == walk.front() && walk.size() >= 3) {
                ++seen;
                if (!cycle_chord_property(g, walk)) ++violations;
                break;
            }
            if (on[w]) break;
            on[w] = 1;
            walk.push_back(w);
        }
    }
}

}  // namespace

TEST_CASE("cycles in AT-free graphs have a short chord") {
    std::mt19937_64 rng(8);
    int violations = 0, seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto model = static_cast<GraphModel>(trial % 4);
        const Graph g = random_atfree_graph(model, 5 + static_cast<int>(rng() % 10), rng);
        sample_cycles(g, rng, 40, violations, seen);
    }
    CHECK(seen > 500);
    CHECK(violations == 0);
}

TEST_CASE("maximal induced trees in AT-free graphs are caterpillars") {
    std::mt19937_64 rng(9);
    int trees = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 8);
        const Graph g = random_atfree_graph(static_cast<GraphModel>(trial % 4), n, rng);
        std::vector<VertexSet> induced_trees;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            VertexSet vs;
            for (Vertex v = 0; v < n; ++v)
                if (mask >> v & 1) vs.push_back(v);
            const auto sub = induced_subgraph(g, vs);
            if (sub.graph.m() + 1 != vs.size() || !is_connected(sub.graph)) continue;
            bool maximal = true;
            for (Vertex v = 0; v < n && maximal; ++v) {
                if (mask >> v & 1) continue;
                VertexSet bigger = vs;
                bigger.push_back(v);
                const auto s2 = induced_subgraph(g, bigger);
                if (s2.graph.m() + 1 == bigger.size() && is_connected(s2.graph)) maximal = false;
            }
            if (!maximal) continue;
            ++trees;
            CHECK(is_caterpillar(sub.graph));
        }
    }
    CHECK(trees > 100);
}
