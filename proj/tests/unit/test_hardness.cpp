#include <doctest.h>

#include <random>

#include "atfp/atfree.hpp"
#include "atfp/errors.hpp"
#include "atfp/hardness.hpp"
#include "atfp/oracles.hpp"
#include "fixtures.hpp"

using namespace atfp;

namespace {

/// K6 without the matching 0-1, 2-3, 4-5; every vertex has degree 4.
Graph k6_minus_matching() {
    Graph g = fx::complete(6);
    Graph out(6);
    for (const auto& [a, b] : g.edges())
        if (!(a % 2 == 0 && b == a + 1)) out.add_edge(a, b);
    return out;
}

std::size_t binom2(int k) { return static_cast<std::size_t>(k * (k - 1) / 2); }

}  // namespace

TEST_CASE("reduce_clique_to_itm sizes and shape") {
    const auto k5 = reduce_clique_to_itm(fx::complete(5), 5);
    CHECK(k5.g_prime.n() == 15);
    CHECK(k5.h.n() == 15);
    CHECK(k5.u_clique == VertexSet{0, 1, 2, 3, 4});
    CHECK(k5.w_clique.size() == 10);
    CHECK(k5.edge_vertex.at({0, 1}) == 5);
    CHECK(k5.edge_vertex.at({3, 4}) == 14);
    // e_01 sees exactly 0 and 1 inside U.
    for (Vertex u : k5.u_clique) CHECK(k5.g_prime.adjacent(5, u) == (u <= 1));
    // y_01 is h vertex 5 and sees x_0, x_1.
    CHECK(k5.h.adjacent(5, 0));
    CHECK(k5.h.adjacent(5, 1));
    CHECK_FALSE(k5.h.adjacent(5, 2));

    const auto km = reduce_clique_to_itm(k6_minus_matching(), 5);
    CHECK(km.g_prime.n() == 18);

    CHECK_THROWS_AS(reduce_clique_to_itm(fx::complete(5), 4), PreconditionError);
    CHECK_THROWS_AS(reduce_clique_to_itm(fx::cycle(6), 5), PreconditionError);
}

TEST_CASE("verify_reduction_small") {
    CHECK(verify_reduction_small(fx::complete(5), 5, reduce_clique_to_itm(fx::complete(5), 5)));
    const Graph km = k6_minus_matching();
    CHECK_FALSE(oracle::clique(km, 5));
    CHECK(verify_reduction_small(km, 5, reduce_clique_to_itm(km, 5)));
    CHECK(oracle::induced_subgraph_of(reduce_clique_to_itm(fx::complete(6), 5).g_prime, reduce_clique_to_itm(fx::complete(6), 5).h));

    auto broken = reduce_clique_to_itm(fx::complete(5), 5);
    Graph g(broken.g_prime.n());
    for (const auto& [a, b] : broken.g_prime.edges())
        if (!(a == 0 && b == 5)) g.add_edge(a, b);
    broken.g_prime = g;
    CHECK_FALSE(verify_reduction_small(fx::complete(5), 5, broken));

    try {
        verify_reduction_small(fx::complete(7), 5, reduce_clique_to_itm(fx::complete(7), 5));
        FAIL("expected TooLarge");
    } catch (const PreconditionError& e) {
        CHECK(e.kind() == PreconditionKind::TooLarge);
    }
}

TEST_CASE("pad_with_dominating_clique") {
    const Graph g = pad_with_dominating_clique(fx::path(3), 2);
    CHECK(g.n() == 5);
    CHECK(g.m() == 2 + 1 + 6);
    CHECK(g.adjacent(3, 4));
    CHECK(g.adjacent(0, 4));
}

TEST_CASE("fuzzed reductions") {
    std::mt19937_64 rng(17);
    int planted = 0, free = 0, trials = 0;
    while (trials < 100) {
        const int n = 5 + static_cast<int>(rng() % 3);
        Graph g = fx::gnp(n, 0.6 + 0.1 * static_cast<double>(rng() % 4), rng);
        if (rng() % 3 == 0) {
            Graph full(n);
            for (const auto& e : g.edges()) full.add_edge(e.first, e.second);
            for (Vertex a = 0; a < 5; ++a)
                for (Vertex b = a + 1; b < 5; ++b)
                    if (!full.adjacent(a, b)) full.add_edge(a, b);
            g = full;
        }
        bool ok = true;
        for (Vertex v = 0; v < n; ++v) ok = ok && g.neighbors(v).size() >= 4;
        if (!ok || static_cast<int>(g.n() + g.m()) > 24) continue;
        ++trials;
        const auto out = reduce_clique_to_itm(g, 5);
        CHECK(out.g_prime.n() == g.n() + static_cast<int>(g.m()));
        CHECK(static_cast<std::size_t>(out.h.n()) == 5 + binom2(5));
        CHECK(is_at_free(out.g_prime));
        CHECK(verify_reduction_small(g, 5, out));
        (oracle::clique(g, 5) ? planted : free)++;
    }
    CHECK(planted > 10);
    CHECK(free > 10);
}
