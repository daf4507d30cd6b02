#include "atfp/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "atfp/generators.hpp"
#include "atfp/idp_dp.hpp"
#include "atfp/oracles.hpp"

namespace atfp {

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(trial) + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Instance fuzz_instance(std::uint64_t seed, int trial) {
    const std::uint64_t s = trial_seed(seed, trial);
    std::mt19937_64 rng(s);
    const int n = 4 + static_cast<int>(rng() % 7);
    const int k = 1 + static_cast<int>(rng() % 3);
    return gen_random(static_cast<GraphModel>(trial % 4), n, std::min(k, n / 2), s);
}

std::optional<std::string> idp_disagreement(const Instance& inst) {
    std::vector<Edge> pairs;
    for (const auto& p : inst.pairs) pairs.emplace_back(p.s, p.t);
    const bool expect = oracle::idp(inst.g, pairs).yes;
    try {
        const auto got = solve_idp(inst);
        if (got.yes != expect)
            return std::string("solver says ") + (got.yes ? "yes" : "no") + ", oracle says " + (expect ? "yes" : "no");
    } catch (const std::exception& e) {
        return std::string("solver threw: ") + e.what();
    }
    return std::nullopt;
}

Instance shrink_instance(Instance inst, const std::function<bool(const Instance&)>& still_bad) {
    bool progress = true;
    while (progress) {
        progress = false;
        for (Vertex v = inst.g.n() - 1; v >= 0; --v) {
            VertexSet keep;
            for (Vertex u = 0; u < inst.g.n(); ++u)
                if (u != v) keep.push_back(u);
            const auto sub = induced_subgraph(inst.g, keep);
            Instance cand{sub.graph, {}};
            for (const auto& p : inst.pairs)
                if (p.s != v && p.t != v) cand.pairs.push_back({p.s - (p.s > v), p.t - (p.t > v)});
            if (still_bad(cand)) {
                inst = std::move(cand);
                progress = true;
            }
        }
        for (std::size_t i = inst.pairs.size(); i-- > 0;) {
            Instance cand = inst;
            cand.pairs.erase(cand.pairs.begin() + static_cast<std::ptrdiff_t>(i));
            if (still_bad(cand)) {
                inst = std::move(cand);
                progress = true;
            }
        }
    }
    return inst;
}

FuzzReport run_fuzz(int trials, std::uint64_t seed, int workers) {
    FuzzReport rep;
    rep.trials = trials;
    std::atomic<int> next{0};
    std::atomic<int> yes{0};
    std::mutex mu;
    int first_bad = trials;
    std::string first_detail;

    auto work = [&] {
        while (true) {
            const int t = next.fetch_add(1);
            if (t >= trials) return;
            {
                std::lock_guard lock(mu);
                if (t > first_bad) return;
            }
            const Instance inst = fuzz_instance(seed, t);
            std::vector<Edge> pairs;
            for (const auto& p : inst.pairs) pairs.emplace_back(p.s, p.t);
            if (oracle::idp(inst.g, pairs).yes) yes.fetch_add(1);
            if (auto why = idp_disagreement(inst)) {
                std::lock_guard lock(mu);
                if (t < first_bad) {
                    first_bad = t;
                    first_detail = *why;
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < std::max(1, workers); ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    rep.yes = yes.load();
    if (first_bad < trials) {
        rep.failed_trial = first_bad;
        rep.detail = first_detail;
        rep.reproducer = shrink_instance(fuzz_instance(seed, first_bad),
                                         [](const Instance& c) { return idp_disagreement(c).has_value(); });
    }
    return rep;
}

}  // namespace atfp
